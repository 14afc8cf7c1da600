import random

import numpy as np

from graph2ham.decider import CASE1, CASE2, PROMISE_VIOLATION, decide
from graph2ham.graphs import generate_graph
from graph2ham.operators import LocalHamiltonian, LocalTerm
from graph2ham.oracles import (
    brute_force_max_cut,
    brute_force_max_independent_set,
)
from graph2ham.reductions import (
    PromiseInstance,
    reduce_independent_set,
    reduce_maxcut,
)

TRIANGLE = generate_graph("cycle", 3)


def test_triangle_maxcut_cases():
    out = reduce_maxcut(TRIANGLE, 2)
    d = decide(out.hamiltonian, out.promise)
    assert d.outcome == CASE1 and d.min_energy.quarters == 4

    out = reduce_maxcut(TRIANGLE, 3)
    d = decide(out.hamiltonian, out.promise)
    assert d.outcome == CASE2 and d.min_energy.quarters == 4


def test_promise_violation_detected():
    t = LocalTerm(np.diag([0.65, 1.0, 1.0, 1.0]), (1, 2))
    h = LocalHamiltonian(2, 2, (t,))
    p = PromiseInstance(a_quarters=2, b_quarters=3, n=2)
    assert decide(h, p).outcome == PROMISE_VIOLATION


def test_non_diagonal_dense_path():
    # an off-diagonal term with eigenvalues 0 and 1: min eigenvalue 0 <= a
    m = np.array([[0.5, 0.5], [0.5, 0.5]])
    h = LocalHamiltonian(2, 2, (LocalTerm(m, (1,)),))
    p = PromiseInstance(a_quarters=1, b_quarters=2, n=2)
    d = decide(h, p)
    assert d.outcome == CASE1
    assert d.witness is None
    assert not d.min_energy.is_exact


def test_reduction_decisions_match_oracles():
    rng = random.Random(31)
    for _ in range(12):
        n = rng.randint(3, 8)
        m = rng.randint(1, n * (n - 1) // 2)
        g = generate_graph("random_gnm", n, {"m": m}, seed=rng.getrandbits(32))
        maxcut = brute_force_max_cut(g).optimum
        alpha = brute_force_max_independent_set(g).optimum
        for w in range(1, g.n_edges + 1):
            out = reduce_maxcut(g, w)
            d = decide(out.hamiltonian, out.promise)
            assert d.outcome == (CASE1 if maxcut >= w else CASE2)
        for v in range(1, g.n_vertices + 1):
            out = reduce_independent_set(g, v)
            d = decide(out.hamiltonian, out.promise)
            assert d.outcome == (CASE1 if alpha >= v else CASE2)


def test_case1_targets_form_downward_closed_interval():
    g = generate_graph("random_gnm", 7, {"m": 12}, seed=77)
    maxcut = brute_force_max_cut(g).optimum
    outcomes = [
        decide(*((lambda o: (o.hamiltonian, o.promise))(reduce_maxcut(g, w))))
        for w in range(1, g.n_edges + 1)
    ]
    case1_ws = [w for w, d in enumerate(outcomes, start=1) if d.outcome == CASE1]
    assert case1_ws == list(range(1, maxcut + 1))
