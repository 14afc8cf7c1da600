"""Reductions from MAX CUT and INDEPENDENT SET to 2-local Hamiltonians.

Both reductions produce diagonal Hamiltonians whose spectrum sits on the
nonnegative integers, with thresholds a = offset - target + 0.5 and
b = a + 0.25. Thresholds are kept as integer quarter-counts so that every
downstream comparison is exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graphs import Assignment, Graph
from .operators import (
    LocalHamiltonian,
    projector_even,
    projector_one_one,
    projector_zero,
)

DEFAULT_ALPHA = Fraction(2)


@dataclass(frozen=True)
class PromiseInstance:
    """The (a, b) threshold pair, stored as quarter-integers.

    gap_verified records whether the 1/n^alpha gap condition was checked;
    it only applies for n >= 3.
    """

    a_quarters: int
    b_quarters: int
    n: int
    alpha: Fraction = DEFAULT_ALPHA

    def __post_init__(self):
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        if self.alpha <= 0:
            raise ValueError("alpha must be positive")
        if self.b_quarters <= self.a_quarters:
            raise ValueError("promise requires b > a")
        if self.n >= 3 and not self.gap_satisfied:
            raise ValueError("gap condition b - a > n^-alpha violated")

    @property
    def a(self):
        return self.a_quarters / 4.0

    @property
    def b(self):
        return self.b_quarters / 4.0

    @property
    def gap_verified(self):
        """False for n < 3, where the paper-style gap bound is not claimed."""
        return self.n >= 3

    @property
    def gap_satisfied(self):
        # (b - a) > n^-alpha, compared exactly in rational arithmetic
        gap = Fraction(self.b_quarters - self.a_quarters, 4)
        p, q = self.alpha.numerator, self.alpha.denominator
        # gap > n^(-p/q)  <=>  gap^q * n^p > 1
        return (gap**q) * (Fraction(self.n) ** p) > 1

    def sidecar_line(self, kind, target, offset):
        return (
            f"promise a_quarters={self.a_quarters} b_quarters={self.b_quarters} "
            f"alpha={self.alpha} n={self.n} kind={kind} target={target} "
            f"offset={offset}"
        )


@dataclass(frozen=True)
class ReductionOutput:
    hamiltonian: LocalHamiltonian
    promise: PromiseInstance
    source_kind: str  # "maxcut" | "indset"
    target: int  # the cut weight w or set size v being asked about
    offset: int  # |E| (or total weight) for maxcut, |V| for indset

    def __post_init__(self):
        if self.source_kind not in ("maxcut", "indset"):
            raise ValueError(f"unknown source kind {self.source_kind!r}")
        expected_a = 4 * (self.offset - self.target) + 2
        if self.promise.a_quarters != expected_a:
            raise ValueError("thresholds inconsistent with target/offset")
        if self.promise.b_quarters != expected_a + 1:
            raise ValueError("thresholds inconsistent with target/offset")


def cut_weight(graph, assignment):
    """|E_01| + |E_10|: edges whose endpoints land in different classes."""
    _check_len(graph, assignment)
    bits = assignment.bits
    return sum(
        w for (k, l), w in zip(graph.edges, graph.edge_weights)
        if bits[k - 1] != bits[l - 1]
    )


def even_edge_count(graph, assignment):
    """|E_00| + |E_11|; complements cut_weight to the total edge weight."""
    _check_len(graph, assignment)
    bits = assignment.bits
    return sum(
        w for (k, l), w in zip(graph.edges, graph.edge_weights)
        if bits[k - 1] == bits[l - 1]
    )


def is_value(graph, assignment):
    """Selected-vertex count minus the both-endpoints-selected penalty."""
    _check_len(graph, assignment)
    bits = assignment.bits
    selected = sum(bits)
    penalty = sum(1 for k, l in graph.edges if bits[k - 1] and bits[l - 1])
    return selected - penalty


def independence_penalty(graph, assignment):
    """Number of edges with both endpoints selected."""
    _check_len(graph, assignment)
    bits = assignment.bits
    return sum(1 for k, l in graph.edges if bits[k - 1] and bits[l - 1])


def reduce_maxcut(graph, w, allow_weighted=False):
    """One agreement projector per edge; energy of |x> is the number of
    uncut edges, so a cut of weight >= w exists iff min energy <= |E| - w.

    Weighted graphs (opt-in): an edge of weight c contributes c unit-norm
    copies of the projector, and the offset becomes the total weight.
    """
    if not graph.is_unweighted and not allow_weighted:
        raise ValueError("weighted graph requires allow_weighted=True")
    offset = graph.total_weight
    if not (1 <= w <= offset):
        raise ValueError(f"target cut weight must be in [1, {offset}]")
    p_even = projector_even()
    terms = []
    for (k, l), c in zip(graph.edges, graph.edge_weights):
        terms.extend(p_even.bound_to((k, l)) for _ in range(c))
    return _package(graph, terms, "maxcut", w, offset)


def reduce_independent_set(graph, v):
    """One vacancy projector per vertex plus one conflict projector per
    edge; energy of |x> is |V| - (selected - penalty), so an independent
    set of size >= v exists iff min energy <= |V| - v."""
    if not (1 <= v <= graph.n_vertices):
        raise ValueError(f"target set size must be in [1, {graph.n_vertices}]")
    p0 = projector_zero()
    p11 = projector_one_one()
    terms = [p0.bound_to((k,)) for k in range(1, graph.n_vertices + 1)]
    terms += [p11.bound_to((k, l)) for k, l in graph.edges]
    return _package(graph, terms, "indset", v, graph.n_vertices)


def _package(graph, terms, kind, target, offset):
    n = graph.n_vertices
    promise = PromiseInstance(
        a_quarters=4 * (offset - target) + 2,
        b_quarters=4 * (offset - target) + 3,
        n=n,
    )
    ham = LocalHamiltonian(n_qubits=n, locality=2, terms=tuple(terms))
    return ReductionOutput(ham, promise, kind, target, offset)


def repair_steps(graph, assignment):
    """Yield every intermediate assignment of the repair loop, the input
    first and the repaired (independent) assignment last."""
    _check_len(graph, assignment)
    bits = list(assignment.bits)
    yield Assignment(tuple(bits))
    for _ in range(sum(bits)):
        violation = next(
            ((k, l) for k, l in graph.edges if bits[k - 1] and bits[l - 1]), None
        )
        if violation is None:
            return
        bits[violation[0] - 1] = 0
        yield Assignment(tuple(bits))


def repair_independent_set(graph, assignment):
    """Drop vertices until the selected set is independent.

    While some edge has both endpoints selected, clear the smaller endpoint
    of the lexicographically first such edge. Each step removes one vertex
    and at least one conflicting edge, so the objective never decreases and
    the loop runs at most sum(X_k) times.
    """
    for assignment in repair_steps(graph, assignment):
        pass
    return assignment


def parse_promise_line(line):
    """Parse a 'promise ...' sidecar line into (PromiseInstance, kind,
    target, offset)."""
    fields = line.split()
    if not fields or fields[0] != "promise":
        raise ValueError("not a promise line")
    kv = {}
    for f in fields[1:]:
        key, _, value = f.partition("=")
        if not value:
            raise ValueError(f"bad promise field {f!r}")
        kv[key] = value
    try:
        promise = PromiseInstance(
            a_quarters=int(kv["a_quarters"]),
            b_quarters=int(kv["b_quarters"]),
            n=int(kv["n"]),
            alpha=Fraction(kv.get("alpha", "2")),
        )
        kind = kv["kind"]
        target = int(kv["target"])
        offset = int(kv["offset"])
    except KeyError as e:
        raise ValueError(f"promise line missing field {e.args[0]}") from None
    return promise, kind, target, offset


def _check_len(graph, assignment):
    if len(assignment) != graph.n_vertices:
        raise ValueError("assignment length does not match vertex count")
