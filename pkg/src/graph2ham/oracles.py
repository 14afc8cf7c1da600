"""Exhaustive ground truth: brute-force graph solvers and minimum-energy
search over computational basis states.

The graph solvers are deliberately independent of the Hamiltonian code
paths (they work straight from edge bit masks), so agreement between the
two routes is a real check, not a tautology. All searches enumerate basis
indices in ascending order and break ties toward the smallest index, which
makes results independent of the worker count.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .graphs import Assignment
from .operators import EnergyValue, dense_matrix

MAX_ENUM_QUBITS = 28
_CHUNK = 1 << 20


class SizeGuardError(ValueError):
    pass


@dataclass(frozen=True)
class OracleResult:
    optimum: int
    witness: Assignment
    states_examined: int


def _check_enum_size(n, max_qubits):
    if n > max_qubits:
        raise SizeGuardError(
            f"enumeration over {n} qubits exceeds the guard ({max_qubits})"
        )


def _chunks(total):
    for start in range(0, total, _CHUNK):
        yield start, min(start + _CHUNK, total)


def _run_chunks(fn, total, workers):
    ranges = list(_chunks(total))
    if workers is None:
        workers = os.cpu_count() or 1
    if workers <= 1 or len(ranges) == 1:
        return [fn(a, b) for a, b in ranges]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda r: fn(*r), ranges))


def brute_force_max_cut(graph, workers=None, max_qubits=MAX_ENUM_QUBITS):
    """Maximum cut weight over all 2^n assignments."""
    n = graph.n_vertices
    _check_enum_size(n, max_qubits)
    edges = np.array(graph.edges, dtype=np.int64).reshape(-1, 2)
    weights = np.array(graph.edge_weights, dtype=np.int64)

    def chunk(start, stop):
        idx = np.arange(start, stop, dtype=np.int64)
        value = np.zeros(idx.shape[0], dtype=np.int64)
        for (k, l), w in zip(edges, weights):
            crossed = ((idx >> (n - k)) ^ (idx >> (n - l))) & 1
            value += w * crossed
        j = int(np.argmax(value))
        return int(value[j]), start + j

    return _best(graph, _run_chunks(chunk, 1 << n, workers))


def brute_force_max_independent_set(graph, workers=None, max_qubits=MAX_ENUM_QUBITS):
    """alpha(G): the largest vertex subset with no internal edge."""
    n = graph.n_vertices
    _check_enum_size(n, max_qubits)
    edges = np.array(graph.edges, dtype=np.int64).reshape(-1, 2)

    def chunk(start, stop):
        idx = np.arange(start, stop, dtype=np.int64)
        size = np.zeros(idx.shape[0], dtype=np.int64)
        for k in range(1, n + 1):
            size += (idx >> (n - k)) & 1
        independent = np.ones(idx.shape[0], dtype=bool)
        for k, l in edges:
            independent &= (((idx >> (n - k)) & (idx >> (n - l))) & 1) == 0
        value = np.where(independent, size, np.int64(-1))
        j = int(np.argmax(value))
        return int(value[j]), start + j

    return _best(graph, _run_chunks(chunk, 1 << n, workers))


def _best(graph, results):
    # maximize, ties to the smallest basis index; chunks arrive in order
    opt, at = results[0]
    for value, index in results[1:]:
        if value > opt:
            opt, at = value, index
    return OracleResult(
        optimum=opt,
        witness=Assignment.from_index(at, graph.n_vertices),
        states_examined=1 << graph.n_vertices,
    )


def _flatten_diagonal_terms(hamiltonian):
    """Pack diagonal terms into the flat arrays the scan kernels expect.

    Returns (shifts, term_ptr, diag, diag_ptr, exact) with integer diag
    when every entry is an exact integer, float diag otherwise.
    """
    n = hamiltonian.n_qubits
    shifts, term_ptr = [], [0]
    diags = []
    exact = True
    for t in hamiltonian.terms:
        if not t.diagonal_flag:
            raise ValueError("enumeration requires a diagonal Hamiltonian")
        shifts.extend(n - q for q in t.qubits)
        term_ptr.append(len(shifts))
        d = t.integer_diagonal()
        if d is None:
            exact = False
            d = np.diagonal(t.matrix).real.astype(np.float64)
        diags.append(d)
    dtype = np.int64 if exact else np.float64
    diag = (
        np.concatenate([d.astype(dtype) for d in diags])
        if diags
        else np.zeros(0, dtype=dtype)
    )
    diag_ptr = np.zeros(len(diags) + 1, dtype=np.int64)
    np.cumsum([d.shape[0] for d in diags], out=diag_ptr[1:])
    return (
        np.array(shifts, dtype=np.int64),
        np.array(term_ptr, dtype=np.int64),
        diag,
        diag_ptr,
        exact,
    )


def min_energy(hamiltonian, workers=None, max_qubits=MAX_ENUM_QUBITS):
    """Exhaustive minimum of <x|H|x> over all basis states.

    Returns (EnergyValue, Assignment); the witness is the smallest basis
    index among minimizers regardless of worker count.
    """
    n = hamiltonian.n_qubits
    _check_enum_size(n, max_qubits)
    shifts, term_ptr, diag, diag_ptr, exact = _flatten_diagonal_terms(hamiltonian)
    scan = _kernels.scan_min_int if exact else _kernels.scan_min_float

    def chunk(start, stop):
        return scan(start, stop, shifts, term_ptr, diag, diag_ptr)

    results = _run_chunks(chunk, 1 << n, workers)
    best, at = results[0]
    for value, index in results[1:]:
        if value < best:
            best, at = value, index
    energy = EnergyValue.from_int(best) if exact else EnergyValue.from_float(best)
    return energy, Assignment.from_index(at, n)


def dense_min_eigenvalue(hamiltonian, max_qubits=12):
    """Least eigenvalue via a full symmetric eigensolve; the general oracle
    for small n, diagonal or not."""
    matrix = dense_matrix(hamiltonian, max_qubits=max_qubits)
    return float(np.linalg.eigvalsh(matrix)[0])
