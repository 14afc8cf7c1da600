"""Local Hamiltonian representation, projectors, dense embedding, LHAM I/O.

A LocalHamiltonian is a sum of small PSD terms, each attached to a set of
qubits. Qubit 1 is the most significant bit: |X_1>...|X_n> sits at basis
index sum_k X_k 2^(n-k). All Hamiltonians produced by the graph reductions
are diagonal with integer entries, so energies are evaluated exactly in
integer arithmetic; a dense matrix path exists as an oracle for small n.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

HERMITIAN_TOL = 1e-12
PSD_TOL = 1e-12
NORM_TOL = 1e-12

MAX_DENSE_QUBITS = 12


class LhamFormatError(ValueError):
    """Malformed LHAM file; carries the 1-based offending line number."""

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class LocalTerm:
    """One summand: a 2^s x 2^s matrix on an ordered set of s qubits.

    qubits may be None for a template term (e.g. a projector constant)
    that gets bound to concrete qubits at use sites.
    """

    matrix: np.ndarray
    qubits: tuple[int, ...] | None = None
    diagonal_flag: bool = field(init=False)

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)
        dim = m.shape[0]
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError("term matrix must be square")
        arity = dim.bit_length() - 1
        if 2**arity != dim or arity not in (1, 2, 3):
            raise ValueError("term dimension must be 2, 4, or 8")
        if self.qubits is not None:
            q = tuple(self.qubits)
            if len(q) != arity:
                raise ValueError("qubit count does not match matrix dimension")
            if len(set(q)) != len(q):
                raise ValueError("term qubits must be distinct")
            object.__setattr__(self, "qubits", q)
        off = m - np.diag(np.diagonal(m))
        object.__setattr__(self, "diagonal_flag", bool(np.all(off == 0)))

    @property
    def arity(self):
        return self.matrix.shape[0].bit_length() - 1

    def bound_to(self, qubits):
        return LocalTerm(self.matrix, tuple(qubits))

    def integer_diagonal(self):
        """Real int64 diagonal if the term is diagonal with exact integer
        entries, else None."""
        if not self.diagonal_flag:
            return None
        d = np.diagonal(self.matrix)
        if np.any(d.imag != 0):
            return None
        r = d.real
        if np.any(r != np.rint(r)):
            return None
        return np.rint(r).astype(np.int64)


@dataclass(frozen=True)
class LocalHamiltonian:
    n_qubits: int
    locality: int
    terms: tuple[LocalTerm, ...]

    def __post_init__(self):
        if self.n_qubits < 1:
            raise ValueError("need at least one qubit")
        object.__setattr__(self, "terms", tuple(self.terms))
        for t in self.terms:
            if t.qubits is None:
                raise ValueError("all terms must have bound qubits")
            if t.arity > self.locality:
                raise ValueError("term arity exceeds locality bound")
            if any(not (1 <= q <= self.n_qubits) for q in t.qubits):
                raise ValueError("term qubit index out of range")

    @property
    def is_diagonal(self):
        return all(t.diagonal_flag for t in self.terms)


@dataclass(frozen=True)
class EnergyValue:
    """An energy that is exact when it is a quarter-integer.

    quarters holds 4x the value for exact spectra (the reductions only ever
    produce integers); float_value is always populated.
    """

    quarters: int | None
    float_value: float

    @classmethod
    def from_int(cls, k):
        return cls(4 * int(k), float(k))

    @classmethod
    def from_quarters(cls, q):
        return cls(int(q), q / 4.0)

    @classmethod
    def from_float(cls, x):
        return cls(None, float(x))

    @property
    def is_exact(self):
        return self.quarters is not None

    def __float__(self):
        return self.float_value


def projector_even():
    """|00><00| + |11><11|: counts an edge whose endpoints agree."""
    return LocalTerm(np.diag([1.0, 0.0, 0.0, 1.0]))


def projector_zero():
    """|0><0|: counts an unselected vertex."""
    return LocalTerm(np.diag([1.0, 0.0]))


def projector_one_one():
    """|11><11|: counts an edge with both endpoints selected."""
    return LocalTerm(np.diag([0.0, 0.0, 0.0, 1.0]))


def _sub_index(assignment_bits, qubits):
    sub = 0
    for q in qubits:
        sub = (sub << 1) | assignment_bits[q - 1]
    return sub


def basis_energy(hamiltonian, assignment):
    """<x|H|x> for a diagonal H; exact int when all entries are integers."""
    if len(assignment) != hamiltonian.n_qubits:
        raise ValueError("assignment length does not match qubit count")
    bits = assignment.bits
    total_int = 0
    total_float = 0.0
    exact = True
    for t in hamiltonian.terms:
        if not t.diagonal_flag:
            raise ValueError("basis_energy requires diagonal terms")
        sub = _sub_index(bits, t.qubits)
        d = t.integer_diagonal()
        if d is not None:
            total_int += int(d[sub])
        else:
            exact = False
            total_float += float(t.matrix[sub, sub].real)
    if exact:
        return EnergyValue.from_int(total_int)
    return EnergyValue.from_float(total_float + total_int)


def full_diagonal(hamiltonian, dtype=None):
    """All 2^n diagonal energies of a diagonal Hamiltonian as one vector.

    int64 when every term has an exact integer diagonal, float64 otherwise.
    Intended for n small enough that a 2^n vector fits in memory.
    """
    n = hamiltonian.n_qubits
    idx = np.arange(1 << n, dtype=np.int64)
    int_terms = [t.integer_diagonal() for t in hamiltonian.terms]
    exact = all(d is not None for d in int_terms)
    if dtype is None:
        dtype = np.int64 if exact else np.float64
    out = np.zeros(1 << n, dtype=dtype)
    for t in hamiltonian.terms:
        if not t.diagonal_flag:
            raise ValueError("full_diagonal requires diagonal terms")
        sub = np.zeros(1 << n, dtype=np.int64)
        for q in t.qubits:
            sub = (sub << 1) | ((idx >> (n - q)) & 1)
        d = t.integer_diagonal()
        if d is None:
            d = np.diagonal(t.matrix).real.astype(dtype)
        out += d.astype(dtype)[sub]
    return out


def embed_dense(term, qubits, n_qubits, max_qubits=MAX_DENSE_QUBITS):
    """A[S]: the term acting on `qubits`, identity elsewhere, as a dense
    2^n x 2^n matrix."""
    if n_qubits > max_qubits:
        raise ValueError(f"dense embedding limited to {max_qubits} qubits")
    qubits = tuple(qubits)
    if len(set(qubits)) != len(qubits):
        raise ValueError("embedding qubits must be distinct")
    if any(not (1 <= q <= n_qubits) for q in qubits):
        raise ValueError("embedding qubit out of range")
    s = len(qubits)
    if term.matrix.shape[0] != 1 << s:
        raise ValueError("qubit count does not match term dimension")
    rest = [q for q in range(1, n_qubits + 1) if q not in qubits]
    big = np.kron(term.matrix, np.eye(1 << (n_qubits - s)))
    # big's bit j (MSB first) belongs to qubit order[j]; remap to the
    # natural order where qubit q owns bit q-1 from the MSB.
    order = list(qubits) + rest
    idx = np.arange(1 << n_qubits, dtype=np.int64)
    perm = np.zeros(1 << n_qubits, dtype=np.int64)
    for j, q in enumerate(order):
        perm |= ((idx >> (n_qubits - q)) & 1) << (n_qubits - 1 - j)
    return big[np.ix_(perm, perm)]


def dense_matrix(hamiltonian, max_qubits=MAX_DENSE_QUBITS):
    """Entrywise sum of the embedded terms; oracle for small n."""
    n = hamiltonian.n_qubits
    if n > max_qubits:
        raise ValueError(f"dense matrix limited to {max_qubits} qubits")
    out = np.zeros((1 << n, 1 << n), dtype=complex)
    for t in hamiltonian.terms:
        out += embed_dense(t, t.qubits, n, max_qubits=max_qubits)
    return out


@dataclass(frozen=True)
class TermValidation:
    hermitian: bool
    positive_semidefinite: bool
    norm_bounded: bool
    min_eigenvalue: float
    max_eigenvalue: float

    @property
    def ok(self):
        return self.hermitian and self.positive_semidefinite and self.norm_bounded


def validate_term(term):
    """Check the local-term contract: Hermitian, PSD, operator norm <= 1."""
    m = term.matrix
    hermitian = bool(np.max(np.abs(m - m.conj().T)) <= HERMITIAN_TOL)
    eigs = np.linalg.eigvalsh((m + m.conj().T) / 2)
    return TermValidation(
        hermitian=hermitian,
        positive_semidefinite=bool(eigs[0] >= -PSD_TOL),
        norm_bounded=bool(max(abs(eigs[0]), abs(eigs[-1])) <= 1 + NORM_TOL),
        min_eigenvalue=float(eigs[0]),
        max_eigenvalue=float(eigs[-1]),
    )


def _format_complex(z):
    return f"{z.real:.17g},{z.imag:.17g}"


def serialize_lham(hamiltonian, trailer=None):
    """Line-oriented LHAM text. Diagonal integer terms use the compact 'd'
    form; general terms use 't' with row-major re,im entries. `trailer`
    (e.g. a promise sidecar line) is appended verbatim."""
    lines = ["lham 1", f"n {hamiltonian.n_qubits}", f"s {hamiltonian.locality}"]
    for t in hamiltonian.terms:
        qs = " ".join(str(q) for q in t.qubits)
        d = t.integer_diagonal()
        if d is not None:
            lines.append(f"d {t.arity} {qs}")
            lines.append(" ".join(str(int(v)) for v in d))
        else:
            lines.append(f"t {t.arity} {qs}")
            lines.append(" ".join(_format_complex(z) for z in t.matrix.ravel()))
    if trailer:
        lines.append(trailer.rstrip("\n"))
    return "\n".join(lines) + "\n"


def parse_lham(text):
    """Parse LHAM text; returns (LocalHamiltonian, trailer-or-None).

    The trailer is any final non-term line (the promise sidecar); its
    interpretation is left to the caller.
    """
    lines = text.splitlines()
    pos = 0

    def next_line():
        nonlocal pos
        while pos < len(lines):
            line = lines[pos].strip()
            pos += 1
            if line and not line.startswith("c"):
                return line, pos
        return None, pos

    line, lineno = next_line()
    if line != "lham 1":
        raise LhamFormatError("expected header 'lham 1'", lineno)
    line, lineno = next_line()
    if line is None or not line.startswith("n "):
        raise LhamFormatError("expected 'n <qubits>'", lineno)
    n = int(line.split()[1])
    line, lineno = next_line()
    if line is None or not line.startswith("s "):
        raise LhamFormatError("expected 's <locality>'", lineno)
    s = int(line.split()[1])

    terms = []
    trailer = None
    while True:
        line, lineno = next_line()
        if line is None:
            break
        fields = line.split()
        if fields[0] in ("d", "t"):
            try:
                arity = int(fields[1])
                qubits = tuple(int(q) for q in fields[2:])
            except ValueError:
                raise LhamFormatError("bad term header", lineno) from None
            if len(qubits) != arity:
                raise LhamFormatError("term arity/qubit mismatch", lineno)
            entries, lineno2 = next_line()
            if entries is None:
                raise LhamFormatError("missing term entries", lineno)
            values = entries.split()
            if fields[0] == "d":
                if len(values) != 1 << arity:
                    raise LhamFormatError(
                        f"expected {1 << arity} diagonal entries", lineno2
                    )
                try:
                    diag = [int(v) for v in values]
                except ValueError:
                    raise LhamFormatError("non-integer diagonal entry", lineno2) from None
                matrix = np.diag(np.array(diag, dtype=float))
            else:
                if len(values) != 1 << (2 * arity):
                    raise LhamFormatError(
                        f"expected {1 << (2 * arity)} matrix entries", lineno2
                    )
                try:
                    flat = [complex(float(re), float(im)) for re, im in
                            (v.split(",") for v in values)]
                except ValueError:
                    raise LhamFormatError("bad complex entry", lineno2) from None
                matrix = np.array(flat, dtype=complex).reshape(1 << arity, 1 << arity)
            terms.append(LocalTerm(matrix, qubits))
        else:
            trailer = line
            extra, lineno = next_line()
            if extra is not None:
                raise LhamFormatError("content after trailer line", lineno)
            break
    return LocalHamiltonian(n, s, tuple(terms)), trailer
