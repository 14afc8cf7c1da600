"""Graph data model, DIMACS-style file I/O, and deterministic generators.

Vertices are 1-based in files and in the public API. Edges are stored as
ordered pairs (k, l) with k < l, sorted lexicographically, so that equal
graphs always serialize to identical bytes.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field


class GraphFormatError(ValueError):
    """Malformed graph file; carries the 1-based offending line number."""

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Graph:
    n_vertices: int
    edges: tuple[tuple[int, int], ...]
    edge_weights: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if self.n_vertices < 1:
            raise ValueError("graph needs at least one vertex")
        if not self.edge_weights:
            object.__setattr__(self, "edge_weights", (1,) * len(self.edges))
        if len(self.edge_weights) != len(self.edges):
            raise ValueError("edge_weights length differs from edge count")
        seen = set()
        prev = None
        for (k, l), w in zip(self.edges, self.edge_weights):
            if k == l:
                raise ValueError(f"self-loop at vertex {k}")
            if not (1 <= k < l <= self.n_vertices):
                raise ValueError(f"edge ({k},{l}) violates 1 <= k < l <= n")
            if (k, l) in seen:
                raise ValueError(f"duplicate edge ({k},{l})")
            if prev is not None and (k, l) < prev:
                raise ValueError("edge list not sorted")
            if w < 1:
                raise ValueError(f"edge ({k},{l}) has non-positive weight {w}")
            seen.add((k, l))
            prev = (k, l)

    @property
    def n_edges(self):
        return len(self.edges)

    @property
    def total_weight(self):
        return sum(self.edge_weights)

    @property
    def is_unweighted(self):
        return all(w == 1 for w in self.edge_weights)

    def degrees(self):
        deg = [0] * self.n_vertices
        for k, l in self.edges:
            deg[k - 1] += 1
            deg[l - 1] += 1
        return deg


def make_graph(n_vertices, edges, weights=None):
    """Build a canonical Graph from raw (possibly unordered) edge pairs.

    Edges (u, v) with u > v are flipped; the list is then sorted. Self-loops
    and duplicates raise ValueError.
    """
    if weights is None:
        weights = [1] * len(edges)
    normalized = []
    for (u, v), w in zip(edges, weights):
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        normalized.append(((min(u, v), max(u, v)), w))
    normalized.sort(key=lambda ew: ew[0])
    return Graph(
        n_vertices,
        tuple(e for e, _ in normalized),
        tuple(w for _, w in normalized),
    )


@dataclass(frozen=True)
class Assignment:
    """A bit vector X_1..X_n; doubles as basis state, cut, and vertex subset."""

    bits: tuple[int, ...]

    def __post_init__(self):
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("assignment bits must be 0 or 1")

    def __len__(self):
        return len(self.bits)

    @classmethod
    def from_index(cls, index, n):
        # qubit 1 is the most significant bit
        return cls(tuple((index >> (n - k)) & 1 for k in range(1, n + 1)))

    def to_index(self):
        idx = 0
        for b in self.bits:
            idx = (idx << 1) | b
        return idx

    def bitstring(self):
        return "".join(str(b) for b in self.bits)

    def ones(self):
        """1-based vertices with X_k = 1."""
        return frozenset(k for k, b in enumerate(self.bits, start=1) if b)


def parse_graph(text):
    """Parse the DIMACS-like edge format into a canonical Graph.

    Format: optional "c " comment lines, one "p edge <n> <m>" header, then
    m lines "e <u> <v>" (an optional integer weight is accepted as a third
    field). Errors report the offending line number.
    """
    n = None
    m_declared = None
    edges = []
    weights = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if n is not None:
                raise GraphFormatError("duplicate problem header", lineno)
            if len(fields) != 4 or fields[1] != "edge":
                raise GraphFormatError("header must be 'p edge <n> <m>'", lineno)
            try:
                n = int(fields[2])
                m_declared = int(fields[3])
            except ValueError:
                raise GraphFormatError("non-integer header fields", lineno) from None
            if n < 1 or m_declared < 0:
                raise GraphFormatError("header counts out of range", lineno)
        elif fields[0] == "e":
            if n is None:
                raise GraphFormatError("edge before problem header", lineno)
            if len(fields) not in (3, 4):
                raise GraphFormatError("edge line must be 'e <u> <v> [w]'", lineno)
            try:
                u, v = int(fields[1]), int(fields[2])
                w = int(fields[3]) if len(fields) == 4 else 1
            except ValueError:
                raise GraphFormatError("non-integer edge fields", lineno) from None
            if not (1 <= u <= n) or not (1 <= v <= n):
                raise GraphFormatError(
                    f"vertex out of range [1, {n}] in edge ({u},{v})", lineno
                )
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}", lineno)
            if w < 1:
                raise GraphFormatError(f"non-positive edge weight {w}", lineno)
            k, l = min(u, v), max(u, v)
            if (k, l) in seen:
                raise GraphFormatError(f"duplicate edge ({k},{l})", lineno)
            seen.add((k, l))
            edges.append((k, l))
            weights.append(w)
        else:
            raise GraphFormatError(f"unrecognized line type {fields[0]!r}", lineno)
    if n is None:
        raise GraphFormatError("missing 'p edge' header")
    if len(edges) != m_declared:
        raise GraphFormatError(
            f"declared {m_declared} edges but found {len(edges)}"
        )
    return make_graph(n, edges, weights)


def serialize_graph(graph):
    """Canonical text form; parse(serialize(G)) == G."""
    lines = [f"p edge {graph.n_vertices} {graph.n_edges}"]
    for (k, l), w in zip(graph.edges, graph.edge_weights):
        if w == 1:
            lines.append(f"e {k} {l}")
        else:
            lines.append(f"e {k} {l} {w}")
    return "\n".join(lines) + "\n"


GENERATOR_KINDS = ("cycle", "complete", "random_gnm", "random_regular")

_PAIRING_RETRIES = 1000


def generate_graph(kind, n, params=None, seed=0):
    """Deterministic test-instance generator.

    kinds: cycle, complete, random_gnm (params: m), random_regular
    (params: d, via the pairing model with rejection).
    """
    params = params or {}
    if n < 1:
        raise ValueError("n must be >= 1")
    if kind == "cycle":
        if n == 1:
            return make_graph(1, [])
        if n == 2:
            return make_graph(2, [(1, 2)])
        return make_graph(n, [(k, k + 1) for k in range(1, n)] + [(1, n)])
    if kind == "complete":
        return make_graph(
            n, [(k, l) for k in range(1, n + 1) for l in range(k + 1, n + 1)]
        )
    if kind == "random_gnm":
        m = params.get("m")
        max_m = n * (n - 1) // 2
        if m is None or not (0 <= m <= max_m):
            raise ValueError(f"random_gnm needs 0 <= m <= {max_m}")
        rng = random.Random(seed)
        all_pairs = [(k, l) for k in range(1, n + 1) for l in range(k + 1, n + 1)]
        return make_graph(n, rng.sample(all_pairs, m))
    if kind == "random_regular":
        d = params.get("d")
        if d is None or not (0 <= d < n):
            raise ValueError("random_regular needs 0 <= d < n")
        if (n * d) % 2 != 0:
            raise ValueError("random_regular needs n*d even")
        return _random_regular(n, d, seed)
    raise ValueError(f"unknown generator kind {kind!r}")


def _random_regular(n, d, seed):
    # Pairing (configuration) model: shuffle d copies of every vertex, pair
    # them up, reject the sample on any loop or multi-edge.
    rng = random.Random(seed)
    if d == 0:
        return make_graph(n, [])
    for _ in range(_PAIRING_RETRIES):
        stubs = [k for k in range(1, n + 1) for _ in range(d)]
        rng.shuffle(stubs)
        edges = set()
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v:
                ok = False
                break
            e = (min(u, v), max(u, v))
            if e in edges:
                ok = False
                break
            edges.add(e)
        if ok:
            return make_graph(n, sorted(edges))
    raise ValueError(
        f"pairing model failed for n={n}, d={d} after {_PAIRING_RETRIES} tries"
    )
