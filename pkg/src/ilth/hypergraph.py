"""k-uniform hypergraphs, the ILTH / ILTH2 cloning steps and the 2-section.

Vertex ids are ``0..n-1``. After one ILTH step the clone of vertex ``i`` is
``i + n``; after one ILTH2 step the ``j``-th clone of ``i`` is ``i + j*n``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

DEFAULT_MAX_EDGES = 10**7

Edge = tuple[int, ...]


class HypergraphError(ValueError):
    """An invariant of :class:`Hypergraph` or :class:`Graph` does not hold."""


class ResourceLimitError(RuntimeError):
    """A requested computation would exceed a configured size cap."""


def max_edges_cap() -> int:
    """Generation cap, overridable through ``ILTH_MAX_EDGES``."""
    raw = os.environ.get("ILTH_MAX_EDGES")
    if raw is None:
        return DEFAULT_MAX_EDGES
    cap = int(raw)
    if cap <= 0:
        raise ValueError("ILTH_MAX_EDGES must be positive")
    return cap


def _build_incidence(n: int, edges: Sequence[Edge]) -> tuple[tuple[int, ...], ...]:
    inc: list[list[int]] = [[] for _ in range(n)]
    for idx, e in enumerate(edges):
        for v in e:
            inc[v].append(idx)
    return tuple(tuple(x) for x in inc)


@dataclass(frozen=True, eq=False)
class Hypergraph:
    """Immutable k-uniform hypergraph.

    Use :meth:`from_edges` to build one; it sorts every hyperedge, builds the
    incidence index and validates. The raw constructor performs no checks so
    that :func:`validate` can be exercised on broken instances.
    """

    k: int
    n: int
    edges: tuple[Edge, ...]
    incidence: tuple[tuple[int, ...], ...] = field(repr=False)

    @classmethod
    def from_edges(cls, k: int, n: int, edges: Iterable[Iterable[int]]) -> "Hypergraph":
        canon = tuple(tuple(sorted(int(v) for v in e)) for e in edges)
        if any(v < 0 or v >= n for e in canon for v in e):
            bad = next(e for e in canon if any(v < 0 or v >= n for v in e))
            raise HypergraphError(f"vertex id out of range 0..{n - 1} in edge {bad}")
        h = cls(k, n, canon, _build_incidence(n, canon))
        validate(h)
        return h

    @classmethod
    def single_edge(cls, k: int) -> "Hypergraph":
        return cls.from_edges(k, k, [range(k)])

    @property
    def m(self) -> int:
        return len(self.edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return (self.k, self.n, self.edges) == (other.k, other.n, other.edges)

    def __hash__(self) -> int:
        return hash((self.k, self.n, self.edges))

    def same_edge_set(self, other: "Hypergraph") -> bool:
        return (self.k, self.n) == (other.k, other.n) and set(self.edges) == set(other.edges)

    @cached_property
    def edge_array(self) -> np.ndarray:
        """``(m, k)`` int64 array of sorted hyperedges."""
        return np.array(self.edges, dtype=np.int64).reshape(len(self.edges), self.k)

    @cached_property
    def incidence_matrix(self) -> np.ndarray:
        """``(m, n)`` 0/1 float64 matrix; float so that products go through BLAS."""
        mat = np.zeros((self.m, self.n), dtype=np.float64)
        if self.m:
            rows = np.repeat(np.arange(self.m), self.k)
            mat[rows, self.edge_array.ravel()] = 1.0
        return mat

    def degree(self, v: int) -> int:
        return len(self.incidence[v])

    def relabel(self, perm: Sequence[int]) -> "Hypergraph":
        """Image under the vertex bijection ``v -> perm[v]``."""
        return Hypergraph.from_edges(self.k, self.n, ([perm[v] for v in e] for e in self.edges))


def validate(h: Hypergraph) -> None:
    """Raise :class:`HypergraphError` describing the first violated invariant."""
    if h.k < 1:
        raise HypergraphError(f"k must be positive, got {h.k}")
    if h.n < 0:
        raise HypergraphError(f"n must be nonnegative, got {h.n}")
    seen: dict[Edge, int] = {}
    for idx, e in enumerate(h.edges):
        if len(e) != h.k:
            raise HypergraphError(f"edge {idx} has cardinality {len(e)}, expected k={h.k}")
        for a, b in zip(e, e[1:]):
            if a >= b:
                raise HypergraphError(f"edge {idx} is not strictly ascending: {e}")
        for v in e:
            if v < 0 or v >= h.n:
                raise HypergraphError(f"edge {idx} has vertex {v} outside 0..{h.n - 1}")
        if e in seen:
            raise HypergraphError(f"duplicate edge {e} at indices {seen[e]} and {idx}")
        seen[e] = idx
    if len(h.incidence) != h.n:
        raise HypergraphError("stale incidence: index length differs from n")
    expected = _build_incidence(h.n, h.edges)
    for v in range(h.n):
        if tuple(h.incidence[v]) != expected[v]:
            raise HypergraphError(f"stale incidence at vertex {v}")


@dataclass(frozen=True)
class Lineage:
    """Parent maps for one step ``H_{t-1} -> H_t``.

    ``clone_rank[v]`` is 0 for a surviving vertex and ``j >= 1`` for the
    ``j``-th clone (ILTH only has rank 1 clones).
    """

    generation: int
    parent_n: int
    vertex_parent: np.ndarray
    edge_parent: np.ndarray
    clone_rank: np.ndarray

    @property
    def n(self) -> int:
        return len(self.vertex_parent)


def _check_cap(predicted: int, cap: int | None) -> None:
    cap = max_edges_cap() if cap is None else cap
    if predicted > cap:
        raise ResourceLimitError(f"predicted {predicted} hyperedges exceeds cap {cap}")


def ilth_step(h: Hypergraph, generation: int = 1) -> tuple[Hypergraph, Lineage]:
    """One ILTH step: clone every vertex and every single-vertex substitution."""
    n = h.n
    edges: list[Edge] = list(h.edges)
    edge_parent = list(range(h.m))
    for idx, e in enumerate(h.edges):
        for x in e:
            # the clone x+n is larger than every old id
            edges.append(tuple(v for v in e if v != x) + (x + n,))
            edge_parent.append(idx)
    out = Hypergraph(h.k, 2 * n, tuple(edges), _build_incidence(2 * n, edges))
    ids = np.arange(2 * n, dtype=np.int64)
    lineage = Lineage(
        generation=generation,
        parent_n=n,
        vertex_parent=ids % n if n else ids,
        edge_parent=np.array(edge_parent, dtype=np.int64),
        clone_rank=(ids >= n).astype(np.int64),
    )
    return out, lineage


def ilth_iterate(
    h0: Hypergraph, t: int, max_edges: int | None = None
) -> tuple[Hypergraph, list[Lineage]]:
    if t < 0:
        raise ValueError("t must be nonnegative")
    _check_cap((h0.k + 1) ** t * h0.m, max_edges)
    h, lineages = h0, []
    for gen in range(1, t + 1):
        h, lin = ilth_step(h, gen)
        lineages.append(lin)
    return h, lineages


def ilth2_step(h: Hypergraph, generation: int = 1) -> tuple[Hypergraph, Lineage]:
    """One ILTH2 step: ``k-1`` clones per vertex plus a clone-family hyperedge."""
    k, n = h.k, h.n
    if k < 2:
        raise HypergraphError("ILTH2 requires k >= 2")
    edges: list[Edge] = list(h.edges)
    edge_parent = list(range(h.m))
    for idx, e in enumerate(h.edges):
        for x in e:
            rest = tuple(v for v in e if v != x)
            for j in range(1, k):
                edges.append(rest + (x + j * n,))
                edge_parent.append(idx)
    for v in range(n):
        edges.append(tuple(v + j * n for j in range(k)))
        edge_parent.append(-1)
    new_n = k * n
    out = Hypergraph(k, new_n, tuple(edges), _build_incidence(new_n, edges))
    ids = np.arange(new_n, dtype=np.int64)
    lineage = Lineage(
        generation=generation,
        parent_n=n,
        vertex_parent=ids % n if n else ids,
        edge_parent=np.array(edge_parent, dtype=np.int64),
        clone_rank=ids // n if n else ids,
    )
    return out, lineage


def ilth2_edge_count(k: int, n0: int, m0: int, t: int) -> int:
    n, m = n0, m0
    for _ in range(t):
        n, m = k * n, (k * k - k + 1) * m + n
    return m


def ilth2_iterate(
    h0: Hypergraph, t: int, max_edges: int | None = None
) -> tuple[Hypergraph, list[Lineage]]:
    if t < 0:
        raise ValueError("t must be nonnegative")
    _check_cap(ilth2_edge_count(h0.k, h0.n, h0.m, t), max_edges)
    h, lineages = h0, []
    for gen in range(1, t + 1):
        h, lin = ilth2_step(h, gen)
        lineages.append(lin)
    return h, lineages


def project_to_initial(lineages: Sequence[Lineage], v: int) -> int:
    """Ancestor of ``v`` in the first generation (clones map to parents)."""
    if lineages:
        n_final = lineages[-1].n
        if not 0 <= v < n_final:
            raise IndexError(f"vertex {v} outside 0..{n_final - 1}")
    elif v < 0:
        raise IndexError(f"vertex {v} is negative")
    for lin in reversed(lineages):
        v = int(lin.vertex_parent[v])
    return v


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with sorted adjacency lists."""

    n: int
    adjacency: tuple[tuple[int, ...], ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise HypergraphError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise HypergraphError(f"edge ({u}, {v}) outside 0..{n - 1}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    @cached_property
    def neighbor_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(a) for a in self.adjacency)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbor_sets[u]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.float64)
        for u, nb in enumerate(self.adjacency):
            a[u, list(nb)] = 1.0
        return a

    def induced(self, vertices: Sequence[int]) -> "Graph":
        pos = {v: i for i, v in enumerate(vertices)}
        es = [(pos[u], pos[v]) for u in vertices for v in self.adjacency[u] if v in pos and u < v]
        return Graph.from_edges(len(vertices), es)

    def validate(self) -> None:
        if len(self.adjacency) != self.n:
            raise HypergraphError("adjacency length differs from n")
        for u, nb in enumerate(self.adjacency):
            if list(nb) != sorted(set(nb)):
                raise HypergraphError(f"neighbor list of {u} not sorted/unique")
            for v in nb:
                if v == u:
                    raise HypergraphError(f"self-loop at {u}")
                if u not in self.neighbor_sets[v]:
                    raise HypergraphError(f"asymmetric adjacency {u}-{v}")


def two_section(h: Hypergraph) -> Graph:
    nbrs: list[set[int]] = [set() for _ in range(h.n)]
    for e in h.edges:
        for v in e:
            nbrs[v].update(e)
    for v in range(h.n):
        nbrs[v].discard(v)
    return Graph(h.n, tuple(tuple(sorted(s)) for s in nbrs))


def ilt_prime_step(g: Graph) -> Graph:
    """Graph step: for each edge uv keep uv and add uv', u'v (clone of i is i+n)."""
    n = g.n
    es = []
    for u, v in g.edges():
        es += [(u, v), (u, v + n), (u + n, v)]
    return Graph.from_edges(2 * n, es)
