"""Distances, diameter and Wiener index, all measured on the 2-section."""

from __future__ import annotations

from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .hypergraph import Graph, Hypergraph, two_section

INFINITE = "infinite"


@dataclass(frozen=True)
class DistanceSummary:
    diameter: Union[int, str]
    wiener_unordered: int
    average_distance: Fraction | None
    adjacent_pair_count: int
    connected: bool
    reachable_pairs: int

    def as_dict(self) -> dict:
        return {
            "diameter": self.diameter,
            "wiener_unordered": self.wiener_unordered,
            "average_distance": None if self.average_distance is None else str(self.average_distance),
            "average_distance_decimal": None
            if self.average_distance is None
            else float(self.average_distance),
            "adjacent_pair_count": self.adjacent_pair_count,
            "connected": self.connected,
            "reachable_pairs": self.reachable_pairs,
        }


def _bfs(g: Graph, source: int) -> list[int | None]:
    dist: list[int | None] = [None] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in g.adjacency[u]:
            if dist[w] is None:
                dist[w] = du
                queue.append(w)
    return dist


def bfs_distances(h: Hypergraph | Graph, source: int) -> list[int | None]:
    """Shortest-path distances from ``source``; ``None`` marks unreachable vertices."""
    g = two_section(h) if isinstance(h, Hypergraph) else h
    if not 0 <= source < g.n:
        raise IndexError(f"source {source} outside 0..{g.n - 1}")
    return _bfs(g, source)


def _partial(g: Graph, sources: range) -> tuple[int, int, int]:
    total = pairs = ecc = 0
    for s in sources:
        for v, d in enumerate(_bfs(g, s)):
            if v > s and d is not None:
                total += d
                pairs += 1
                ecc = max(ecc, d)
    return total, pairs, ecc


def distance_summary(h: Hypergraph | Graph, workers: int = 1) -> DistanceSummary:
    g = two_section(h) if isinstance(h, Hypergraph) else h
    n = g.n
    if workers > 1 and n > 1:
        step = -(-n // workers)
        chunks = [range(i, min(i + step, n)) for i in range(0, n, step)]
        with ThreadPoolExecutor(workers) as pool:
            parts = list(pool.map(lambda r: _partial(g, r), chunks))
    else:
        parts = [_partial(g, range(n))]
    wiener = sum(p[0] for p in parts)
    pairs = sum(p[1] for p in parts)
    ecc = max((p[2] for p in parts), default=0)
    connected = pairs == n * (n - 1) // 2
    return DistanceSummary(
        diameter=ecc if connected else INFINITE,
        wiener_unordered=wiener,
        average_distance=Fraction(wiener, pairs) if pairs else None,
        adjacent_pair_count=g.num_edges,
        connected=connected,
        reachable_pairs=pairs,
    )


def wiener_closed_form(w0: int, m2_0: int, n0: int, t: int) -> int:
    """Unordered Wiener index of ``H_t`` from ``H_0`` statistics.

    Requires ``k >= 3`` and an ``H_0`` without isolated vertices. Solves
    ``W(t+1) = 4 W(t) + m2(t) + 2 n(t)`` with ``m2(t) = 3^t m2_0``,
    ``n(t) = 2^t n0``.
    """
    if t < 0:
        raise ValueError("t must be nonnegative")
    return 4**t * (w0 + m2_0 + n0) - 3**t * m2_0 - 2**t * n0


def wiener_recurrence(w0: int, m2_0: int, n0: int, t: int) -> int:
    w = w0
    for s in range(t):
        w = 4 * w + 3**s * m2_0 + 2 * 2**s * n0
    return w


def average_distance_closed_form(w0: int, m2_0: int, n0: int, t: int) -> Fraction:
    n = 2**t * n0
    return Fraction(wiener_closed_form(w0, m2_0, n0, t), n * (n - 1) // 2)


def average_distance_limit(w0: int, m2_0: int, n0: int) -> Fraction:
    """Limit of the unordered average distance as ``t`` grows."""
    return Fraction(2 * (w0 + m2_0 + n0), n0 * n0)
