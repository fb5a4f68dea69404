"""Exact tuple counts behind the hypergraph clustering coefficients.

All counters use ordered tuples:

* ``paths2`` -- ``(u, e1, v, e2, w)``: ``u, v, w`` distinct, ``e1 != e2``,
  ``u, v in e1``, ``v, w in e2``;
* ``hypertriangles`` -- ``(u, e1, v, e2, w, e3)``: distinct vertices, distinct
  edges, ``u, v in e1``, ``v, w in e2``, ``w, u in e3``;
* ``t_prime`` -- the same with the edges allowed to coincide;
* ``p_prime`` -- ``(e1, v, e2)`` with ``v in e1 & e2`` (``e1 = e2`` allowed);
* ``a_count`` -- ``(u, e1, v, e2, w)`` as in ``paths2`` but with ``e1 = e2``
  allowed, such that some edge holds both ``u`` and ``w``;
* ``lambda_count`` -- members of ``paths2`` whose ends are adjacent.

The fast counters work on the co-occurrence matrix ``C[u, w]`` (number of
edges holding both) and the edge-intersection matrix ``P[e, f]``.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import asdict, dataclass
from fractions import Fraction

import numpy as np

from .hypergraph import Hypergraph, ResourceLimitError

DEFAULT_MAX_VERTICES = 6000
DEFAULT_MAX_EDGES = 20000


@dataclass(frozen=True)
class TupleCounts:
    k: int
    m: int
    paths2: int
    paths2_strict: int
    p_prime: int
    hypertriangles: int
    t_prime: int
    a_count: int
    lambda_count: int
    p_histogram: tuple[int, ...]
    hypertriangles_strict: int = 0
    lambda_strict: int = 0

    def as_dict(self) -> dict:
        d = asdict(self)
        d["p_histogram"] = list(self.p_histogram)
        return d


def _int(x: np.ndarray) -> np.ndarray:
    # float products of 0/1 and count matrices are exact below 2**53
    return np.rint(x).astype(np.int64)


def _co_occurrence(h: Hypergraph) -> np.ndarray:
    inc = h.incidence_matrix
    c = inc.T @ inc
    np.fill_diagonal(c, 0.0)
    return c


def tuple_counts(
    h: Hypergraph, max_vertices: int = DEFAULT_MAX_VERTICES, max_edges: int = DEFAULT_MAX_EDGES
) -> TupleCounts:
    if h.n > max_vertices or h.m > max_edges:
        raise ResourceLimitError(
            f"tuple counts capped at n <= {max_vertices}, m <= {max_edges} (got {h.n}, {h.m})"
        )
    k, m = h.k, h.m
    inc = h.incidence_matrix
    pair = np.rint(inc @ inc.T).astype(np.int64)
    hist = np.bincount(pair.ravel(), minlength=k + 1)[: k + 1] if m else np.zeros(k + 1, np.int64)
    off = pair.copy()
    np.fill_diagonal(off, 0)
    i = off
    paths2 = int(np.sum(i * ((k - 1) ** 2 - (i - 1)) * (i > 0)))
    paths2_strict = int(sum(j * (k - j) ** 2 * int(hist[j]) for j in range(1, k)))
    sum_ii = int(np.sum(i * (i - 1)))

    c = _co_occurrence(h)
    adj = (c > 0).astype(np.float64)
    p_prime = int(np.sum(inc.sum(axis=0).astype(np.int64) ** 2))
    # closed walks u -> v -> w -> u with u, v, w pairwise distinct
    c2 = _int(c @ c)
    t_prime = int(np.sum(c2 * _int(c)))
    a_count = int(np.sum(c2 * _int(adj)))
    hyper = t_prime - 3 * (k - 2) * sum_ii - k * (k - 1) * (k - 2) * m

    # per ordered pair (e1, e2): |e1 & e2| * (#adjacent (u, w) in e1 x e2 - 2(k-1))
    s = _int(inc @ adj @ inc.T)
    lam = int(np.sum(off * (s - 2 * (k - 1)) * (off > 0)))
    hyper_strict, lam_strict = _strict_extensions(h, pair, c, adj)
    return TupleCounts(
        k=k,
        m=m,
        paths2=paths2,
        paths2_strict=paths2_strict,
        p_prime=p_prime,
        hypertriangles=hyper,
        t_prime=t_prime,
        a_count=a_count,
        lambda_count=lam,
        p_histogram=tuple(int(x) for x in hist),
        hypertriangles_strict=hyper_strict,
        lambda_strict=lam_strict,
    )


def _strict_extensions(h: Hypergraph, pair: np.ndarray, co: np.ndarray, adj: np.ndarray,
                       chunk: int = 20000) -> tuple[int, int]:
    """Sum over strict paths of closing edges, and of closing indicators.

    For each ordered pair of distinct intersecting edges the strict paths
    through it number ``|e1 & e2|`` per end pair ``u in e1 - e2``,
    ``w in e2 - e1``; the closing edges cannot be ``e1`` or ``e2``.
    """
    off = pair.copy()
    np.fill_diagonal(off, 0)
    p1, p2 = np.nonzero(off)
    if p1.size == 0:
        return 0, 0
    edges = h.edge_array
    inc = h.incidence_matrix
    co_i = _int(co)
    adj_i = _int(adj)
    hyper = lam = 0
    for s in range(0, p1.size, chunk):
        a, b = p1[s:s + chunk], p2[s:s + chunk]
        ea, eb = edges[a], edges[b]
        # 1 where the vertex of one edge lies outside the other
        out_a = 1 - _int(np.take_along_axis(inc[b], ea, axis=1))
        out_b = 1 - _int(np.take_along_axis(inc[a], eb, axis=1))
        mask = out_a[:, :, None] * out_b[:, None, :]
        rows, cols = ea[:, :, None], eb[:, None, :]
        weight = off[a, b]
        hyper += int(np.sum(weight * np.sum(co_i[rows, cols] * mask, axis=(1, 2))))
        lam += int(np.sum(weight * np.sum(adj_i[rows, cols] * mask, axis=(1, 2))))
    return hyper, lam


def tuple_counts_bruteforce(h: Hypergraph, max_edges: int = 80) -> TupleCounts:
    """Literal enumeration of every tuple family; for cross-checking only."""
    if h.m > max_edges:
        raise ResourceLimitError(f"{h.m} edges exceeds brute-force cap {max_edges}")
    k, m = h.k, h.m
    sets = [frozenset(e) for e in h.edges]
    adj = [set() for _ in range(h.n)]
    for e in h.edges:
        for u in e:
            adj[u].update(x for x in e if x != u)
    co = Counter()
    for e in h.edges:
        for u in e:
            for w in e:
                if u != w:
                    co[u, w] += 1
    hist = [0] * (k + 1)
    p_prime = paths2 = a_count = lam = 0
    hyper_strict = lam_strict = 0
    for e1, s1 in enumerate(sets):
        for e2, s2 in enumerate(sets):
            common = s1 & s2
            hist[len(common)] += 1
            p_prime += len(common)
            for v in common:
                for u in s1:
                    for w in s2:
                        if len({u, v, w}) < 3:
                            continue
                        closes = w in adj[u]
                        if e1 != e2:
                            paths2 += 1
                            lam += closes
                            if u not in s2 and w not in s1:
                                lam_strict += closes
                                hyper_strict += co[u, w]
                        a_count += closes
    hyper = t_prime = 0
    for s1, s2, s3 in itertools.product(range(m), repeat=3):
        x, y, z = sets[s1] & sets[s3], sets[s1] & sets[s2], sets[s2] & sets[s3]
        if not (x and y and z):
            continue
        cnt = sum(1 for u in x for v in y for w in z if len({u, v, w}) == 3)
        t_prime += cnt
        if len({s1, s2, s3}) == 3:
            hyper += cnt
    strict = sum(j * (k - j) ** 2 * hist[j] for j in range(1, k))
    return TupleCounts(k, m, paths2, strict, p_prime, hyper, t_prime, a_count, lam, tuple(hist),
                       hyper_strict, lam_strict)


@dataclass(frozen=True)
class ClusteringReport:
    hc1: Fraction | None
    hc2: Fraction | None
    hc3: Fraction | None

    @property
    def hc1_defined(self) -> bool:
        return self.hc1 is not None

    @property
    def hc2_defined(self) -> bool:
        return self.hc2 is not None

    @property
    def hc3_defined(self) -> bool:
        return self.hc3 is not None

    def as_dict(self) -> dict:
        out = {}
        for name in ("hc1", "hc2", "hc3"):
            val = getattr(self, name)
            out[name] = None if val is None else str(val)
            out[f"{name}_decimal"] = None if val is None else float(val)
            out[f"{name}_defined"] = val is not None
        return out


def hc1_from(tc: TupleCounts) -> Fraction | None:
    """Mean number of closing edges per strict length-two path.

    ``None`` when there are no strict paths.
    """
    if not tc.paths2_strict:
        return None
    return Fraction(tc.hypertriangles_strict, tc.paths2_strict)


def hc2_from(tc: TupleCounts) -> Fraction | None:
    """Fraction of strict length-two paths whose ends are adjacent."""
    if not tc.paths2_strict:
        return None
    return Fraction(tc.lambda_strict, tc.paths2_strict)


def hc1_literal(tc: TupleCounts) -> Fraction | None:
    """Hypertriangle tuples per path tuple, both over the unrestricted families."""
    return Fraction(tc.hypertriangles, tc.paths2) if tc.paths2 else None


def hc2_literal(tc: TupleCounts) -> Fraction | None:
    return Fraction(tc.lambda_count, tc.paths2) if tc.paths2 else None


def hc1(h: Hypergraph) -> Fraction | None:
    return hc1_from(tuple_counts(h))


def hc2(h: Hypergraph) -> Fraction | None:
    return hc2_from(tuple_counts(h))


def hc3(h: Hypergraph) -> Fraction | None:
    """Mean extra overlap over unordered pairs of distinct intersecting edges."""
    m = h.m
    if m < 2:
        return None
    inc = h.incidence_matrix
    pair = np.rint(inc @ inc.T).astype(np.int64)
    iu, ju = np.triu_indices(m, 1)
    keep = pair[iu, ju] > 0
    iu, ju = iu[keep], ju[keep]
    if iu.size == 0:
        return None
    adj = (_co_occurrence(h) > 0).astype(np.float64)
    # reach[u, f]: vertices of f adjacent to u
    reach = np.rint(adj @ inc.T).astype(np.int64)
    edges = h.edge_array
    inter = pair[iu, ju]

    def one_side(src: np.ndarray, dst: np.ndarray) -> np.ndarray:
        total = np.zeros(src.size, dtype=np.int64)
        for r in range(h.k):
            u = edges[src, r]
            outside = inc[dst, u] == 0
            # u outside dst is adjacent to every vertex of dst & src
            total += outside & (reach[u, dst] - inter > 0)
        return total

    num = one_side(iu, ju) + one_side(ju, iu)
    den = 2 * (h.k - inter)
    total = Fraction(0)
    for d in np.unique(den).tolist():
        total += Fraction(int(num[den == d].sum()), d)
    return total / int(iu.size)


def hc3_bruteforce(h: Hypergraph) -> Fraction | None:
    adj = [set() for _ in range(h.n)]
    for e in h.edges:
        for u in e:
            adj[u].update(x for x in e if x != u)
    vals = []
    for s, t in itertools.combinations([frozenset(e) for e in h.edges], 2):
        if not s & t:
            continue
        a_st = sum(1 for u in s - t if any(w in adj[u] for w in t - s))
        a_ts = sum(1 for u in t - s if any(w in adj[u] for w in s - t))
        vals.append(Fraction(a_st + a_ts, len(s - t) + len(t - s)))
    return sum(vals, Fraction(0)) / len(vals) if vals else None


def clustering_report(h: Hypergraph, counts: TupleCounts | None = None,
                      with_hc3: bool = True) -> ClusteringReport:
    tc = counts if counts is not None else tuple_counts(h)
    return ClusteringReport(hc1_from(tc), hc2_from(tc), hc3(h) if with_hc3 else None)
