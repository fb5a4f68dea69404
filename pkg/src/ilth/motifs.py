"""Three-hyperedge motif census.

A motif is an unordered triple of distinct hyperedges whose intersection
graph is connected. Each triple is summarized by its cardinality vector
``(a, b, c, d, e, f, g)``::

    a = |e1 - (e2 | e3)|   d = |e1 & e2 - e3|   g = |e1 & e2 & e3|
    b = |e2 - (e1 | e3)|   e = |e2 & e3 - e1|
    c = |e3 - (e1 | e2)|   f = |e1 & e3 - e2|

and classified by the 7-bit nonemptiness pattern, canonicalized to the
lexicographically smallest string over the six role permutations.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple, Sequence

import numpy as np

from .hypergraph import Hypergraph, ResourceLimitError, ilth_iterate, ilth_step

DISCONNECTED = "disconnected"
DEFAULT_BRUTE_FORCE_CAP = 500
DEFAULT_TRIPLE_CAP = 2 * 10**10

# Lee numbering of the k-uniform motif types, as printed (not canonicalized).
LEE_PATTERNS: dict[int, str] = {
    2: "1110001",
    6: "1110101",
    11: "1011101",
    12: "1111101",
    13: "0001111",
    14: "1001111",
    15: "1011111",
    16: "1111111",
    24: "1001110",
    25: "1011110",
    26: "1111110",
}


class CardinalityVector(NamedTuple):
    a: int
    b: int
    c: int
    d: int
    e: int
    f: int
    g: int

    @property
    def vertex_count(self) -> int:
        return sum(self)

    def pattern_bits(self) -> str:
        return "".join("1" if x > 0 else "0" for x in self)


# For a role permutation s (edge r goes to slot s[r]) the pairwise regions
# d=(0,1), e=(1,2), f=(0,2) move to the region of the image pair.
_PAIR_SLOT = {(0, 1): 3, (1, 2): 4, (0, 2): 5}
_ROLE_PERMS = list(itertools.permutations(range(3)))


def _perm_table() -> list[tuple[int, ...]]:
    table = []
    for s in _ROLE_PERMS:
        dest = [0] * 7
        for r in range(3):
            dest[r] = s[r]
        for (x, y), slot in _PAIR_SLOT.items():
            dest[slot] = _PAIR_SLOT[tuple(sorted((s[x], s[y])))]
        dest[6] = 6
        table.append(tuple(dest))
    return table


# _PERMS[p][i] is where region i goes under role permutation p.
_PERMS = _perm_table()


def permute_regions(values: Sequence, p: int) -> tuple:
    out = [None] * 7
    for i, dst in enumerate(_PERMS[p]):
        out[dst] = values[i]
    return tuple(out)


def canonical_cv(cv: Sequence[int]) -> CardinalityVector:
    """Lexicographically smallest relabeling of a cardinality vector."""
    return CardinalityVector(*min(permute_regions(cv, p) for p in range(6)))


def canonical_pattern(bits: str) -> str:
    return min("".join(permute_regions(bits, p)) for p in range(6))


@dataclass(frozen=True, order=True)
class MotifType:
    pattern: str
    lee_number: int | None = field(default=None, compare=False)

    @property
    def label(self) -> str:
        return f"motif{self.lee_number}" if self.lee_number is not None else self.pattern


CANONICAL_LEE: dict[str, int] = {canonical_pattern(p): i for i, p in LEE_PATTERNS.items()}


def motif_type(bits: str) -> MotifType:
    canon = canonical_pattern(bits)
    return MotifType(canon, CANONICAL_LEE.get(canon))


def lee_type(number: int) -> MotifType:
    return motif_type(LEE_PATTERNS[number])


def _is_connected(bits: str) -> bool:
    # pairwise intersections e1&e2, e2&e3, e1&e3 are nonempty iff d|g, e|g, f|g
    g = bits[6] == "1"
    links = sum(1 for r in (3, 4, 5) if g or bits[r] == "1")
    return links >= 2


def _pattern_code_table() -> list[MotifType | None]:
    """Indexed by the 7-bit code (bit 6 = region a); ``None`` when disconnected."""
    table: list[MotifType | None] = []
    for code in range(128):
        bits = format(code, "07b")
        table.append(motif_type(bits) if _is_connected(bits) else None)
    return table


_CODE_TABLE = _pattern_code_table()


def cardinality_vector(e1: Iterable[int], e2: Iterable[int], e3: Iterable[int]) -> CardinalityVector:
    s1, s2, s3 = set(e1), set(e2), set(e3)
    return CardinalityVector(
        len(s1 - s2 - s3),
        len(s2 - s1 - s3),
        len(s3 - s1 - s2),
        len((s1 & s2) - s3),
        len((s2 & s3) - s1),
        len((s1 & s3) - s2),
        len(s1 & s2 & s3),
    )


def classify(cv: Sequence[int]) -> MotifType | str:
    bits = "".join("1" if x > 0 else "0" for x in cv)
    if not _is_connected(bits):
        return DISCONNECTED
    return motif_type(bits)


def descendant_multiplier(cv: Sequence[int]) -> int:
    """Guaranteed copies of a motif class after one ILTH step, per copy now."""
    a, b, c, d, e, f, g = cv
    return g + (c + 1) * d + (b + 1) * f + (a + 1) * e + (a + 1) * (b + 1) * (c + 1)


@dataclass
class MotifCensus:
    counts: dict[MotifType, int]
    triples_examined: int
    k: int
    n: int
    m: int
    by_cv: dict[CardinalityVector, int] | None = None

    def count(self, key: int | str | MotifType) -> int:
        if isinstance(key, int):
            key = lee_type(key)
        elif isinstance(key, str):
            key = motif_type(key)
        return self.counts.get(key, 0)

    def by_lee(self) -> dict[int, int]:
        return {t.lee_number: c for t, c in self.counts.items() if t.lee_number is not None}

    def by_pattern(self) -> dict[str, int]:
        return {t.pattern: c for t, c in sorted(self.counts.items())}

    def total(self) -> int:
        return sum(self.counts.values())

    def as_dict(self) -> dict:
        out = {
            "k": self.k,
            "n": self.n,
            "m": self.m,
            "triples_examined": self.triples_examined,
            "total": self.total(),
            "patterns": self.by_pattern(),
            "lee": {str(i): c for i, c in sorted(self.by_lee().items())},
        }
        if self.by_cv is not None:
            out["cardinality_vectors"] = [
                {"cv": list(cv), "pattern": motif_type(cv.pattern_bits()).pattern, "count": c}
                for cv, c in sorted(self.by_cv.items())
            ]
        return out


def _finish(h: Hypergraph, pattern_counts: Mapping[int, int], cv_counts: Counter | None,
            examined: int) -> MotifCensus:
    counts: dict[MotifType, int] = {}
    for code, c in pattern_counts.items():
        if c:
            mt = _CODE_TABLE[code]
            assert mt is not None
            counts[mt] = counts.get(mt, 0) + int(c)
    by_cv = None
    if cv_counts is not None:
        by_cv = Counter()
        for cv, c in cv_counts.items():
            by_cv[canonical_cv(cv)] += int(c)
        by_cv = dict(by_cv)
    return MotifCensus(counts, examined, h.k, h.n, h.m, by_cv)


def census_bruteforce(
    h: Hypergraph, max_edges: int = DEFAULT_BRUTE_FORCE_CAP, by_cardinality_vector: bool = False
) -> MotifCensus:
    """Reference census: loop over every triple of hyperedges."""
    if h.m > max_edges:
        raise ResourceLimitError(f"{h.m} edges exceeds brute-force cap {max_edges}")
    sets = [frozenset(e) for e in h.edges]
    codes: Counter = Counter()
    cvs: Counter | None = Counter() if by_cardinality_vector else None
    examined = 0
    for s1, s2, s3 in itertools.combinations(sets, 3):
        examined += 1
        cv = cardinality_vector(s1, s2, s3)
        if classify(cv) == DISCONNECTED:
            continue
        codes[int(cv.pattern_bits(), 2)] += 1
        if cvs is not None:
            cvs[cv] += 1
    return _finish(h, codes, cvs, examined)


def _pack(a, b, c, d, e, f, g, base: int) -> np.ndarray:
    out = a.astype(np.int64)
    for x in (b, c, d, e, f, g):
        out = out * base + x
    return out


def _unpack(code: int, base: int) -> CardinalityVector:
    vals = []
    for _ in range(7):
        code, r = divmod(code, base)
        vals.append(r)
    return CardinalityVector(*reversed(vals))


def _pattern_code(a, b, c, d, e, f, g) -> np.ndarray:
    return (
        ((a > 0).astype(np.int64) << 6)
        | ((b > 0).astype(np.int64) << 5)
        | ((c > 0).astype(np.int64) << 4)
        | ((d > 0).astype(np.int64) << 3)
        | ((e > 0).astype(np.int64) << 2)
        | ((f > 0).astype(np.int64) << 1)
        | (g > 0).astype(np.int64)
    )


class _Kernel:
    """Vectorized census over anchor edge ``i`` (the smallest index of the triple).

    Connected triples ``{i, j, l}`` with ``i < j, l`` split into
      A. ``j`` and ``l`` both intersect ``i`` (``j < l``);
      B. exactly one of them, ``j``, intersects ``i`` and ``l`` intersects ``j``.
    Every connected triple falls in exactly one case for its anchor.
    """

    def __init__(self, h: Hypergraph, by_cv: bool):
        self.k = h.k
        self.m = h.m
        self.by_cv = by_cv
        self.base = h.k + 1
        inc = h.incidence_matrix
        self.inc = inc
        self.pair = np.rint(inc @ inc.T).astype(np.int16) if h.m else np.zeros((0, 0), np.int16)
        self.edges = h.edge_array

    def _emit(self, acc: dict, a, b, c, d, e, f, g) -> None:
        if a.size == 0:
            return
        key = _pack(a, b, c, d, e, f, g, self.base) if self.by_cv else _pattern_code(a, b, c, d, e, f, g)
        vals, cnt = np.unique(key, return_counts=True)
        for v, c_ in zip(vals.tolist(), cnt.tolist()):
            acc[v] = acc.get(v, 0) + c_

    def run(self, anchors: Iterable[int]) -> tuple[dict, int]:
        k, m, pair = self.k, self.m, self.pair
        acc: dict[int, int] = {}
        examined = 0
        for i in anchors:
            row = pair[i]
            later = np.arange(i + 1, m)
            hits = later[row[i + 1:] > 0]
            misses = later[row[i + 1:] == 0]
            # case A
            if hits.size >= 2:
                sub = self.inc[np.ix_(hits, self.edges[i])]
                g = np.rint(sub @ sub.T).astype(np.int16)
                pij = row[hits].astype(np.int16)
                pjl = pair[np.ix_(hits, hits)]
                ju, lu = np.triu_indices(hits.size, 1)
                gg = g[ju, lu]
                d = pij[ju] - gg
                f = pij[lu] - gg
                e = pjl[ju, lu] - gg
                examined += gg.size
                self._emit(acc, k - d - f - gg, k - d - e - gg, k - e - f - gg, d, e, f, gg)
            # case B: i meets j, l misses i but meets j
            if hits.size and misses.size:
                pjl = pair[np.ix_(hits, misses)]
                jj, ll = np.nonzero(pjl > 0)
                examined += hits.size * misses.size
                d = row[hits][jj].astype(np.int16)
                e = pjl[jj, ll]
                zero = np.zeros_like(d)
                self._emit(acc, k - d, k - d - e, k - e, d, e, zero, zero)
        return acc, examined


def census(
    h: Hypergraph,
    by_cardinality_vector: bool = False,
    workers: int = 1,
    max_triples: int = DEFAULT_TRIPLE_CAP,
) -> MotifCensus:
    """Count connected triples of distinct hyperedges by motif type.

    ``workers`` partitions the anchor edges across threads; partial counts
    are merged by summation so the result does not depend on it.
    """
    m = h.m
    if math.comb(m, 3) > max_triples:
        raise ResourceLimitError(f"C({m},3) triples exceeds census cap {max_triples}")
    if m < 3:
        return _finish(h, {}, Counter() if by_cardinality_vector else None, 0)
    kernel = _Kernel(h, by_cardinality_vector)
    if workers > 1:
        chunks = [range(w, m - 2, workers) for w in range(workers)]
        with ThreadPoolExecutor(workers) as pool:
            parts = list(pool.map(kernel.run, chunks))
    else:
        parts = [kernel.run(range(m - 2))]
    merged: Counter = Counter()
    examined = 0
    for acc, ex in parts:
        merged.update(acc)
        examined += ex
    if not by_cardinality_vector:
        return _finish(h, merged, None, examined)
    cvs: Counter = Counter()
    codes: Counter = Counter()
    for packed, c in merged.items():
        cv = _unpack(packed, kernel.base)
        cvs[cv] += c
        codes[int(cv.pattern_bits(), 2)] += c
    return _finish(h, codes, cvs, examined)


# --- maximum vertex counts ---------------------------------------------------

INFEASIBLE = "infeasible"


def _pattern_of(pattern: MotifType | str | int) -> str:
    if isinstance(pattern, MotifType):
        return pattern.pattern
    if isinstance(pattern, int):
        return LEE_PATTERNS[pattern]
    return pattern


def alpha(pattern: MotifType | str | int, k: int) -> int | str:
    """Largest ``a+...+g`` over k-uniform cardinality vectors with the pattern.

    Searches the shared regions ``d, e, f, g`` (each in ``[lo, k]``); the
    private regions are then forced by ``|e_i| = k``.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    bits = _pattern_of(pattern)
    nonempty = [ch == "1" for ch in bits]
    ranges = [range(1, k + 1) if nonempty[r] else range(0, 1) for r in (3, 4, 5, 6)]
    best: int | None = None
    for d, e, f, g in itertools.product(*ranges):
        a = k - d - f - g
        b = k - d - e - g
        c = k - e - f - g
        cv = (a, b, c, d, e, f, g)
        if min(a, b, c) < 0:
            continue
        if any((x > 0) != nonempty[r] for r, x in enumerate(cv)):
            continue
        total = sum(cv)
        best = total if best is None else max(best, total)
    return INFEASIBLE if best is None else best


# Closed forms as printed in the alpha table; keyed by Lee number.
ALPHA_TABLE_FORMULAS = {
    2: lambda k: 3 * k - 2,
    6: lambda k: 3 * k - 3,
    11: lambda k: 2 * k - 1,
    12: lambda k: 3 * k - 4,
    13: lambda k: math.floor(3 * k / 2 - 1),
    14: lambda k: 2 * k - 2,
    15: lambda k: 2 * k - 2,
    16: lambda k: 3 * k - 5,
    24: lambda k: 2 * k - 1,
    25: lambda k: 2 * k - 1,
    26: lambda k: 3 * k - 3,
}


# --- growth ------------------------------------------------------------------

def random_growth_threshold(k: int) -> float:
    return 3.0 * (k - math.log2(k + 1))


@dataclass
class GrowthReport:
    k: int
    generations: list[int]
    censuses: list[MotifCensus]

    def series(self, key: int | str) -> list[int]:
        return [c.count(key) for c in self.censuses]

    def ratios(self, key: int | str) -> list[float | None]:
        s = self.series(key)
        return [None if a == 0 else b / a for a, b in zip(s, s[1:])]

    def as_dict(self) -> dict:
        from .random_model import motif_expectation_class

        types = sorted({t for c in self.censuses for t in c.counts})
        rows = []
        for t in types:
            key = t.lee_number if t.lee_number is not None else t.pattern
            a = alpha(t, self.k)
            rows.append({
                "type": t.label,
                "pattern": t.pattern,
                "alpha": a,
                "random_model": motif_expectation_class(t, self.k) if a != INFEASIBLE else INFEASIBLE,
                "counts": self.series(key),
                "ratios": self.ratios(key),
            })
        return {"k": self.k, "generations": self.generations, "types": rows}


def growth_report(h0: Hypergraph, t_max: int, workers: int = 1) -> GrowthReport:
    h = h0
    censuses = [census(h, workers=workers)]
    for gen in range(1, t_max + 1):
        h, _ = ilth_step(h, gen)
        censuses.append(census(h, workers=workers))
    return GrowthReport(h0.k, list(range(t_max + 1)), censuses)


def ilth_census(k: int, t: int, workers: int = 1, by_cardinality_vector: bool = False) -> MotifCensus:
    h, _ = ilth_iterate(Hypergraph.single_edge(k), t)
    return census(h, by_cardinality_vector=by_cardinality_vector, workers=workers)
