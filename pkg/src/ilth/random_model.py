"""Random k-uniform hypergraphs G(n, k, p) and matched-density comparisons."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .clustering import hc1_from, hc2_from, tuple_counts
from .hypergraph import Hypergraph, ResourceLimitError, ilth2_iterate, ilth_iterate
from .motifs import INFEASIBLE, MotifType, alpha, census, random_growth_threshold

# Below this many candidate k-sets the chosen ranks are drawn without
# replacement and unranked; above it, random k-sets are drawn with rejection.
ENUMERATION_LIMIT = 2_000_000
CRITICAL_EPS = 1e-12


@dataclass(frozen=True)
class RandomModelParams:
    n: int
    k: int
    p: Fraction | float
    seed: int = 0
    trials: int = 1

    def __post_init__(self):
        if not 0 <= self.p <= 1:
            raise ValueError(f"p must lie in [0, 1], got {self.p}")
        if self.trials < 1:
            raise ValueError("trials must be positive")
        if self.n < 0 or self.k < 1:
            raise ValueError("need n >= 0 and k >= 1")


def trial_rng(seed: int, *stream: int) -> np.random.Generator:
    """PCG64 stream for ``(seed, *stream)``; independent of scheduling order."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=tuple(stream))))


def unrank_combination(rank: int, n: int, k: int) -> tuple[int, ...]:
    """``rank``-th k-subset of ``range(n)`` in lexicographic order."""
    out = []
    x = 0
    for slot in range(k, 0, -1):
        while True:
            block = math.comb(n - x - 1, slot - 1)
            if rank < block:
                break
            rank -= block
            x += 1
        out.append(x)
        x += 1
    return tuple(out)


def sample(params: RandomModelParams, trial: int = 0) -> Hypergraph:
    """Draw G(n, k, p).

    The edge count is Binomial(C(n, k), p); that many distinct k-sets are then
    chosen uniformly, which is the same law as independent per-set coins.
    """
    n, k = params.n, params.k
    total = math.comb(n, k)
    if total >= 2**62:
        raise ResourceLimitError(f"C({n},{k}) does not fit the binomial sampler")
    rng = trial_rng(params.seed, trial)
    m = int(rng.binomial(total, float(params.p))) if total else 0
    if m == 0:
        return Hypergraph.from_edges(k, n, [])
    if total <= ENUMERATION_LIMIT:
        ranks = np.sort(rng.choice(total, size=m, replace=False))
        edges = [unrank_combination(int(r), n, k) for r in ranks]
    else:
        chosen: set[tuple[int, ...]] = set()
        while len(chosen) < m:
            chosen.add(tuple(sorted(rng.choice(n, size=k, replace=False).tolist())))
        edges = sorted(chosen)
    return Hypergraph.from_edges(k, n, edges)


def matched_params(h: Hypergraph, seed: int = 0, trials: int = 1) -> RandomModelParams:
    """Same order and expected edge count as ``h``."""
    total = math.comb(h.n, h.k)
    p = Fraction(h.m, total) if total else Fraction(0)
    return RandomModelParams(h.n, h.k, p, seed, trials)


def expected_hc1(n: int, k: int, p: Fraction | float) -> Fraction | float:
    return math.comb(n - 2, k - 2) * p


def expected_hc2(n: int, k: int, p: Fraction | float) -> float:
    pairs = math.comb(n - 2, k - 2)
    p = float(p)
    if p >= 1.0:
        return 1.0 if pairs else 0.0
    return -math.expm1(pairs * math.log1p(-p))


def motif_expectation_class(pattern: MotifType | str | int, k: int) -> str:
    a = alpha(pattern, k)
    if a == INFEASIBLE:
        raise ValueError(f"pattern {pattern} is infeasible for k={k}")
    diff = a - random_growth_threshold(k)
    if abs(diff) < CRITICAL_EPS:
        return "critical"
    return "grows" if diff > 0 else "decays"


@dataclass
class MetricComparison:
    """ILTH value against the matched random model for one metric.

    ``random_mean`` is the path-weighted (pooled) estimate ``sum(num) /
    sum(den)`` over trials, which targets the per-path closed form
    ``expected``; ``sample_mean`` is the plain mean of per-sample values.
    """

    ilth_value: float | None
    random_mean: float | None
    random_stderr: float | None
    expected: float | None = None
    sample_mean: float | None = None
    sample_stderr: float | None = None
    used_trials: int = 0
    excluded_trials: int = 0

    def as_dict(self) -> dict:
        return dict(self.__dict__)


@dataclass
class ComparisonReport:
    generation: int
    n: int
    m: int
    p: Fraction
    trials: int
    metrics: dict[str, MetricComparison] = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "generation": self.generation,
            "n": self.n,
            "m": self.m,
            "p": str(self.p),
            "p_decimal": float(self.p),
            "trials": self.trials,
            "metrics": {k: v.as_dict() for k, v in self.metrics.items()},
        }


def _mean_se(values: Sequence[float]) -> tuple[float | None, float | None]:
    if not values:
        return None, None
    arr = np.asarray(values, dtype=np.float64)
    se = float(arr.std(ddof=1) / math.sqrt(arr.size)) if arr.size > 1 else 0.0
    return float(arr.mean()), se


def pooled_ratio(num: Sequence[float], den: Sequence[float]) -> tuple[float | None, float | None]:
    """``sum(num) / sum(den)`` with its delta-method standard error."""
    y = np.asarray(num, dtype=np.float64)
    x = np.asarray(den, dtype=np.float64)
    if x.size == 0 or x.sum() == 0:
        return None, None
    r = float(y.sum() / x.sum())
    if x.size < 2:
        return r, 0.0
    resid = y - r * x
    se = math.sqrt(float(np.sum(resid**2)) / (x.size * (x.size - 1))) / float(x.mean())
    return r, se


def _parts(tc, name: str) -> tuple[int, int]:
    if name == "hc1":
        return tc.hypertriangles_strict, tc.paths2_strict
    return tc.lambda_strict, tc.paths2_strict


def monte_carlo(params: RandomModelParams, metrics: Iterable[str] = ("hc1", "hc2"),
                motif_keys: Sequence[int] = (), stream: int = 0) -> dict[str, MetricComparison]:
    """Sample ``params.trials`` hypergraphs from G(n, k, p).

    Trials without length-two paths leave the coefficients undefined; they
    are left out of the sample mean and counted in ``excluded_trials``.
    """
    names = [m for m in metrics if m in ("hc1", "hc2")]
    parts: dict[str, tuple[list[int], list[int]]] = {m: ([], []) for m in names}
    motif_vals: dict[int, list[float]] = {key: [] for key in motif_keys}
    base = RandomModelParams(params.n, params.k, params.p, params.seed)
    for trial in range(params.trials):
        h = sample(base, trial=stream * 1_000_003 + trial)
        if names:
            tc = tuple_counts(h)
            for name in names:
                num, den = _parts(tc, name)
                parts[name][0].append(num)
                parts[name][1].append(den)
        if motif_keys:
            c = census(h)
            for key in motif_keys:
                motif_vals[key].append(float(c.count(key)))
    closed = {
        "hc1": lambda: float(expected_hc1(params.n, params.k, params.p)),
        "hc2": lambda: expected_hc2(params.n, params.k, params.p),
    }
    out = {}
    for name in names:
        num, den = parts[name]
        mean, se = pooled_ratio(num, den)
        per_sample = [a / b for a, b in zip(num, den) if b]
        s_mean, s_se = _mean_se(per_sample)
        out[name] = MetricComparison(None, mean, se, closed[name](), s_mean, s_se,
                                     len(per_sample), params.trials - len(per_sample))
    for key, xs in motif_vals.items():
        mean, se = _mean_se(xs)
        out[f"motif{key}"] = MetricComparison(None, mean, se, None, mean, se, len(xs), 0)
    return out


def compare(
    h0: Hypergraph,
    t_max: int,
    seed: int = 0,
    trials: int = 200,
    metrics: Iterable[str] = ("hc1", "hc2"),
    variant: str = "ilth",
    motif_keys: Sequence[int] = (2, 6, 11, 26),
) -> list[ComparisonReport]:
    """ILTH (or ILTH2) generation ``t`` against matched G(n, k, p) for each ``t <= t_max``."""
    metrics = list(metrics)
    iterate = {"ilth": ilth_iterate, "ilth2": ilth2_iterate}[variant]
    keys = tuple(motif_keys) if "motifs" in metrics else ()
    reports = []
    for t in range(t_max + 1):
        h, _ = iterate(h0, t)
        params = matched_params(h, seed, trials)
        mc = monte_carlo(params, metrics, keys, stream=t + 1)
        tc = tuple_counts(h) if {"hc1", "hc2"} & set(metrics) else None
        for name, fn in (("hc1", hc1_from), ("hc2", hc2_from)):
            if name in mc:
                v = fn(tc)
                mc[name].ilth_value = None if v is None else float(v)
        if keys:
            c = census(h)
            for key in keys:
                mc[f"motif{key}"].ilth_value = float(c.count(key))
        reports.append(ComparisonReport(t, h.n, h.m, params.p, trials, mc))
    return reports


def growth_ratios(reports: Sequence[ComparisonReport], metric: str) -> dict[str, list[float | None]]:
    """Per-step ratios of the ILTH value and of the closed-form random expectation."""
    def ratios(xs):
        return [None if a in (None, 0) or b is None else b / a for a, b in zip(xs, xs[1:])]

    il = [r.metrics[metric].ilth_value for r in reports]
    ex = [r.metrics[metric].expected for r in reports]
    return {"ilth": ratios(il), "random_expected": ratios(ex)}
