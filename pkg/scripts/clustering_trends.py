"""HC1/HC2/HC3 along the ILTH (or ILTH2) sequence from a single hyperedge, with per-step ratios.

    python3 scripts/clustering_trends.py --k 3 --t-max 6
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from ilth import Hypergraph, ilth2_step, ilth_step
from ilth.clustering import clustering_report, hc1_literal, hc2_literal, tuple_counts


@dataclass
class TrendConfig:
    k: int = 3
    t_max: int = 6
    variant: str = "ilth"
    with_hc3: bool = True


def trends(cfg: TrendConfig) -> list[dict]:
    step = {"ilth": ilth_step, "ilth2": ilth2_step}[cfg.variant]
    h = Hypergraph.single_edge(cfg.k)
    rows = []
    for t in range(cfg.t_max + 1):
        if t:
            h, _ = step(h)
        tc = tuple_counts(h)
        rep = clustering_report(h, tc, with_hc3=cfg.with_hc3 and h.m <= 5000)
        rows.append({"t": t, "m": h.m, "hc1": rep.hc1, "hc2": rep.hc2, "hc3": rep.hc3,
                     "hc1_literal": hc1_literal(tc), "hc2_literal": hc2_literal(tc)})
    return rows


def _f(x) -> str:
    return "      -" if x is None else f"{float(x):7.4f}"


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k", type=int, default=3)
    ap.add_argument("--t-max", type=int, default=6)
    ap.add_argument("--variant", choices=("ilth", "ilth2"), default="ilth")
    ap.add_argument("--no-hc3", action="store_true")
    a = ap.parse_args()
    cfg = TrendConfig(a.k, a.t_max, a.variant, not a.no_hc3)
    rows = trends(cfg)
    k = cfg.k
    print(f"limits: hc1 ratio {((k - 1) ** 3 + 3 * (k - 1)) / (k * k + 1):.4f}, "
          f"hc2 ratio {k * k / (k * k + 1):.4f}")
    print("  t       m      hc1  ratio      hc2  ratio      hc3   hc1_lit  hc2_lit")
    prev = None
    for r in rows:
        r1 = r2 = None
        if prev and prev["hc1"] and r["hc1"]:
            r1, r2 = r["hc1"] / prev["hc1"], r["hc2"] / prev["hc2"]
        print(f"{r['t']:3d} {r['m']:7d}  {_f(r['hc1'])} {_f(r1)}  {_f(r['hc2'])} {_f(r2)}  "
              f"{_f(r['hc3'])}  {_f(r['hc1_literal'])}  {_f(r['hc2_literal'])}")
        prev = r


if __name__ == "__main__":
    main()
