"""Wiener index and diameter of H_t from BFS next to the closed form.

    python3 scripts/distance_check.py --k 3 --t-max 5
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from ilth import Hypergraph, ilth_step, two_section
from ilth.metrics import (average_distance_closed_form, average_distance_limit, distance_summary,
                          wiener_closed_form)


@dataclass
class DistanceConfig:
    k: int = 3
    t_max: int = 5
    workers: int = 1


def run(cfg: DistanceConfig) -> None:
    h = Hypergraph.single_edge(cfg.k)
    s0 = distance_summary(h)
    stats = (s0.wiener_unordered, two_section(h).num_edges, h.n)
    print(f"k={cfg.k}: average-distance limit {float(average_distance_limit(*stats)):.6f}")
    print("  t      n  diameter          W(BFS)       W(closed)   avg distance")
    for t in range(cfg.t_max + 1):
        if t:
            h, _ = ilth_step(h)
        s = distance_summary(h, workers=cfg.workers)
        print(f"{t:3d} {h.n:6d} {s.diameter:>9} {s.wiener_unordered:>15} "
              f"{wiener_closed_form(*stats, t):>15}   {float(average_distance_closed_form(*stats, t)):.6f}")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k", type=int, default=3)
    ap.add_argument("--t-max", type=int, default=5)
    ap.add_argument("--workers", type=int, default=1)
    a = ap.parse_args()
    run(DistanceConfig(a.k, a.t_max, a.workers))


if __name__ == "__main__":
    main()
