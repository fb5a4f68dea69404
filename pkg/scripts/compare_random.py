"""ILTH clustering against matched G(n, k, p) Monte Carlo, with the closed-form expectations.

    python3 scripts/compare_random.py --k 3 --t-max 4 --trials 200 --seed 1
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from ilth import Hypergraph
from ilth.random_model import compare


@dataclass
class CompareConfig:
    k: int = 3
    t_max: int = 4
    trials: int = 200
    seed: int = 0
    variant: str = "ilth"


def run(cfg: CompareConfig) -> None:
    reports = compare(Hypergraph.single_edge(cfg.k), cfg.t_max, cfg.seed, cfg.trials,
                      ("hc1", "hc2"), cfg.variant)
    print(f"{cfg.variant} k={cfg.k}, {cfg.trials} trials, seed {cfg.seed}")
    print("  t     n      m           p  metric     ilth   random (+-se)   closed form      z")
    for r in reports:
        for name, mc in r.metrics.items():
            il = "     -" if mc.ilth_value is None else f"{mc.ilth_value:.4f}"
            if mc.random_mean is None:
                rnd, z = "      -         ", "     -"
            else:
                rnd = f"{mc.random_mean:.4f} ({mc.random_stderr:.4f})"
                z = f"{(mc.random_mean - mc.expected) / mc.random_stderr:+.2f}" if mc.random_stderr else "     -"
            print(f"{r.generation:3d} {r.n:5d} {r.m:6d} {float(r.p):11.3e}  {name:5s}  {il:>7}  "
                  f"{rnd}   {mc.expected:.4f}   {z}")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k", type=int, default=3)
    ap.add_argument("--t-max", type=int, default=4)
    ap.add_argument("--trials", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--variant", choices=("ilth", "ilth2"), default="ilth")
    a = ap.parse_args()
    run(CompareConfig(a.k, a.t_max, a.trials, a.seed, a.variant))


if __name__ == "__main__":
    main()
