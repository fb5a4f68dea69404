"""Recompute the motif tables from a single hyperedge and diff them against the stored values.

    python3 scripts/reproduce_tables.py --k 3 --t-max 6
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from ilth import Hypergraph, ilth_step, tables
from ilth.motifs import census


@dataclass
class TableConfig:
    ks: tuple[int, ...] = (3, 4, 5, 6)
    t_max: int | None = None  # None: the rows covered by the acceptance gate
    workers: int = 1


def reproduce(cfg: TableConfig) -> int:
    mismatches = 0
    for k in cfg.ks:
        top = tables.ACCEPTANCE_T_MAX[k] if cfg.t_max is None else cfg.t_max
        cols = tables.columns(k)
        print(f"k={k}  " + "  ".join(f"{c:>12}" for c in cols))
        h = Hypergraph.single_edge(k)
        for t in range(top + 1):
            if t:
                h, _ = ilth_step(h)
            start = time.perf_counter()
            c = census(h, workers=cfg.workers)
            secs = time.perf_counter() - start
            gold = tables.golden_row(k, t) if t in tables.generations(k) else {}
            cells = []
            for col in cols:
                got = c.count(col)
                flag = "" if col not in gold or gold[col] == got else "*"
                mismatches += bool(flag)
                cells.append(f"{got:>11}{flag or ' '}")
            print(f"t={t}  " + "  ".join(cells) + f"   ({h.m} edges, {secs:.1f}s)")
            for col in cols:
                if col in gold and gold[col] != c.count(col):
                    print(f"     motif {col}: stored {gold[col]}, computed {c.count(col)}")
    return mismatches


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k", type=int, action="append")
    ap.add_argument("--t-max", type=int)
    ap.add_argument("--workers", type=int, default=1)
    a = ap.parse_args()
    cfg = TableConfig(tuple(a.k) if a.k else TableConfig.ks, a.t_max, a.workers)
    bad = reproduce(cfg)
    print(f"{bad} mismatching cell(s)")


if __name__ == "__main__":
    main()
