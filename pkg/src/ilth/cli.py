"""Command-line entry point: ``ilth <subcommand> [options]``.

Hypergraphs travel between subcommands as HGF text, so ``ilth generate ... |
ilth metrics`` works. Reports are JSON (with a ``schema`` field) or flat TSV.
Failures print a JSON error object to stderr and exit nonzero.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

from . import tables
from .clustering import clustering_report, tuple_counts
from .homomorphism import (BudgetExhausted, EmbeddingError, adjacent_in_generation, embed,
                           find_homomorphism)
from .hypergraph import (Hypergraph, HypergraphError, ResourceLimitError, ilth2_iterate,
                         ilth_iterate, max_edges_cap, two_section)
from .io import FormatError, format_hgf, parse_edge_list, parse_hgf
from .metrics import distance_summary
from .motifs import census, census_bruteforce, growth_report
from .random_model import (RandomModelParams, compare, expected_hc1, expected_hc2, growth_ratios,
                           monte_carlo, sample)
from .spectrum import ConvergenceError, spectrum

SCHEMA = "ilth/1"
COMMANDS = ("generate", "metrics", "motifs", "clustering", "random", "compare", "embed", "tables")


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    input: str | None = None
    output: str | None = None
    generate: tuple[int, int] | None = None
    k: int | None = None
    t: int = 0
    variant: str = "ilth"
    seed: int = 0
    trials: int = 200
    t_max: int = 3
    threads: int = 1
    fmt: str = "json"
    max_edges: int | None = None
    options: dict[str, Any] = field(default_factory=dict)

    def validate(self) -> None:
        if self.input is not None and self.generate is not None:
            raise UsageError("--input and --generate are mutually exclusive")
        for name in ("trials", "threads"):
            if getattr(self, name) < 1:
                raise UsageError(f"--{name} must be positive")
        if self.max_edges is not None and self.max_edges < 1:
            raise UsageError("--max-edges must be positive")
        if self.t < 0 or self.t_max < 0:
            raise UsageError("generation counts must be nonnegative")


# --- output ------------------------------------------------------------------

def _plain(x: Any) -> Any:
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    return x


def _flatten(x: Any, prefix: str = "") -> list[tuple[str, str]]:
    if isinstance(x, dict):
        rows = []
        for k, v in x.items():
            rows += _flatten(v, f"{prefix}.{k}" if prefix else str(k))
        return rows
    if isinstance(x, list) and any(isinstance(v, (dict, list)) for v in x):
        rows = []
        for i, v in enumerate(x):
            rows += _flatten(v, f"{prefix}.{i}")
        return rows
    if isinstance(x, list):
        return [(prefix, ",".join("" if v is None else str(v) for v in x))]
    return [(prefix, "" if x is None else str(x))]


def render(report: dict, fmt: str) -> str:
    body = {"schema": SCHEMA, **_plain(report)}
    if fmt == "tsv":
        return "".join(f"{k}\t{v}\n" for k, v in _flatten(body))
    return json.dumps(body, indent=2) + "\n"


def _emit(cfg: RunConfig, text: str) -> None:
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# --- inputs ------------------------------------------------------------------

def _read_text(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path, encoding="ascii") as fh:
        return fh.read()


def _iterate(cfg: RunConfig, h0: Hypergraph, t: int) -> Hypergraph:
    iterate = {"ilth": ilth_iterate, "ilth2": ilth2_iterate}[cfg.variant]
    h, _ = iterate(h0, t, max_edges=cfg.max_edges)
    return h


def _load(cfg: RunConfig) -> Hypergraph:
    if cfg.generate is not None:
        k, t = cfg.generate
        return _iterate(cfg, Hypergraph.single_edge(k), t)
    return parse_hgf(_read_text(cfg.input))


def _base(cfg: RunConfig) -> Hypergraph:
    """Initial hypergraph for commands that iterate: ``--input`` or a single ``--k`` edge."""
    if cfg.input is not None:
        return parse_hgf(_read_text(cfg.input))
    if cfg.k is None:
        raise UsageError("give --input or --k")
    return Hypergraph.single_edge(cfg.k)


def _shape(h: Hypergraph) -> dict:
    return {"k": h.k, "n": h.n, "m": h.m}


# --- subcommands ---------------------------------------------------------------

def _cmd_generate(cfg: RunConfig) -> int:
    h = _iterate(cfg, _base(cfg), cfg.t)
    _emit(cfg, format_hgf(h))
    return 0


def _cmd_metrics(cfg: RunConfig) -> int:
    h = _load(cfg)
    g = two_section(h)
    report = {**_shape(h), "two_section_edges": g.num_edges,
              **distance_summary(g, workers=cfg.threads).as_dict()}
    if cfg.options.get("spectrum"):
        sp = spectrum(g)
        report["spectrum"] = {"eigenvalues": list(sp.eigenvalues), "tolerance": sp.tolerance,
                              "sweeps": sp.sweeps}
    _emit(cfg, render(report, cfg.fmt))
    return 0


def _cmd_motifs(cfg: RunConfig) -> int:
    growth = cfg.options.get("growth")
    if growth is not None:
        rep = growth_report(_load(cfg), growth, workers=cfg.threads)
        _emit(cfg, render(rep.as_dict(), cfg.fmt))
        return 0
    h = _load(cfg)
    by_cv = bool(cfg.options.get("by_cardinality_vector"))
    if cfg.options.get("brute_force"):
        c = census_bruteforce(h, by_cardinality_vector=by_cv)
    else:
        c = census(h, by_cardinality_vector=by_cv, workers=cfg.threads)
    _emit(cfg, render(c.as_dict(), cfg.fmt))
    return 0


def _cmd_clustering(cfg: RunConfig) -> int:
    h0 = _load(cfg)
    steps = cfg.options.get("iterate") or 0
    rows = []
    for t in range(steps + 1):
        h = _iterate(cfg, h0, t)
        tc = tuple_counts(h)
        rep = clustering_report(h, tc, with_hc3=not cfg.options.get("no_hc3"))
        rows.append({"generation": t, **_shape(h), **rep.as_dict(), "counts": tc.as_dict()})
    report = rows[0] if steps == 0 else {"variant": cfg.variant, "generations": rows}
    _emit(cfg, render(report, cfg.fmt))
    return 0


def _cmd_random(cfg: RunConfig) -> int:
    opts = cfg.options
    p = Fraction(opts["p"])
    params = RandomModelParams(opts["n"], cfg.k, p, cfg.seed, cfg.trials)
    if not opts.get("summary"):
        _emit(cfg, format_hgf(sample(params, trial=opts.get("trial", 0))))
        return 0
    mc = monte_carlo(params)
    report = {"n": params.n, "k": params.k, "p": str(p), "seed": cfg.seed, "trials": cfg.trials,
              "expected_hc1": float(expected_hc1(params.n, params.k, p)),
              "expected_hc2": expected_hc2(params.n, params.k, p),
              "metrics": {k: v.as_dict() for k, v in mc.items()}}
    _emit(cfg, render(report, cfg.fmt))
    return 0


def _cmd_compare(cfg: RunConfig) -> int:
    metrics = cfg.options.get("metrics", ("hc1", "hc2"))
    reports = compare(_base(cfg), cfg.t_max, cfg.seed, cfg.trials, metrics, cfg.variant)
    out = {"variant": cfg.variant, "seed": cfg.seed, "trials": cfg.trials,
           "generations": [r.as_dict() for r in reports]}
    out["ratios"] = {m: growth_ratios(reports, m) for m in metrics if m in ("hc1", "hc2")}
    _emit(cfg, render(out, cfg.fmt))
    return 0


def _cmd_embed(cfg: RunConfig) -> int:
    g = parse_edge_list(_read_text(cfg.options["graph"]))
    h0 = _base(cfg)
    base = two_section(h0)
    f = find_homomorphism(g, base, budget=cfg.options.get("budget", 10**8))
    if f is None:
        raise EmbeddingError("graph admits no homomorphism to the 2-section of h0")
    t, m = embed(g, h0, f)
    img = m.image
    induced = all(
        g.has_edge(u, v) == adjacent_in_generation(base, t, img[u], img[v])
        for u in range(g.n) for v in range(u + 1, g.n)
    )
    report = {"t": t, "homomorphism": list(f.image), "map": list(img),
              "injective": len(set(img)) == len(img), "induced": induced}
    _emit(cfg, render(report, cfg.fmt))
    return 0


def _cmd_tables(cfg: RunConfig) -> int:
    ks = [cfg.k] if cfg.k is not None else sorted(tables.ACCEPTANCE_T_MAX)
    rows, diffs = [], []
    for k in ks:
        t_top = cfg.options.get("t_max")
        if t_top is None:
            t_top = tables.ACCEPTANCE_T_MAX[k]
        for t in tables.generations(k):
            if t > t_top:
                continue
            c = census(_iterate(cfg, Hypergraph.single_edge(k), t), workers=cfg.threads)
            gold = tables.golden_row(k, t)
            got = {col: c.count(col) for col in tables.columns(k)}
            rows.append({"k": k, "t": t, "counts": {str(a): b for a, b in got.items()}})
            diffs += [{"k": k, "t": t, "motif": col, "expected": gold[col], "got": got[col]}
                      for col in gold if gold[col] != got[col]]
    _emit(cfg, render({"rows": rows, "mismatches": diffs, "clean": not diffs}, cfg.fmt))
    for d in diffs:
        print(f"k={d['k']} t={d['t']} motif {d['motif']}: expected {d['expected']}, got {d['got']}",
              file=sys.stderr)
    return 1 if diffs else 0


_HANDLERS = {
    "generate": _cmd_generate,
    "metrics": _cmd_metrics,
    "motifs": _cmd_motifs,
    "clustering": _cmd_clustering,
    "random": _cmd_random,
    "compare": _cmd_compare,
    "embed": _cmd_embed,
    "tables": _cmd_tables,
}


def run(cfg: RunConfig) -> int:
    cfg.validate()
    return _HANDLERS[cfg.command](cfg)


# --- argument parsing -----------------------------------------------------------

def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", "-o", help="write the report here instead of stdout")
    common.add_argument("--format", dest="fmt", choices=("json", "tsv"), default="json")
    common.add_argument("--threads", type=_positive, default=os.cpu_count() or 1)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--max-edges", type=_positive, default=None,
                        help="generation cap (default: $ILTH_MAX_EDGES or 10^7)")
    common.add_argument("--variant", choices=("ilth", "ilth2"), default="ilth")

    source = argparse.ArgumentParser(add_help=False)
    source.add_argument("--input", "-i", help="HGF file ('-' or absent: stdin)")
    source.add_argument("--generate", nargs=2, type=_nonneg, metavar=("K", "T"),
                        help="use generation T grown from a single K-edge")

    parser = argparse.ArgumentParser(prog="ilth", description="Iterated local transitivity hypergraphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", parents=[common], help="grow H_t and write it as HGF")
    p.add_argument("--k", type=_positive)
    p.add_argument("--t", type=_nonneg, default=0)
    p.add_argument("--input", "-i", help="initial hypergraph (default: one k-edge)")

    p = sub.add_parser("metrics", parents=[common, source], help="distances on the 2-section")
    p.add_argument("--spectrum", action="store_true", help="also compute adjacency eigenvalues")

    p = sub.add_parser("motifs", parents=[common, source], help="three-edge motif census")
    p.add_argument("--brute-force", action="store_true")
    p.add_argument("--by-cardinality-vector", action="store_true")
    p.add_argument("--growth", type=_nonneg, metavar="T_MAX",
                   help="census of every generation up to T_MAX with per-step ratios")

    p = sub.add_parser("clustering", parents=[common, source], help="HC1, HC2, HC3")
    p.add_argument("--iterate", type=_nonneg, default=0, metavar="T",
                   help="report generations 0..T of the input")
    p.add_argument("--no-hc3", action="store_true")

    p = sub.add_parser("random", parents=[common], help="sample G(n, k, p)")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--p", required=True, help="edge probability, decimal or fraction a/b")
    p.add_argument("--trial", type=_nonneg, default=0, help="stream index of the sample")
    p.add_argument("--trials", type=_positive, default=200)
    p.add_argument("--summary", action="store_true",
                   help="Monte Carlo HC1/HC2 summary instead of one sample")

    p = sub.add_parser("compare", parents=[common], help="ILTH against matched random hypergraphs")
    p.add_argument("--input", "-i")
    p.add_argument("--k", type=_positive)
    p.add_argument("--t-max", type=_nonneg, default=3)
    p.add_argument("--trials", type=_positive, default=200)
    p.add_argument("--metrics", default="hc1,hc2", help="comma list from hc1, hc2, motifs")

    p = sub.add_parser("embed", parents=[common], help="induced embedding of a graph into some H_t")
    p.add_argument("--graph", "-g", required=True, help="edge-list file: 'n m' then 'u v' lines")
    p.add_argument("--input", "-i", help="H_0 as HGF")
    p.add_argument("--k", type=_positive, help="H_0 is a single k-edge")
    p.add_argument("--budget", type=_positive, default=10**8)

    p = sub.add_parser("tables", parents=[common], help="reproduce the motif tables and diff them")
    p.add_argument("--k", type=int, choices=sorted(tables.ACCEPTANCE_T_MAX))
    p.add_argument("--t-max", type=_nonneg, default=None)
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(
        command=ns.command,
        input=getattr(ns, "input", None),
        output=ns.output,
        generate=tuple(ns.generate) if getattr(ns, "generate", None) else None,
        k=getattr(ns, "k", None),
        t=getattr(ns, "t", 0),
        variant=ns.variant,
        seed=ns.seed,
        trials=getattr(ns, "trials", 200),
        t_max=getattr(ns, "t_max", None) or 0,
        threads=ns.threads,
        fmt=ns.fmt,
        max_edges=ns.max_edges if ns.max_edges is not None else max_edges_cap(),
    )
    if cfg.command == "generate" and cfg.input is None and cfg.k is None:
        raise UsageError("generate needs --k or --input")
    opts = cfg.options
    if ns.command == "metrics":
        opts["spectrum"] = ns.spectrum
    elif ns.command == "motifs":
        opts.update(brute_force=ns.brute_force, by_cardinality_vector=ns.by_cardinality_vector,
                    growth=ns.growth)
    elif ns.command == "clustering":
        opts.update(iterate=ns.iterate, no_hc3=ns.no_hc3)
    elif ns.command == "random":
        opts.update(n=ns.n, p=ns.p, trial=ns.trial, summary=ns.summary)
    elif ns.command == "compare":
        metrics = tuple(x.strip() for x in ns.metrics.split(",") if x.strip())
        bad = set(metrics) - {"hc1", "hc2", "motifs"}
        if bad:
            raise UsageError(f"unknown metrics: {', '.join(sorted(bad))}")
        opts["metrics"] = metrics
    elif ns.command == "embed":
        opts.update(graph=ns.graph, budget=ns.budget)
    elif ns.command == "tables":
        opts["t_max"] = ns.t_max
    return cfg


def _error(exc: BaseException, kind: str) -> int:
    err: dict[str, Any] = {"type": kind, "message": str(exc)}
    if isinstance(exc, FormatError):
        err.update(line=exc.line, column=exc.column)
    sys.stderr.write(json.dumps({"schema": SCHEMA, "error": err}) + "\n")
    return 2 if kind == "usage" else 1


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        return run(config_from_args(ns))
    except UsageError as exc:
        return _error(exc, "usage")
    except FormatError as exc:
        return _error(exc, "format")
    except ResourceLimitError as exc:
        return _error(exc, "cap_exceeded")
    except (BudgetExhausted, ConvergenceError) as exc:
        return _error(exc, "budget_exhausted")
    except (EmbeddingError, HypergraphError) as exc:
        return _error(exc, "invalid_input")
    except (ValueError, ZeroDivisionError) as exc:
        return _error(exc, "invalid_argument")
    except OSError as exc:
        return _error(exc, "io")


if __name__ == "__main__":
    sys.exit(main())
