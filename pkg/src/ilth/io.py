"""HGF hypergraph files and plain edge-list graph files.

HGF: header ``k n m``, then ``m`` lines of ``k`` ascending vertex ids.
Edge list: header ``n m``, then ``m`` lines ``u v``. In both formats lines
starting with ``#`` are comments and blank lines are ignored.
"""

from __future__ import annotations

from typing import Iterator, TextIO

from .hypergraph import Graph, Hypergraph, HypergraphError


class FormatError(ValueError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def _content_lines(text: str) -> Iterator[tuple[int, str]]:
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.rstrip("\r")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        yield lineno, line


def _ints(line: str, lineno: int) -> list[int]:
    out = []
    col = 1
    for tok in line.split(" "):
        if tok == "":
            col += 1
            continue
        try:
            out.append(int(tok, 10))
        except ValueError:
            raise FormatError(f"expected integer, got {tok!r}", lineno, col) from None
        col += len(tok) + 1
    return out


def parse_hgf(text: str) -> Hypergraph:
    lines = _content_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise FormatError("missing header 'k n m'", 1) from None
    head = _ints(header, lineno)
    if len(head) != 3:
        raise FormatError(f"header needs 3 integers, got {len(head)}", lineno)
    k, n, m = head
    edges = []
    for lineno, line in lines:
        ids = _ints(line, lineno)
        if len(ids) != k:
            raise FormatError(f"expected {k} vertex ids, got {len(ids)}", lineno)
        for a, b in zip(ids, ids[1:]):
            if a >= b:
                raise FormatError("vertex ids must be strictly ascending", lineno)
        edges.append(ids)
    if len(edges) != m:
        raise FormatError(f"header declares {m} edges, found {len(edges)}", lineno)
    try:
        return Hypergraph.from_edges(k, n, edges)
    except HypergraphError as exc:
        raise FormatError(str(exc), lineno) from None


def format_hgf(h: Hypergraph, comment: str | None = None) -> str:
    parts = []
    if comment:
        parts += [f"# {c}" for c in comment.splitlines()]
    parts.append(f"{h.k} {h.n} {h.m}")
    parts += [" ".join(map(str, e)) for e in h.edges]
    return "\n".join(parts) + "\n"


def read_hgf(path_or_file: str | TextIO) -> Hypergraph:
    if isinstance(path_or_file, str):
        with open(path_or_file, encoding="ascii") as fh:
            return parse_hgf(fh.read())
    return parse_hgf(path_or_file.read())


def write_hgf(h: Hypergraph, path: str, comment: str | None = None) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(format_hgf(h, comment))


def parse_edge_list(text: str) -> Graph:
    lines = _content_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise FormatError("missing header 'n m'", 1) from None
    head = _ints(header, lineno)
    if len(head) != 2:
        raise FormatError(f"header needs 2 integers, got {len(head)}", lineno)
    n, m = head
    es = []
    for lineno, line in lines:
        pair = _ints(line, lineno)
        if len(pair) != 2:
            raise FormatError(f"expected 2 vertex ids, got {len(pair)}", lineno)
        es.append((pair[0], pair[1]))
    if len(es) != m:
        raise FormatError(f"header declares {m} edges, found {len(es)}", lineno)
    try:
        return Graph.from_edges(n, es)
    except HypergraphError as exc:
        raise FormatError(str(exc), lineno) from None


def format_edge_list(g: Graph) -> str:
    es = g.edges()
    return "\n".join([f"{g.n} {len(es)}"] + [f"{u} {v}" for u, v in es]) + "\n"
