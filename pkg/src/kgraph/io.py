"""Plain-text edge lists and JSON codegree reports.

Edge-list format::

    # optional comment lines
    kgraph <k> <n> <m>
    <v1> <v2> ... <vk>      (m lines, 0-based, strictly increasing)
"""

from __future__ import annotations

import json
import re

from kgraph.errors import ParseError
from kgraph.hypergraph import CodegreeReport, Hypergraph, min_codegree_report


def _tokens(line):
    # (text, 1-based column) for each whitespace-separated token
    return [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", line)]


def _ints(tokens, lineno):
    values = []
    for tok, col in tokens:
        try:
            values.append(int(tok))
        except ValueError:
            raise ParseError(f"expected an integer, got {tok!r}", lineno, col) from None
        if values[-1] < 0:
            raise ParseError(f"negative value {tok}", lineno, col)
    return values


def parse_edge_list(text: str) -> Hypergraph:
    header = None
    header_line = 1
    edges = []
    seen = set()
    for lineno, line in enumerate(text.split("\n"), start=1):
        line = line.rstrip("\r")
        tokens = _tokens(line)
        if not tokens or tokens[0][0].startswith("#"):
            continue
        if header is None:
            if tokens[0][0] != "kgraph" or len(tokens) != 4:
                raise ParseError("expected header 'kgraph <k> <n> <m>'", lineno, tokens[0][1])
            k, n, m = _ints(tokens[1:], lineno)
            if k < 2:
                raise ParseError(f"uniformity must be >= 2, got {k}", lineno, tokens[1][1])
            header, header_line = (k, n, m), lineno
            continue
        k, n, m = header
        if len(tokens) != k:
            raise ParseError(f"edge has {len(tokens)} vertices, expected {k}", lineno, tokens[0][1])
        edge = _ints(tokens, lineno)
        for i in range(1, k):
            if edge[i] <= edge[i - 1]:
                raise ParseError("edge vertices must be strictly increasing", lineno, tokens[i][1])
        if edge[-1] >= n:
            raise ParseError(f"vertex {edge[-1]} out of range for n={n}", lineno, tokens[-1][1])
        e = tuple(edge)
        if e in seen:
            raise ParseError(f"duplicate edge {' '.join(map(str, e))}", lineno, tokens[0][1])
        seen.add(e)
        edges.append(e)
    if header is None:
        raise ParseError("missing 'kgraph' header", 1)
    k, n, m = header
    if len(edges) != m:
        raise ParseError(f"header declares {m} edges, found {len(edges)}", header_line)
    return Hypergraph(k, n, tuple(edges))


def emit_edge_list(h: Hypergraph) -> str:
    lines = [f"kgraph {h.k} {h.n} {h.m}"]
    lines += [" ".join(map(str, e)) for e in h.edges]
    return "\n".join(lines) + "\n"


def read_edge_list(path) -> Hypergraph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def write_edge_list(h: Hypergraph, path):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(emit_edge_list(h))


def report_dict(h: Hypergraph, report: CodegreeReport | None = None) -> dict:
    report = report or min_codegree_report(h)
    return {
        "k": h.k,
        "n": h.n,
        "m": h.m,
        "min_codegree": report.min_codegree,
        "max_codegree": report.max_codegree,
        "argmin": sorted(report.argmin),
        "histogram": [[d, c] for d, c in sorted(report.histogram.items())],
    }


def report_json(h: Hypergraph) -> str:
    return json.dumps(report_dict(h), indent=2)
