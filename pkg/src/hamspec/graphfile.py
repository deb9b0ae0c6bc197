"""Plain-text edge-list format.

    n m
    u v        (m lines, 0 <= u < v < n, strictly increasing in (u, v))

Fields are whitespace-separated decimal integers; lines end in ``\\n``.
"""

from __future__ import annotations

import re

from .errors import InvariantViolation, ParseError
from .graph import Graph, build_graph

_INT = re.compile(r"\d+")


def _ints(line: str, lineno: int, count: int) -> list[int]:
    fields = line.split()
    if len(fields) != count or not all(_INT.fullmatch(f) for f in fields):
        raise ParseError(f"expected {count} non-negative integers, got {line!r}", lineno)
    return [int(f) for f in fields]


def parse_graph_file(text: str) -> Graph:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise ParseError("empty file", 1)
    n, m = _ints(lines[0], 1, 2)
    if n < 1:
        raise InvariantViolation(f"vertex count must be >= 1, got {n}", 1)
    if len(lines) - 1 != m:
        raise ParseError(f"header declares {m} edges, found {len(lines) - 1} edge lines", len(lines))
    edges = []
    prev = None
    for lineno, line in enumerate(lines[1:], start=2):
        u, v = _ints(line, lineno, 2)
        if u >= v:
            raise InvariantViolation(f"edge ({u}, {v}) must have u < v", lineno)
        if v >= n:
            raise InvariantViolation(f"vertex {v} out of range for n = {n}", lineno)
        if prev is not None and (u, v) <= prev:
            kind = "duplicate" if (u, v) == prev else "unsorted"
            raise InvariantViolation(f"{kind} edge ({u}, {v}) after {prev}", lineno)
        prev = (u, v)
        edges.append((u, v))
    return build_graph(n, edges)


def format_graph_file(g: Graph) -> str:
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(out) + "\n"


def read_graph(path) -> Graph:
    with open(path, encoding="ascii") as fh:
        return parse_graph_file(fh.read())


def write_graph(g: Graph, path) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(format_graph_file(g))
