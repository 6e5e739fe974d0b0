"""Plain-text instance files.

::

    # comments and blank lines are ignored
    ctp 1 <vertices> <edges> <root>
    <u> <v> <gamma> <tau>
    ...

Weights are integers, decimals (``0.25``) or ``p/q`` rationals and are read
exactly.
"""
from __future__ import annotations

import re
from fractions import Fraction
from pathlib import Path

from .graph import GraphError, RootedGraph

FORMAT_TAG = "ctp"
FORMAT_VERSION = 1

_WEIGHT = re.compile(r"^(\d+(\.\d+)?|\d+/\d+)$")


class InstanceError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _int(token: str, what: str, line: int) -> int:
    if not re.fullmatch(r"\d+", token):
        raise InstanceError(f"{what} must be a nonnegative integer, got {token!r}", line)
    return int(token)


def _weight(token: str, what: str, line: int) -> Fraction:
    if not _WEIGHT.match(token):
        raise InstanceError(f"bad rational for {what}: {token!r}", line)
    try:
        return Fraction(token)
    except ZeroDivisionError:
        raise InstanceError(f"zero denominator in {what}: {token!r}", line) from None


def parse_instance(text: str) -> RootedGraph:
    header = None
    edges: list[tuple[int, int, Fraction, Fraction]] = []
    edge_lines: list[int] = []
    seen: dict[frozenset, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        s = raw.split("#", 1)[0].strip()
        if not s:
            continue
        tokens = s.split()
        if header is None:
            if len(tokens) != 5 or tokens[0] != FORMAT_TAG:
                raise InstanceError(f"expected header '{FORMAT_TAG} {FORMAT_VERSION} <vertices> <edges> <root>'", lineno)
            if tokens[1] != str(FORMAT_VERSION):
                raise InstanceError(f"unsupported format version {tokens[1]!r}", lineno)
            n = _int(tokens[2], "vertex count", lineno)
            m = _int(tokens[3], "edge count", lineno)
            root = _int(tokens[4], "root", lineno)
            if n < 1:
                raise InstanceError("vertex count must be positive", lineno)
            if root >= n:
                raise InstanceError(f"root {root} out of range 0..{n - 1}", lineno)
            header = (n, m, root, lineno)
            continue
        n, m, root, header_line = header
        if len(tokens) != 4:
            raise InstanceError(f"edge record needs 'u v gamma tau', got {len(tokens)} fields", lineno)
        if len(edges) == m:
            raise InstanceError(f"more edge records than the declared {m}", lineno)
        u = _int(tokens[0], "endpoint", lineno)
        v = _int(tokens[1], "endpoint", lineno)
        if u >= n or v >= n:
            raise InstanceError(f"endpoint out of range 0..{n - 1}", lineno)
        if u == v:
            raise InstanceError(f"self-loop at vertex {u}", lineno)
        pair = frozenset((u, v))
        if pair in seen:
            raise InstanceError(f"duplicate edge ({u}, {v}), first given on line {seen[pair]}", lineno)
        seen[pair] = lineno
        edges.append((u, v, _weight(tokens[2], "gamma", lineno), _weight(tokens[3], "tau", lineno)))
        edge_lines.append(lineno)
    if header is None:
        raise InstanceError("empty instance: missing header")
    n, m, root, header_line = header
    if len(edges) != m:
        raise InstanceError(f"header declares {m} edges but {len(edges)} were given", header_line)
    try:
        return RootedGraph(n, tuple(edges), root)
    except GraphError as exc:
        raise InstanceError(str(exc), header_line) from None


def format_instance(g: RootedGraph) -> str:
    lines = [f"{FORMAT_TAG} {FORMAT_VERSION} {g.vertex_count} {g.edge_count} {g.root}"]
    lines += [f"{e.u} {e.v} {e.gamma} {e.tau}" for e in g.edges]
    return "\n".join(lines) + "\n"


def read_instance(path: str | Path) -> RootedGraph:
    return parse_instance(Path(path).read_text())


def write_instance(g: RootedGraph, path: str | Path) -> None:
    Path(path).write_text(format_instance(g))
