"""Mixed-integer program for the cable-trench problem and an LP-format writer.

Variables: ``x_i_j >= 0`` counts cables running from ``i`` to ``j`` across an
edge (one per direction) and binary ``y_i_j`` (``i < j``) says the trench is
dug.  Constraints:

* ``root_out``: sum of ``x_r_j`` equals ``n - 1``;
* ``flow_i`` for each non-root ``i``: outflow minus inflow equals ``-1``;
* ``trenches``: sum of all ``y`` equals ``n - 1``;
* ``couple_i_j``: ``(n - 1) y_i_j - x_i_j - x_j_i >= 0``.

Solving is left to external tools.
"""
from __future__ import annotations

import io
import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import TextIO, Union

from .graph import RootedGraph, SpanningTree


@dataclass(frozen=True)
class Constraint:
    name: str
    terms: tuple[tuple[str, Fraction], ...]
    sense: str  # "=", ">=" or "<="
    rhs: Fraction

    def holds(self, values: dict[str, Fraction]) -> bool:
        lhs = sum((c * values.get(v, 0) for v, c in self.terms), Fraction(0))
        if self.sense == "=":
            return lhs == self.rhs
        if self.sense == ">=":
            return lhs >= self.rhs
        return lhs <= self.rhs


@dataclass(frozen=True)
class MilpModel:
    vertex_count: int
    root: int
    arc_vars: tuple[str, ...]
    trench_vars: tuple[str, ...]
    objective: tuple[tuple[str, Fraction], ...]
    constraints: tuple[Constraint, ...]

    @property
    def variables(self) -> tuple[str, ...]:
        return self.arc_vars + self.trench_vars


def _x(i: int, j: int) -> str:
    return f"x_{i}_{j}"


def _y(i: int, j: int) -> str:
    return f"y_{min(i, j)}_{max(i, j)}"


def build_milp(g: RootedGraph) -> MilpModel:
    n, r = g.vertex_count, g.root
    arcs: list[str] = []
    trenches: list[str] = []
    objective: list[tuple[str, Fraction]] = []
    for e in g.edges:
        i, j = min(e.u, e.v), max(e.u, e.v)
        arcs += [_x(i, j), _x(j, i)]
        trenches.append(_y(i, j))
    for e in g.edges:
        i, j = min(e.u, e.v), max(e.u, e.v)
        objective += [(_x(i, j), e.gamma), (_x(j, i), e.gamma)]
    for e in g.edges:
        objective.append((_y(e.u, e.v), e.tau))

    one = Fraction(1)
    cons = [Constraint("root_out", tuple((_x(r, y), one) for y, _ in g.adjacency[r]), "=", Fraction(n - 1))]
    for i in range(n):
        if i == r:
            continue
        terms = [(_x(i, j), one) for j, _ in g.adjacency[i]]
        terms += [(_x(k, i), -one) for k, _ in g.adjacency[i]]
        cons.append(Constraint(f"flow_{i}", tuple(terms), "=", Fraction(-1)))
    cons.append(Constraint("trenches", tuple((y, one) for y in trenches), "=", Fraction(n - 1)))
    for e in g.edges:
        i, j = min(e.u, e.v), max(e.u, e.v)
        cons.append(
            Constraint(
                f"couple_{i}_{j}",
                ((_y(i, j), Fraction(n - 1)), (_x(i, j), -one), (_x(j, i), -one)),
                ">=",
                Fraction(0),
            )
        )
    return MilpModel(n, r, tuple(arcs), tuple(trenches), tuple(objective), tuple(cons))


def encode_tree(g: RootedGraph, t: SpanningTree) -> dict[str, Fraction]:
    """Variable values describing ``t``: one cable from the root to every vertex."""
    values = {v: Fraction(0) for v in build_milp(g).variables}
    below = [1] * g.vertex_count  # vertices in the subtree of each vertex, itself included
    depth_order = []
    stack = [g.root]
    seen = {g.root}
    while stack:
        x = stack.pop()
        depth_order.append(x)
        for y, eid in g.adjacency[x]:
            if eid in t.edges and y not in seen:
                seen.add(y)
                stack.append(y)
    for x in reversed(depth_order):
        eid = t.parent_edge[x]
        if eid is None:
            continue
        p = g.edges[eid].other(x)
        below[p] += below[x]
        values[_x(p, x)] = Fraction(below[x])
        values[_y(p, x)] = Fraction(1)
    return values


def objective_value(model: MilpModel, values: dict[str, Fraction]) -> Fraction:
    return sum((c * values.get(v, 0) for v, c in model.objective), Fraction(0))


def violated(model: MilpModel, values: dict[str, Fraction]) -> list[str]:
    """Names of constraints and bounds that ``values`` breaks."""
    bad = [c.name for c in model.constraints if not c.holds(values)]
    bad += [f"bound:{v}" for v in model.arc_vars if values.get(v, 0) < 0]
    bad += [f"binary:{v}" for v in model.trench_vars if values.get(v, 0) not in (0, 1)]
    return bad


def format_number(q: Fraction) -> str:
    """Exact decimal when the denominator allows it, else 17 significant digits."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    d = q.denominator
    twos = fives = 0
    while d % 2 == 0:
        d //= 2
        twos += 1
    while d % 5 == 0:
        d //= 5
        fives += 1
    if d == 1:
        places = max(twos, fives)
        scaled = q * 10**places
        sign = "-" if scaled < 0 else ""
        digits = str(abs(scaled.numerator)).rjust(places + 1, "0")
        return f"{sign}{digits[:-places]}.{digits[-places:]}"
    return f"{float(q):.17g}"


def _linear(terms: tuple[tuple[str, Fraction], ...]) -> str:
    if not terms:
        return "0"
    parts = []
    for k, (var, coef) in enumerate(terms):
        mag = format_number(abs(coef))
        body = var if mag == "1" else f"{mag} {var}"
        if coef < 0:
            parts.append(f"- {body}")
        else:
            parts.append(body if k == 0 else f"+ {body}")
    return " ".join(parts)


def write_lp(model: MilpModel, destination: Union[str, Path, TextIO, None] = None) -> str:
    """Render the model in CPLEX LP format; also write it to ``destination`` if given."""
    out = io.StringIO()
    out.write(f"\\ cable-trench MILP: {model.vertex_count} vertices, root {model.root}\n")
    out.write("Minimize\n")
    out.write(f" obj: {_linear(model.objective)}\n")
    out.write("Subject To\n")
    for c in model.constraints:
        if not c.terms:
            # constant row (single-vertex graph); LP readers reject rows without variables
            out.write(f"\\ {c.name}: 0 {c.sense} {format_number(c.rhs)}\n")
            continue
        out.write(f" {c.name}: {_linear(c.terms)} {c.sense} {format_number(c.rhs)}\n")
    if model.arc_vars:
        out.write("Bounds\n")
        for v in model.arc_vars:
            out.write(f" {v} >= 0\n")
    if model.trench_vars:
        out.write("Binary\n")
        for v in model.trench_vars:
            out.write(f" {v}\n")
    out.write("End\n")
    text = out.getvalue()
    if destination is not None:
        if isinstance(destination, (str, Path)):
            Path(destination).write_text(text)
        else:
            destination.write(text)
    return text


_VAR = re.compile(r"\b([xy]_\d+_\d+)\b")


def read_lp_summary(text: str) -> dict:
    """Light parse of an LP file written by :func:`write_lp`.

    Returns the variable names seen, the binaries, and the number of
    constraint rows; enough to round-trip check the writer.
    """
    section = None
    variables: set[str] = set()
    binaries: set[str] = set()
    rows = 0
    objective_terms = 0
    for line in text.splitlines():
        s = line.strip()
        if not s or s.startswith("\\"):
            continue
        low = s.lower()
        if low in ("minimize", "subject to", "bounds", "binary", "end"):
            section = low
            continue
        found = _VAR.findall(s)
        variables.update(found)
        if section == "minimize":
            objective_terms += len(found)
        elif section == "subject to":
            rows += 1
        elif section == "binary":
            binaries.update(found)
    return {"variables": variables, "binaries": binaries, "rows": rows, "objective_terms": objective_terms}
