"""JSON document kinds: set systems, matrices and ribbon graphs.

    set-system   {"ground": [names], "feasible": [[names], ...]}
    matrix       {"labels": [names], "rows": [[0/1, ...], ...]}
    ribbon-graph {"vertices": [[half-edges in cyclic order], ...],
                  "edges": [{"ends": [h, h], "twisted": bool, "name": str}, ...]}

``"name"`` is optional on input (edges default to ``e1``, ``e2``, ...).
"""

from __future__ import annotations

from typing import Any

from .errors import TwistPolyError
from .gf2 import SymMatGF2
from .ribbon import Edge, RibbonGraph
from .setsys import SetSystem, make_set_system
from .widthpoly import PolyReport, WidthPolynomial


class DocumentError(TwistPolyError):
    """A JSON document does not match its schema; ``path`` names the offending field."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


def _expect_list(obj, path: str) -> list:
    if not isinstance(obj, list):
        raise DocumentError(path, f"expected a list, got {type(obj).__name__}")
    return obj


def _expect_names(obj, path: str) -> list[str]:
    items = _expect_list(obj, path)
    for i, x in enumerate(items):
        if not isinstance(x, str) or not x:
            raise DocumentError(f"{path}[{i}]", f"expected a non-empty string, got {x!r}")
    return items


def _expect_object(doc, keys: set[str], path: str = "$") -> dict:
    if not isinstance(doc, dict):
        raise DocumentError(path, f"expected a JSON object, got {type(doc).__name__}")
    missing = sorted(keys - set(doc))
    if missing:
        raise DocumentError(path, f"missing field(s): {', '.join(missing)}")
    return doc


def parse_set_system(doc: Any) -> SetSystem:
    doc = _expect_object(doc, {"ground", "feasible"})
    ground = _expect_names(doc["ground"], "$.ground")
    feasible = _expect_list(doc["feasible"], "$.feasible")
    sets = [_expect_names(f, f"$.feasible[{i}]") for i, f in enumerate(feasible)]
    try:
        return make_set_system(ground, sets)
    except TwistPolyError as exc:
        raise DocumentError("$", str(exc)) from None


def render_set_system(D: SetSystem) -> dict:
    return {"ground": list(D.labels), "feasible": [D.names(x) for x in D.feasible]}


def parse_matrix(doc: Any) -> SymMatGF2:
    doc = _expect_object(doc, {"labels", "rows"})
    labels = _expect_names(doc["labels"], "$.labels")
    rows = _expect_list(doc["rows"], "$.rows")
    if len(rows) != len(labels):
        raise DocumentError("$.rows", f"{len(rows)} rows for {len(labels)} labels")
    for i, row in enumerate(rows):
        row = _expect_list(row, f"$.rows[{i}]")
        if len(row) != len(labels):
            raise DocumentError(f"$.rows[{i}]", f"length {len(row)}, expected {len(labels)}")
        for j, v in enumerate(row):
            if isinstance(v, bool) or v not in (0, 1):
                raise DocumentError(f"$.rows[{i}][{j}]", f"entries must be 0 or 1, got {v!r}")
    try:
        return SymMatGF2.from_lists(rows, labels)
    except (TwistPolyError, ValueError) as exc:
        raise DocumentError("$.rows", str(exc)) from None


def render_matrix(C: SymMatGF2) -> dict:
    return {"labels": list(C.labels), "rows": C.to_lists()}


def parse_ribbon_graph(doc: Any) -> RibbonGraph:
    doc = _expect_object(doc, {"vertices", "edges"})
    vertices = _expect_list(doc["vertices"], "$.vertices")
    rots = [tuple(_expect_names(r, f"$.vertices[{i}]")) for i, r in enumerate(vertices)]
    edges = []
    for i, ed in enumerate(_expect_list(doc["edges"], "$.edges")):
        path = f"$.edges[{i}]"
        ed = _expect_object(ed, {"ends"}, path)
        ends = _expect_names(ed["ends"], path + ".ends")
        if len(ends) != 2:
            raise DocumentError(path + ".ends", f"expected 2 half-edges, got {len(ends)}")
        twisted = ed.get("twisted", False)
        if not isinstance(twisted, bool):
            raise DocumentError(path + ".twisted", f"expected a boolean, got {twisted!r}")
        name = ed.get("name", "")
        if not isinstance(name, str):
            raise DocumentError(path + ".name", f"expected a string, got {name!r}")
        edges.append(Edge(ends[0], ends[1], twisted, name))
    try:
        return RibbonGraph(tuple(rots), tuple(edges))
    except TwistPolyError as exc:
        raise DocumentError("$", str(exc)) from None


def render_ribbon_graph(G: RibbonGraph) -> dict:
    return {
        "vertices": [list(rot) for rot in G.vertices],
        "edges": [{"ends": [ed.a, ed.b], "twisted": ed.twisted, "name": ed.name} for ed in G.edges],
    }


def render_polynomial(p: WidthPolynomial) -> dict[str, int]:
    return {str(d): c for d, c in p.coefficients.items()}


def render_report(r: PolyReport) -> dict:
    return {
        "category": r.category,
        "gaps": [list(g) for g in r.gaps],
        "even_part_interpolating": r.even_part_interpolating,
        "odd_part_interpolating": r.odd_part_interpolating,
        "theorem5_conclusion": r.theorem5_conclusion,
    }
