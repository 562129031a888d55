"""JSON graph documents, DOT text and circle-layout SVG drawings.

Every emitter sorts its input, so equal graphs give identical bytes.
"""

from __future__ import annotations

import json
import math
from typing import Dict, Optional, Tuple

from .errors import InputError
from .farey import Fraction, circle_order
from .graph_core import BLACK, BLUE, Graph
from .grain_lines import GrainLinePrefix
from .minor_maps import MinorMap

GRAPH_FORMAT = "fareyminor.graph"
PREFIX_FORMAT = "fareyminor.prefix"
VERSION = 1


def _dumps(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=1) + "\n"


def _loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def _label_text(lab) -> Optional[str]:
    if lab is None:
        return None
    if isinstance(lab, Fraction):
        return str(lab)
    raise InputError(f"cannot serialize label {lab!r}")


# -- layout ----------------------------------------------------------------------


def circle_angles(G: Graph) -> Dict[int, float]:
    """Angle in turns for every vertex.

    Labelled graphs are placed by circle order of their labels; a graph with
    no negative labels occupies the upper half circle from 0/1 to 1/0.
    """
    rank = circle_order(G)
    n = len(rank)
    labels = [G.label(v) for v in G.vertices]
    half = (
        n > 1
        and all(isinstance(lab, Fraction) for lab in labels)
        and all(lab.is_infinite or lab.num >= 0 for lab in labels)
    )
    if half:
        return {v: 0.5 * r / (n - 1) for v, r in rank.items()}
    return {v: r / n for v, r in rank.items()}


# -- JSON ------------------------------------------------------------------------


def graph_to_doc(G: Graph, provenance: str = "") -> dict:
    angles = circle_angles(G)
    vertices = []
    for v in G.sorted_vertices():
        rec = {"id": v, "angle": round(angles[v], 12)}
        text = _label_text(G.label(v))
        if text is not None:
            rec["label"] = text
        vertices.append(rec)
    edges = []
    for a, b in G.sorted_edges():
        rec = {"u": a, "v": b}
        if G.is_coloured:
            rec["colour"] = G.colour(a, b)
        edges.append(rec)
    return {
        "format": GRAPH_FORMAT,
        "version": VERSION,
        "metadata": {"provenance": provenance},
        "vertices": vertices,
        "edges": edges,
    }


def emit_json(G: Graph, provenance: str = "") -> str:
    return _dumps(graph_to_doc(G, provenance))


def _require(cond: bool, where: str, what: str):
    if not cond:
        raise InputError(f"invalid graph document at {where}: {what}")


def doc_to_graph(doc) -> Graph:
    _require(isinstance(doc, dict), "top level", "expected an object")
    _require(doc.get("format") == GRAPH_FORMAT, "format", f"expected {GRAPH_FORMAT!r}")
    _require(doc.get("version") == VERSION, "version", f"expected {VERSION}")
    vs, es = doc.get("vertices"), doc.get("edges")
    _require(isinstance(vs, list), "vertices", "expected a list")
    _require(isinstance(es, list), "edges", "expected a list")
    ids, labels, colours, edges = [], {}, {}, []
    for i, rec in enumerate(vs):
        _require(isinstance(rec, dict) and isinstance(rec.get("id"), int), f"vertices[{i}]", "needs an integer id")
        ids.append(rec["id"])
        if "label" in rec:
            _require(isinstance(rec["label"], str), f"vertices[{i}].label", "expected num/den text")
            labels[rec["id"]] = Fraction.parse(rec["label"])
    for i, rec in enumerate(es):
        _require(
            isinstance(rec, dict) and isinstance(rec.get("u"), int) and isinstance(rec.get("v"), int),
            f"edges[{i}]",
            "needs integer endpoints u and v",
        )
        edges.append((rec["u"], rec["v"]))
        if "colour" in rec:
            _require(rec["colour"] in (BLUE, BLACK), f"edges[{i}].colour", "expected blue or black")
            colours[(rec["u"], rec["v"])] = rec["colour"]
    return Graph(ids, edges, labels=labels, colours=colours or None)


def parse_json(text: str) -> Graph:
    return doc_to_graph(_loads(text))


def prefix_to_doc(p: GrainLinePrefix) -> dict:
    return {
        "format": PREFIX_FORMAT,
        "version": VERSION,
        "x": p.x,
        "y": p.y,
        "order": list(p.order),
        "paths": [list(P) for P in p.paths],
        "start_index": p.start_index,
    }


def emit_prefix(p: GrainLinePrefix) -> str:
    return _dumps(prefix_to_doc(p))


def parse_prefix(text: str) -> GrainLinePrefix:
    doc = _loads(text)
    _require(isinstance(doc, dict) and doc.get("format") == PREFIX_FORMAT, "format", f"expected {PREFIX_FORMAT!r}")
    try:
        return GrainLinePrefix(
            int(doc["x"]),
            int(doc["y"]),
            tuple(int(v) for v in doc["order"]),
            tuple(tuple(int(v) for v in P) for P in doc["paths"]),
            int(doc.get("start_index", 0)),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"invalid prefix document: {exc}") from None


def parse_paths(text: str):
    """A bare JSON list of integer paths, or an object with a "paths" list."""
    doc = _loads(text)
    if isinstance(doc, dict):
        doc = doc.get("paths")
    _require(isinstance(doc, list), "paths", "expected a list of paths")
    try:
        return [tuple(int(v) for v in P) for P in doc]
    except (TypeError, ValueError):
        raise InputError("paths must be lists of integer vertex ids") from None


def minor_map_to_doc(m: MinorMap) -> dict:
    return {
        "pattern": graph_to_doc(m.pattern),
        "branch_sets": {str(x): sorted(s) for x, s in sorted(m.fibres().items())},
    }


# -- DOT -------------------------------------------------------------------------


def emit_dot(G: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in G.sorted_vertices():
        text = _label_text(G.label(v))
        lines.append(f'  {v} [label="{text}"];' if text is not None else f"  {v};")
    for a, b in G.sorted_edges():
        colour = G.colour(a, b) if G.is_coloured else None
        lines.append(f"  {a} -- {b} [color={colour}];" if colour else f"  {a} -- {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- SVG -------------------------------------------------------------------------

SIZE = 400
RADIUS = 180.0


def _point(turns: float) -> Tuple[float, float]:
    t = 2 * math.pi * turns
    return SIZE / 2 + RADIUS * math.cos(t), SIZE / 2 - RADIUS * math.sin(t)


def _arc(p, q) -> str:
    """SVG path for the arc through p and q meeting the layout circle at right angles."""
    cx = cy = SIZE / 2
    a1 = math.atan2(cy - p[1], p[0] - cx)
    a2 = math.atan2(cy - q[1], q[0] - cx)
    delta = abs((a2 - a1 + math.pi) % (2 * math.pi) - math.pi)
    if abs(math.pi - delta) < 1e-9 or delta < 1e-9:
        return f"M {p[0]:.3f} {p[1]:.3f} L {q[0]:.3f} {q[1]:.3f}"
    r = RADIUS * math.tan(delta / 2)
    mx, my = (p[0] + q[0]) / 2 - cx, (p[1] + q[1]) / 2 - cy
    norm = math.hypot(mx, my)
    dist = RADIUS / math.cos(delta / 2)
    ox, oy = cx + mx / norm * dist, cy + my / norm * dist
    cross = (p[0] - ox) * (q[1] - oy) - (p[1] - oy) * (q[0] - ox)
    sweep = 1 if cross > 0 else 0
    return f"M {p[0]:.3f} {p[1]:.3f} A {r:.3f} {r:.3f} 0 0 {sweep} {q[0]:.3f} {q[1]:.3f}"


def emit_svg_circle(G: Graph, chords: bool = False) -> str:
    """Vertices on a circle, edges as arcs orthogonal to it (or straight chords)."""
    angles = circle_angles(G)
    pos = {v: _point(t) for v, t in angles.items()}
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">',
        f'<circle cx="{SIZE / 2:.3f}" cy="{SIZE / 2:.3f}" r="{RADIUS:.3f}" fill="none" stroke="#cccccc"/>',
    ]
    for a, b in G.sorted_edges():
        colour = (G.colour(a, b) if G.is_coloured else None) or BLACK
        if chords:
            d = f"M {pos[a][0]:.3f} {pos[a][1]:.3f} L {pos[b][0]:.3f} {pos[b][1]:.3f}"
        else:
            d = _arc(pos[a], pos[b])
        out.append(f'<path d="{d}" fill="none" stroke="{colour}" class="edge"/>')
    for v in G.sorted_vertices():
        x, y = pos[v]
        text = _label_text(G.label(v))
        title = f"<title>{text}</title>" if text is not None else ""
        out.append(f'<circle cx="{x:.3f}" cy="{y:.3f}" r="3" fill="black" class="vertex" data-id="{v}">{title}</circle>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
