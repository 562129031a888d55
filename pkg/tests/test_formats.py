import json
import math
import re
import subprocess
import sys

import pytest

from fareyminor.errors import InputError
from fareyminor.farey import (
    blue_hamilton_paths,
    build_determinant_graph,
    build_farey,
    build_halved_farey,
    build_prop31,
    complete_graph,
    subdivide,
)
from fareyminor.formats import (
    circle_angles,
    emit_dot,
    emit_json,
    emit_prefix,
    emit_svg_circle,
    parse_json,
    parse_paths,
    parse_prefix,
)
from fareyminor.grain_lines import from_compatible_paths
from fareyminor.graph_core import Graph


def corpus():
    out = []
    for n in range(7):
        out += [build_halved_farey(n), build_farey(n)]
    out += [build_prop31(d) for d in range(3)]
    out += [build_determinant_graph(build_halved_farey(4).labels.values()), subdivide(build_farey(3))]
    out += [complete_graph(4), Graph(), Graph([5])]
    return out


@pytest.mark.parametrize("G", corpus(), ids=repr)
def test_json_round_trip(G):
    assert parse_json(emit_json(G)) == G


def test_smallest_document():
    doc = json.loads(emit_json(build_halved_farey(0)))
    assert [v["label"] for v in doc["vertices"]] == ["0/1", "1/0"]
    assert doc["edges"] == [{"colour": "blue", "u": 0, "v": 1}]
    assert len(json.loads(emit_json(build_prop31(1)))["vertices"]) == 17


def test_angles_are_turns():
    doc = json.loads(emit_json(build_farey(3)))
    assert all(0 <= v["angle"] < 1 for v in doc["vertices"])


@pytest.mark.parametrize(
    "text, fragment",
    [
        ('{"format": ', "line 1"),
        ("{}", "format"),
        ('{"format": "fareyminor.graph", "version": 1, "vertices": [{"id": "a"}], "edges": []}', "vertices[0]"),
        ('{"format": "fareyminor.graph", "version": 1, "vertices": [], "edges": [{"u": 0}]}', "edges[0]"),
    ],
)
def test_parse_errors_say_where(text, fragment):
    with pytest.raises(InputError, match=re.escape(fragment)):
        parse_json(text)


def test_prefix_round_trip_and_paths():
    p = from_compatible_paths(blue_hamilton_paths(3))
    assert parse_prefix(emit_prefix(p)) == p
    assert parse_paths("[[0, 1], [0, 2, 1]]") == [(0, 1), (0, 2, 1)]
    assert parse_paths('{"paths": [[0, 1]]}') == [(0, 1)]
    with pytest.raises(InputError):
        parse_paths('[["a"]]')


def test_dot_counts():
    dot = emit_dot(build_halved_farey(1))
    assert dot.count("label=") == 3 and dot.count(" -- ") == 3 and dot.count("color=blue") == 2
    assert emit_dot(build_halved_farey(0)).count(" -- ") == 1
    dot = emit_dot(build_farey(2))
    assert dot.count("label=") == 8 and dot.count(" -- ") == 13 and "color" not in dot


def svg_points(svg):
    return [(float(x), float(y)) for x, y in re.findall(r'<circle cx="([\d.]+)" cy="([\d.]+)" r="3"', svg)]


def test_svg_halved_graph_on_semicircle_in_path_order():
    G = build_halved_farey(2)
    pts = svg_points(emit_svg_circle(G))
    assert len(pts) == 5
    angles = circle_angles(G)
    path = blue_hamilton_paths(2)[-1]
    assert [angles[v] for v in path] == [0.0, 0.125, 0.25, 0.375, 0.5]
    assert all(y <= 200.0 + 1e-9 for _, y in pts)


def test_svg_two_points_antipodal():
    pts = svg_points(emit_svg_circle(Graph(range(2), [(0, 1)])))
    (x1, y1), (x2, y2) = pts
    assert math.isclose(x1 + x2, 400.0) and math.isclose(y1 + y2, 400.0)


def test_svg_full_truncation_and_chords():
    svg = emit_svg_circle(build_farey(4))
    assert len(svg_points(svg)) == 32
    assert svg.count('class="edge"') == build_farey(4).number_of_edges()
    assert " A " in svg
    assert " A " not in emit_svg_circle(build_farey(4), chords=True)


def arc_centre(p, q, r, large, sweep):
    """Centre of an SVG elliptical arc with equal radii and no rotation."""
    x1, y1 = (p[0] - q[0]) / 2, (p[1] - q[1]) / 2
    sign = 1 if large != sweep else -1
    coef = sign * math.sqrt(max(0.0, (r * r - x1 * x1 - y1 * y1) / (x1 * x1 + y1 * y1)))
    return coef * y1 + (p[0] + q[0]) / 2, -coef * x1 + (p[1] + q[1]) / 2


def test_arcs_are_orthogonal_to_the_circle_and_bow_inwards():
    svg = emit_svg_circle(build_farey(3))
    arcs = re.findall(r"M ([\d.]+) ([\d.]+) A ([\d.]+) [\d.]+ 0 (\d) (\d) ([\d.]+) ([\d.]+)", svg)
    assert arcs
    for x1, y1, r, large, sweep, x2, y2 in arcs:
        r = float(r)
        cx, cy = arc_centre((float(x1), float(y1)), (float(x2), float(y2)), r, int(large), int(sweep))
        # the far centre is the orthogonal circle's; the near one would bulge outwards
        assert math.isclose(math.hypot(cx - 200, cy - 200), math.hypot(180, r), rel_tol=1e-3)


EMIT = """
import sys
from fareyminor.farey import build_farey, build_prop31, subdivide
from fareyminor.formats import emit_dot, emit_json, emit_svg_circle
for G in (build_farey(4), build_prop31(1), subdivide(build_farey(2))):
    sys.stdout.write(emit_json(G) + emit_dot(G) + emit_svg_circle(G) + emit_svg_circle(G, chords=True))
"""


def test_emitters_byte_identical_across_processes():
    runs = [
        subprocess.run([sys.executable, "-c", EMIT], capture_output=True, check=True, env={"PYTHONHASHSEED": seed})
        .stdout
        for seed in ("1", "2")
    ]
    assert runs[0] == runs[1] and runs[0]
