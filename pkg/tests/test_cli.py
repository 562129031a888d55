import json

import pytest

from fareyminor import grain_lines as gl
from fareyminor.cli import main
from fareyminor.farey import blue_hamilton_paths, build_farey, build_halved_farey, root_ids
from fareyminor.formats import emit_json, emit_prefix, parse_json, parse_prefix


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_gen_json_round_trips(capsys, tmp_path):
    code, out, _ = run(capsys, "gen", "--kind", "halved", "--depth", "3")
    assert code == 0
    assert parse_json(out) == build_halved_farey(3)
    target = tmp_path / "g.json"
    assert run(capsys, "gen", "--kind", "full", "--depth", "2", "--out", str(target))[0] == 0
    assert parse_json(target.read_text()) == build_farey(2)


@pytest.mark.parametrize("kind", ["halved", "full", "determinant", "prop31"])
@pytest.mark.parametrize("fmt", ["json", "dot", "svg"])
def test_gen_every_kind_and_format(capsys, kind, fmt):
    code, out, _ = run(capsys, "gen", "--kind", kind, "--depth", "2", "--format", fmt)
    assert code == 0 and out
    assert run(capsys, "gen", "--kind", kind, "--depth", "2", "--format", fmt)[1] == out


def test_gen_svg_chords(capsys):
    code, out, _ = run(capsys, "gen", "--kind", "halved", "--depth", "2", "--format", "svg", "--chords")
    assert code == 0 and " A " not in out and out.startswith("<svg")


def test_paths(capsys):
    code, out, _ = run(capsys, "paths", "--depth", "2")
    assert code == 0
    assert json.loads(out) == [["0/1", "1/0"], ["0/1", "1/1", "1/0"], ["0/1", "1/2", "1/1", "2/1", "1/0"]]


def test_grainline_extract_validate_restrict(capsys, tmp_path):
    paths = tmp_path / "paths.json"
    paths.write_text(json.dumps([list(P) for P in blue_hamilton_paths(4)]))
    code, out, _ = run(capsys, "grainline", "extract", "--paths", str(paths), "--target", "3")
    assert code == 0
    p = parse_prefix(out)
    assert p == gl.extract(blue_hamilton_paths(4), 3)

    prefix = tmp_path / "prefix.json"
    prefix.write_text(out)
    code, out, _ = run(capsys, "grainline", "validate", "--prefix", str(prefix))
    assert code == 0 and json.loads(out)["ok"] is True

    lo, hi = p.order[1], p.order[-2]
    code, out, _ = run(capsys, "grainline", "restrict", "--prefix", str(prefix), "--from", str(lo), "--to", str(hi))
    assert code == 0 and parse_prefix(out) == gl.restrict(p, lo, hi)


def test_grainline_validate_failure_exits_one(capsys, tmp_path):
    p = gl.from_compatible_paths(blue_hamilton_paths(3))
    broken = gl.GrainLinePrefix(p.x, p.y, p.order, p.paths + (p.paths[0],))
    target = tmp_path / "bad.json"
    target.write_text(emit_prefix(broken))
    code, out, _ = run(capsys, "grainline", "validate", "--prefix", str(target))
    assert code == 1
    assert "edge-disjointness" in [k for k, v in json.loads(out)["verdicts"].items() if not v]


def test_split_passes_audit(capsys, tmp_path):
    G = build_farey(4)
    u, v = root_ids(G)
    target = tmp_path / "g.json"
    target.write_text(emit_json(G))
    code, out, _ = run(capsys, "split", "--graph", str(target), "--u", str(u), "--v", str(v), "--k", "4")
    assert code == 0
    doc = json.loads(out)
    assert all(doc["audit"].values()) and len(doc["X"]) == 1
    code, out, _ = run(
        capsys, "split", "--graph", str(target), "--u", str(u), "--v", str(v), "--k", "3", "--supply", "flow"
    )
    assert code == 0 and all(json.loads(out)["audit"].values())


def test_foresight(capsys):
    code, out, _ = run(capsys, "foresight", "--depth", "2", "--host-depth", "6", "--k", "6")
    assert code == 0
    doc = json.loads(out)
    assert [s["level"] for s in doc["stages"]] == [0, 1, 2]
    assert sorted(v["level"] for v in doc["new_vertices"].values()) == [1, 2, 2]


def test_foresight_subdivided(capsys):
    code, out, _ = run(capsys, "foresight", "--depth", "1", "--host-depth", "5", "--k", "5", "--subdivide")
    assert code == 0 and len(json.loads(out)["new_vertices"]) == 1


def test_supply_exhaustion_exits_three(capsys):
    code, _, err = run(capsys, "foresight", "--depth", "3", "--host-depth", "6", "--k", "3")
    assert code == 3 and err.startswith("error:")


def test_bad_input_exits_two(capsys, tmp_path):
    code, _, err = run(capsys, "grainline", "validate", "--prefix", str(tmp_path / "missing.json"))
    assert code == 2 and "cannot read" in err
    junk = tmp_path / "junk.json"
    junk.write_text("{not json")
    code, _, err = run(capsys, "split", "--graph", str(junk), "--u", "0", "--v", "1", "--k", "2")
    assert code == 2 and "line 1" in err


def test_argparse_rejects_unknown_kind(capsys):
    with pytest.raises(SystemExit) as info:
        main(["gen", "--kind", "nope", "--depth", "1"])
    assert info.value.code == 2


@pytest.mark.parametrize("suite", ["counts", "equivalence", "minor"])
def test_check_suites(capsys, suite):
    code, out, _ = run(capsys, "check", "--suite", suite)
    assert code == 0
    lines = out.splitlines()
    assert lines and all(line.startswith("PASS") for line in lines)
