import json
import warnings

import pytest

from digiplane.cli import main
from digiplane.pts import DuplicatePointWarning, Plane, PointFileError, format_points, load, parse, save
from digiplane.render import ascii_art, svg


@pytest.fixture
def write(tmp_path):
    def make(name, text):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)
    return make


RING_PTS = "Z2\n0 0\n1 0\n2 0\n2 1\n2 2\n1 2\n0 2\n0 1\n"


# -- file format --------------------------------------------------------------

def test_parse_examples():
    assert parse("Z2\n0 0\n1 1\n") == (Plane.Z2, {(0, 0), (1, 1)})
    assert parse("K2\n# ring\n0 0\n") == (Plane.K2, {(0, 0)})
    assert parse("# lead\n\nK2\n\n-3   4\n") == (Plane.K2, {(-3, 4)})
    with pytest.raises(PointFileError, match="missing plane header at line 1"):
        parse("0 0\n")
    with pytest.raises(PointFileError, match="non-integer token.*line 2"):
        parse("Z2\n0 x\n")
    with pytest.raises(PointFileError, match="line 3"):
        parse("Z2\n0 0\n1 2 3\n")
    with pytest.raises(PointFileError, match="missing plane header"):
        parse("# nothing\n")


def test_duplicates_warn_and_collapse():
    with pytest.warns(DuplicatePointWarning, match="lines 3"):
        plane, pts = parse("Z2\n1 1\n1 1\n")
    assert pts == {(1, 1)}


def test_round_trip(tmp_path):
    pts = {(3, -1), (0, 0), (-7, 2)}
    save(tmp_path / "a.pts", Plane.K2, pts, comment="two\nlines")
    assert load(tmp_path / "a.pts") == (Plane.K2, pts)
    assert format_points(Plane.Z2, pts).splitlines()[1] == "-7 2"
    with pytest.raises(PointFileError, match="cannot read"):
        load(tmp_path / "missing.pts")


# -- rendering ------------------------------------------------------------------

def test_ascii_layout():
    art = ascii_art(Plane.Z2, {(0, 0), (1, 1), (2, 1)})
    rows = art.splitlines()
    assert rows[0] == ". # #" and rows[1] == "# . ."
    assert ascii_art(Plane.K2, {(0, 0), (1, 0)}).splitlines()[0] == "o #"
    assert ascii_art(Plane.Z2, set()) == "(empty)\n"
    assert ascii_art(Plane.Z2, {(0, 0)}, [{(0, 0), (1, 0)}]).splitlines()[0] == "* 1"


def test_svg_nodes_and_edges():
    diamond = {(0, 0), (2, 0), (1, 1), (1, -1)}
    plain = svg(Plane.K2, diamond)
    assert plain.count("<circle") == 4 and plain.count("<line") == 0
    assert svg(Plane.K2, diamond, edges=True).count("<line") == 4
    mixed = svg(Plane.K2, {(1, 0)})
    assert 'class="node mixed"' in mixed
    assert svg(Plane.K2, diamond, edges=True) == svg(Plane.K2, set(diamond), edges=True)


# -- commands ---------------------------------------------------------------------

def test_classify(write, capsys):
    assert main(["classify", write("d.pts", "K2\n0 0\n2 0\n1 1\n1 -1\n")]) == 0
    assert "jordan-curve, 4 points" in capsys.readouterr().out
    assert main(["classify", write("c.pts", "Z2\n0 0\n1 1\n2 1\n")]) == 0
    assert "8-path, endpoints (0,0) (2,1)" in capsys.readouterr().out
    assert main(["classify", write("e.pts", "K2\n")]) == 0
    assert "empty set" in capsys.readouterr().out
    assert main(["classify", write("bad.pts", "0 0\n")]) == 2
    assert "missing plane header at line 1" in capsys.readouterr().err


def test_transform(write, tmp_path, capsys):
    assert main(["transform", "gamma", write("p.pts", "Z2\n1 2\n")]) == 0
    assert parse(capsys.readouterr().out) == (Plane.K2, {(3, 1)})
    out = tmp_path / "star.pts"
    assert main(["transform", "gamma-star", write("q.pts", "Z2\n0 0\n1 1\n"), "-o", str(out)]) == 0
    assert load(out) == (Plane.K2, {(0, 0), (1, 0), (2, 0)})
    assert main(["transform", "gamma", write("k.pts", "K2\n0 0\n")]) == 2
    assert "plane mismatch" in capsys.readouterr().err
    assert main(["transform", "gamma-inv", write("m.pts", "K2\n0 0\n1 0\n2 0\n")]) == 0
    assert parse(capsys.readouterr().out)[1] == {(0, 0), (1, 1)}
    ring = write("kring.pts", "K2\n0 0\n1 -1\n2 -2\n3 -1\n4 0\n3 1\n2 2\n1 1\n")
    assert main(["transform", "bracket", write("a.pts", "Z2\n1 1\n"), "--curve", ring]) == 0
    assert parse(capsys.readouterr().out)[1] == {(1, 0), (3, 0), (2, 1), (2, -1)}
    assert main(["transform", "bracket", write("b.pts", "Z2\n1 1\n")]) == 2


def test_components(write, capsys):
    assert main(["components", write("r.pts", RING_PTS), "--complement", "--adjacency", "8"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("2 components; inner: 1 point (1,1); outer: window-relative")
    ring = write("kring.pts", "K2\n0 0\n1 -1\n2 -2\n3 -1\n4 0\n3 1\n2 2\n1 1\n")
    assert main(["components", ring, "--complement"]) == 0
    out = capsys.readouterr().out
    assert "inner: 5 points (1,0) (2,-1) (2,0) (2,1) (3,0)" in out and "regime: pure-only" in out
    assert main(["components", write("two.pts", "Z2\n0 0\n5 5\n")]) == 0
    assert capsys.readouterr().out.startswith("2 components")
    assert main(["components", ring, "--adjacency", "4"]) == 2


def test_render(write, tmp_path, capsys):
    base = write("d.pts", "K2\n0 0\n2 0\n1 1\n1 -1\n")
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    assert main(["render", base, "--format", "svg", "--edges", "-o", str(a)]) == 0
    assert main(["render", base, "--format", "svg", "--edges", "-o", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert main(["render", base, "--overlay", write("z.pts", "Z2\n0 0\n")]) == 2
    assert "overlay plane mismatch" in capsys.readouterr().err
    assert main(["render", base]) == 0
    assert "o" in capsys.readouterr().out


def test_verify_exit_codes(capsys):
    assert main(["verify", "jordan-rosenfeld", "--window", "5x5", "--max-size", "8"]) == 0
    assert "passed" in capsys.readouterr().out
    assert main(["verify", "jordan-rosenfeld", "--window", "4x4", "--max-size", "8", "--no-hypothesis-filter",
                 "--json"]) == 1
    doc = json.loads(capsys.readouterr().out)
    assert doc["passed"] is False and doc["counterexample"]["inputs"]["J"] == [[0, 0], [0, 1], [1, 0], [1, 1]]
    assert main(["verify", "nosuch"]) == 2
    assert "registered:" in capsys.readouterr().err
    assert main(["verify", "mixed-pair", "--window", "12x12"]) == 2
    assert "exceeds cap" in capsys.readouterr().err
    assert main(["verify", "mixed-pair", "--window", "12x12", "--cap", "144"]) == 0
    assert main(["verify", "--list"]) == 0
    assert main(["verify", "--max-size", "nope"]) == 2


def test_duplicate_warning_reaches_stderr(write, capsys):
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        assert main(["classify", write("dup.pts", "Z2\n0 0\n0 0\n")]) == 0
    assert "duplicate" in capsys.readouterr().err
