import json
from fractions import Fraction

import pytest

from triperi import PaperSpaceParams, make_paper_space
from triperi.cli import main
from triperi.io import (
    FormatError,
    MetricAxiomError,
    format_fmap,
    format_fms,
    load_fms,
    materialize_paper_space,
    parse_fmap,
    parse_fms,
)
from triperi.mapping import MapError

EQUILATERAL = "fms 1\npoints 3\nx y z\nexact\n0 1 1\n1 0 1\n1 1 0\n"
MAP_A = "fmap 1\nx x\ny y\nz x\n"
MAP_B = "fmap 1\nx y\ny x\nz x\n"


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text, encoding="utf-8")
        return str(p)

    return write


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_fms_entries():
    text = "fms 1\npoints 3\na b c\nexact\n0 1/2 0.5\n1/2 0 1\n0.5 1 0\n"
    space = parse_fms(text)
    assert space.exact and space.matrix[0][1] == Fraction(1, 2) == space.matrix[0][2]
    fl = parse_fms(text.replace("exact", "float"))
    assert not fl.exact and fl.matrix[1][2] == 1.0


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("fms 2\n", 1, 1),
        ("fms 1\npoints x\n", 2, 8),
        ("fms 1\npoints 3\nx y\n", 3, 1),
        ("fms 1\npoints 2\nx y\nrational\n", 4, 1),
        ("fms 1\npoints 2\nx y\nexact\n0 1\n1 zz\n", 6, 3),
        ("fms 1\npoints 2\nx y\nexact\n0 1\n", 6, 1),
        ("fms 1\npoints 2\nx y\nexact\n0 1\n1 0\nextra\n", 7, 1),
    ],
)
def test_parse_fms_errors(text, line, column):
    with pytest.raises(FormatError) as info:
        parse_fms(text)
    assert (info.value.line, info.value.column) == (line, column)


def test_parse_fms_rejects_non_metric():
    text = EQUILATERAL.replace("0 1 1\n1 0 1", "0 3 1\n3 0 1")
    with pytest.raises(MetricAxiomError):
        parse_fms(text)
    assert parse_fms(text, verify=False).exact


def test_fmap_round_trip_and_errors():
    space = parse_fms(EQUILATERAL)
    t = parse_fmap(MAP_B, space)
    assert parse_fmap(format_fmap(t), space).table == t.table
    with pytest.raises(MapError):
        parse_fmap("fmap 1\nx y\ny x\n", space)
    with pytest.raises(FormatError):
        parse_fmap("fmap 1\nx y\nx z\ny x\nz x\n", space)
    with pytest.raises(FormatError):
        parse_fmap("fmap 1\nx w\n", space)


def test_materialize_round_trip(tmp_path):
    space, _ = make_paper_space(PaperSpaceParams(window=20))
    finite, none = materialize_paper_space(space, 20)
    assert none is None
    again = parse_fms(format_fms(finite))
    assert again.matrix == finite.matrix and again.names == finite.names
    for i, p in enumerate(space.points(20)):
        for j, q in enumerate(space.points(20)):
            assert again.matrix[i][j] == space.distance(p, q)
    _, fmap = materialize_paper_space(space, 20, remap_boundary_to_star=True)
    assert fmap.space.name(fmap(20)) == "x*" and fmap(3) == 4


def test_cli_verify(capsys, files):
    assert run(capsys, "verify", files("ok.fms", EQUILATERAL))[0] == 0
    asym = EQUILATERAL.replace("1 0 1\n1 1 0", "2 0 1\n1 1 0")
    code, out, _ = run(capsys, "verify", files("bad.fms", asym), "--format", "json")
    doc = json.loads(out)
    assert code == 1 and doc["result"]["axiom"] == "symmetry" and doc["result"]["witness"] == ["x", "y"]
    code, _, err = run(capsys, "verify", files("hdr.fms", "fsm 1\n"))
    assert code == 2 and "line 1" in err


def test_cli_classify_builtins(capsys):
    code, out, _ = run(capsys, "classify", "--paper-example", "A", "--format", "json")
    res = json.loads(out)["result"]
    assert code == 0 and res["alpha_star"] == "2/3" and res["fixed_points"] == ["x", "y"]
    code, out, _ = run(capsys, "classify", "--paper-example", "B", "--format", "json")
    assert code == 1 and json.loads(out)["result"]["condition_i_witness"] == "x"
    code, out, _ = run(capsys, "classify", "--paper-space", "--window", "64", "--format", "json")
    res = json.loads(out)["result"]
    assert code == 0 and res["lipschitz"] == "1" and not res["is_contraction"]
    assert Fraction(res["alpha_star"]) <= Fraction(7, 8)


def test_cli_classify_files(capsys, files):
    sp = files("s.fms", EQUILATERAL)
    assert run(capsys, "classify", sp, files("a.fmap", MAP_A))[0] == 0
    assert run(capsys, "classify", sp, files("b.fmap", MAP_B))[0] == 1
    assert run(capsys, "classify", sp, files("p.fmap", "fmap 1\nx y\n"))[0] == 2
    assert run(capsys, "classify", sp)[0] == 2


def test_cli_solve(capsys):
    code, out, _ = run(
        capsys, "solve", "--paper-space", "--start", "0", "--alpha", "7/8", "--tol", "1/1000000", "--format", "json"
    )
    res = json.loads(out)["result"]
    assert code == 0 and res["status"] == "converged" and res["point"] == "x40"
    assert len(res["bound_trace"]) == 40 and res["p0"] == "4"
    code, out, _ = run(capsys, "solve", "--paper-example", "A", "--start", "z", "--format", "json")
    res = json.loads(out)["result"]
    assert code == 0 and res["status"] == "reached-exact-fixed-point" and res["point"] == "x"
    assert res["iterations"] == 1
    code, out, _ = run(capsys, "solve", "--paper-example", "B", "--start", "z", "--format", "json")
    assert code == 3 and json.loads(out)["result"]["witness"] == "x"
    code, _, _ = run(capsys, "solve", "--paper-space", "--max-iter", "3", "--tol", "1/1000000")
    assert code == 1
    assert run(capsys, "solve", "--paper-space", "--alpha", "abc")[0] == 2
    assert run(capsys, "solve", "--paper-space", "--alpha", "1")[0] == 2
    assert run(capsys, "solve", "--paper-space", "--start", "*")[0] == 0


def test_cli_paper_table(capsys):
    code, out, _ = run(capsys, "paper-table", "--window", "8", "--format", "json")
    res = json.loads(out)["result"]
    assert code == 0
    assert [r["ratio"] for r in res["star_ratios"]] == ["3/4", "2/3"] * 4
    assert res["paper_alpha"] == "7/8" and res["certified"]
    assert Fraction(res["finite_max"]) <= Fraction(7, 8)
    code, out, _ = run(capsys, "paper-table", "--window", "3", "--format", "json")
    assert code == 0 and len(json.loads(out)["result"]["star_ratios"]) == 3
    assert run(capsys, "paper-table", "--window", "500")[0] == 2


def test_cli_json_and_text_agree_and_are_deterministic(capsys):
    _, j1, _ = run(capsys, "classify", "--paper-space", "--window", "20", "--format", "json")
    _, j2, _ = run(capsys, "classify", "--paper-space", "--window", "20", "--format", "json")
    _, txt, _ = run(capsys, "classify", "--paper-space", "--window", "20")
    assert j1 == j2
    res = json.loads(j1)["result"]
    assert f"alpha_star: {res['alpha_star']}\n" in txt
    assert f"lipschitz: {res['lipschitz']}\n" in txt


def test_cli_materialize(capsys, tmp_path):
    sp, mp = str(tmp_path / "w.fms"), str(tmp_path / "w.fmap")
    assert run(capsys, "materialize", "--window", "10", "--space-out", sp, "--map-out", mp)[0] == 2
    assert run(capsys, "materialize", "--window", "10", "--space-out", sp)[0] == 0
    space = load_fms(sp)
    assert space.names[-1] == "x*" and len(space) == 12
    assert run(capsys, "materialize", "--window", "10", "--space-out", sp, "--map-out", mp,
               "--remap-boundary-to-star")[0] == 0
    code, out, _ = run(capsys, "classify", sp, mp, "--format", "json")
    assert json.loads(out)["result"]["fixed_points"] == ["x*"]


def test_cli_threads_env(capsys, monkeypatch):
    monkeypatch.setenv("TRIPERI_THREADS", "nope")
    assert run(capsys, "classify", "--paper-example", "A")[0] == 2
    monkeypatch.setenv("TRIPERI_THREADS", "3")
    assert run(capsys, "classify", "--paper-example", "A")[0] == 0


def test_cli_usage_errors(capsys):
    assert run(capsys)[0] == 2
    assert run(capsys, "verify")[0] == 2
