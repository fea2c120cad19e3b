import json
from pathlib import Path

import pytest

from hopfexp.catalog import D4_BICHAR, preset, preset_names
from hopfexp.cli import main, scan_rows
from hopfexp.exponent import ExponentResult, replay
from hopfexp.io import load

GOLDEN = Path(__file__).resolve().parents[1] / "docs" / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_catalog_list(capsys):
    code, out, _ = run(capsys, "catalog", "list")
    assert code == 0
    for name in preset_names():
        assert name in out


def test_exp_all_on_s3(capsys):
    code, out, _ = run(capsys, "exp", "s3", "--method", "all")
    assert code == 0
    assert out.splitlines()[-1] == "exp = 6, methods agree: direct,u,rproduct,r21r"


def test_exp_sweedler_headline(capsys):
    code, out, _ = run(capsys, "exp", "sweedler_q")
    assert code == 0
    assert out.splitlines()[-1] == (
        "exp = INFINITE (certificates: skew-primitive x with g; u minimal polynomial not squarefree)"
    )


def test_exp_json_roundtrips(capsys):
    code, out, _ = run(capsys, "exp", "sweedler_q", "--method", "all", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["methods_agree"] is True
    H = preset("sweedler_q").algebra
    for d in doc["results"].values():
        r = ExponentResult.from_dict(d)
        assert r.to_dict() == d
    decided = ExponentResult.from_dict(doc["results"]["decide"])
    assert decided.is_infinite and all(replay(H, c) for c in decided.certificates)


def test_exp_cap(capsys):
    code, out, _ = run(capsys, "exp", "sweedler_q", "--method", "direct", "--cap", "100")
    assert code == 0
    assert out.splitlines()[-1] == "exp = UNKNOWN (no hit up to cap 100)"


def test_output_is_deterministic(capsys):
    first = run(capsys, "exp", "taft3", "--method", "all", "--json")
    second = run(capsys, "exp", "taft3", "--method", "all", "--json")
    assert first == second


def test_verify(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "sweedler_q", "--double")
    assert code == 0 and out.splitlines()[-1] == "all checks passed"
    bad = tmp_path / "bad.json"
    doc = json.loads(GOLDEN.joinpath("s3.json").read_text())
    doc["antipode"][0][2] = "2"
    bad.write_text(json.dumps(doc))
    code, _, err = run(capsys, "verify", str(bad))
    assert code == 1 and "antipode" in err


def test_double_then_exp(capsys, tmp_path):
    out_path = tmp_path / "d.json"
    code, _, err = run(capsys, "double", "z3", "-o", str(out_path))
    assert code == 0 and "quasitriangular: PASS" in err
    D, doc = load(out_path)
    assert D.dim == 9 and doc["metadata"]["double_of"] == "z3"
    code, out, _ = run(capsys, "exp", str(out_path))
    assert code == 0 and out.splitlines()[-1] == "exp = 3"


@pytest.mark.parametrize("command", ["dual", "op", "cop"])
def test_transforms(capsys, tmp_path, command):
    out_path = tmp_path / f"{command}.json"
    code, _, _ = run(capsys, command, "sweedler_f3", "-o", str(out_path))
    assert code == 0
    code, out, _ = run(capsys, "exp", str(out_path))
    assert code == 0 and out.splitlines()[-1] == "exp = 6"


def test_twist_command(capsys, tmp_path):
    out_path = tmp_path / "t.json"
    code, _, err = run(capsys, "twist", "d4", "--subgroup", "r^2,s", "--bichar", D4_BICHAR, "-o", str(out_path))
    assert code == 0 and "coproduct changed: yes" in err
    code, out, _ = run(capsys, "exp", str(out_path), "--method", "all")
    assert code == 0 and out.splitlines()[-1] == "exp = 4, methods agree: direct,u,rproduct,r21r"


def test_twist_errors(capsys, tmp_path):
    out_path = str(tmp_path / "t.json")
    code, _, err = run(capsys, "twist", "d4", "--subgroup", "r,s", "--bichar", D4_BICHAR, "-o", out_path)
    assert code == 1 and "commute" in err
    code, _, _ = run(capsys, "twist", "d4", "--subgroup", "nope", "--bichar", "1", "-o", out_path)
    assert code == 2


def test_spectrum(capsys):
    code, out, _ = run(capsys, "spectrum", "sweedler_q")
    assert code == 0
    assert "u semisimple (squarefree minimal polynomial): NO" in out
    code, out, _ = run(capsys, "spectrum", "s3", "--json")
    assert json.loads(out)["eigenvalue_order_lcm"] == 6


def test_scan_groups(capsys):
    code, out, _ = run(capsys, "scan", "--family", "groups", "--json")
    assert code == 0
    rows = json.loads(out)
    assert rows and all(r["exp_divides_dim"] is True for r in rows)
    assert [r["name"] for r in rows] == sorted(r["name"] for r in rows)


def test_scan_rows_max_dim():
    rows = scan_rows("all", max_dim=4)
    assert rows and all(r["dim"] <= 4 for r in rows)
    assert all(not r["violations"] for r in rows)


@pytest.mark.parametrize("argv", [
    ["exp", "no_such_preset"],
    ["exp", "s3", "--method", "guess"],
    ["exp", "s3", "--cap", "0"],
    ["frobnicate"],
])
def test_usage_errors_exit_2(capsys, argv):
    try:
        code = main(argv)
    except SystemExit as exc:
        code = exc.code
    capsys.readouterr()
    assert code == 2


def test_bad_document_exits_1(capsys, tmp_path):
    p = tmp_path / "junk.json"
    p.write_text("{")
    code, _, err = run(capsys, "exp", str(p))
    assert code == 1 and "not valid JSON" in err
