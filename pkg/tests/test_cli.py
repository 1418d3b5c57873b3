"""CLI behavior: formats, schema validity, determinism, exit codes."""

import json
from importlib import resources
from pathlib import Path

import jsonschema

from fixtures import PARTITIONS_OF_3
from trident.cli import run

with resources.files("trident.schemas").joinpath("cli-output.schema.json").open() as fh:
    SCHEMA = json.load(fh)


def run_capture(capsys, argv):
    code = run(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, argv):
    code, out, _ = run_capture(capsys, argv)
    assert code == 0
    payload = json.loads(out)
    jsonschema.validate(payload, SCHEMA)
    return payload


def test_s_poly_json_contains_example_monomial(capsys):
    payload = run_json(capsys, ["s-poly", "--n", "12", "--format", "json"])
    assert payload["command"] == "s-poly"
    assert [2, 1, 1, 1, "2"] in payload["terms"]
    assert [1, 1, 0, 1, "3"] in payload["terms"]


def test_poly_rows_json(capsys):
    payload = run_json(capsys, ["q-poly", "--upto", "3", "--format", "json"])
    assert len(payload["rows"]) == 4
    assert payload["rows"][0]["terms"] == []          # the zero polynomial
    assert payload["rows"][1]["terms"] == [[0, 0, 0, 0, "1"]]


def test_scalar_outputs(capsys):
    payload = run_json(capsys, ["scalar", "--upto", "5", "--format", "json"])
    assert payload["rows"][5] == {"n": 5, "q": "496", "r": "528"}
    code, out, _ = run_capture(capsys, ["scalar", "--upto", "2", "--format", "csv"])
    assert code == 0
    assert out.splitlines() == ["n,q,r", "0,0,1", "1,1,3", "2,6,10"]


def test_enumerate_list_golden(capsys):
    code, out, _ = run_capture(capsys, ["enumerate", "--n", "3", "--list"])
    assert code == 0
    assert out.splitlines() == ["n=3 count=6"] + PARTITIONS_OF_3


def test_enumerate_json_schema(capsys):
    payload = run_json(capsys, ["enumerate", "--n", "3", "--list", "--format", "json"])
    assert payload["count"] == "6"
    assert payload["partitions"] == PARTITIONS_OF_3


def test_spec_json_and_pretty(capsys):
    payload = run_json(capsys, ["spec", "--spec", "z1", "--family", "q",
                                "--n", "3", "--format", "json"])
    assert payload["coeffs"] == ["13", "12", "3"]
    code, out, _ = run_capture(capsys, ["spec", "--spec", "z3", "--family", "q",
                                        "--upto", "2"])
    assert code == 0
    assert out.splitlines() == ["0\t0", "1\t1", "2\t4z+2"]


def test_profile_csv(capsys):
    code, out, _ = run_capture(capsys, ["profile", "--spec", "z1", "--family", "q",
                                        "--n", "2", "--format", "csv"])
    assert code == 0
    assert out.splitlines() == ["k,count", "0,4", "1,2"]


def test_profile_json_schema(capsys):
    payload = run_json(capsys, ["profile", "--spec", "z3", "--family", "q",
                                "--n", "2", "--format", "json"])
    assert payload["profile"] == [{"k": 0, "count": "2"}, {"k": 1, "count": "4"}]


def test_zeros_csv_with_locus_header(capsys):
    code, out, _ = run_capture(capsys, ["zeros", "--spec", "z3", "--n", "3", "--locus"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("# locus: ")
    json.loads(lines[0][len("# locus: "):])
    assert lines[1] == "family,n,re,im,residual,locus_distance"
    assert len(lines) == 4


def test_zeros_json_schema(capsys):
    payload = run_json(capsys, ["zeros", "--spec", "z2", "--n", "4",
                                "--locus", "--format", "json"])
    assert payload["origin_multiplicity"] == 3
    assert len(payload["points"]) == 6
    assert payload["locus"]["type"] == "circle"


def test_zeros_preset_route(capsys):
    payload = run_json(capsys, ["zeros", "--spec", "p5", "--n", "6", "--format", "json"])
    assert payload["points"]
    assert all(p["locus_distance"] is not None for p in payload["points"])


def test_zeros_determinism(capsys):
    argv = ["zeros", "--spec", "p1", "--n", "8", "--seed", "7"]
    _, first, _ = run_capture(capsys, argv)
    _, second, _ = run_capture(capsys, argv)
    assert first == second


def test_tables_golden_shape(capsys):
    code, out, _ = run_capture(capsys, ["tables"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("# table 1")
    assert "3\twxy+wz+xz+w+x+y" in lines
    assert "2\t2z+4\tz^2+4z+5" in lines
    assert "7\t729z^18+1134z^16+1431z^14+1540z^12+1431z^10+1134z^8+729z^6" in lines
    assert "7\t1093z^6+1817z^5+2071z^4+1715z^3+1000z^2+368z+64" in lines
    assert len(lines) == 4 + 7 + 6 + 7 + 7


def test_tables_golden_file(capsys):
    # formatting regression lock; the coefficient-level comparison against
    # the reference data lives in the acceptance suite
    golden = (Path(__file__).parent / "data" / "tables_golden.txt").read_text()
    code, out, _ = run_capture(capsys, ["tables"])
    assert code == 0
    assert out == golden


def test_verify_quick_exits_zero(capsys):
    code, out, _ = run_capture(capsys, ["verify", "--all", "--quick"])
    assert code == 0
    assert "FAIL" not in out


def test_verify_json_schema(capsys):
    payload = run_json(capsys, ["verify", "--quick", "--only", "prop61,gf",
                                "--format", "json"])
    assert payload["ok"] is True
    assert {c["id"] for c in payload["checks"]} == {"prop61", "gf"}


def test_verify_unknown_check_is_usage_error(capsys):
    code, _, err = run_capture(capsys, ["verify", "--only", "bogus"])
    assert code == 2
    assert "unknown check" in err


def test_usage_errors(capsys):
    code, _, _ = run_capture(capsys, ["s-poly"])
    assert code == 2                       # neither --n nor --upto
    code, _, _ = run_capture(capsys, ["definitely-not-a-command"])
    assert code == 2
    code, _, _ = run_capture(capsys, ["spec", "--spec", "zz", "--n", "1"])
    assert code == 2


def test_cap_exceeded_exit_code(capsys):
    code, _, err = run_capture(capsys, ["enumerate", "--n", "50", "--list",
                                        "--cap", "5"])
    assert code == 3
    assert "cap" in err


def test_env_cap_override(capsys, monkeypatch):
    monkeypatch.setenv("TRIDENT_CAP", "5")
    code, _, _ = run_capture(capsys, ["enumerate", "--n", "3", "--list"])
    assert code == 3
    # the explicit flag takes precedence over the environment
    code, out, _ = run_capture(capsys, ["enumerate", "--n", "3", "--list",
                                        "--cap", "100"])
    assert code == 0
    monkeypatch.setenv("TRIDENT_CAP", "not-a-number")
    code, _, err = run_capture(capsys, ["enumerate", "--n", "3"])
    assert code == 2


def test_out_file(tmp_path, capsys):
    target = tmp_path / "zeros.csv"
    code, out, _ = run_capture(capsys, ["zeros", "--spec", "z1", "--n", "4",
                                        "--out", str(target)])
    assert code == 0
    assert out == ""
    lines = target.read_text().splitlines()
    assert lines[0] == "family,n,re,im,residual,locus_distance"
    assert len(lines) == 4


def test_version_flag(capsys):
    code, out, _ = run_capture(capsys, ["--version"])
    assert code == 0
    assert out.startswith("trident ")
