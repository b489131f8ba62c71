import csv
import io
import json
import math

import pytest

from ucoulomb.cli import ConfigError, RunConfig, main, parse_grid, run
from ucoulomb.model import PhysParams


def invoke(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def read_csv(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_parse_grid():
    g = parse_grid("-5:5:11")
    assert (g.lo, g.hi, g.n) == (-5.0, 5.0, 11)
    assert list(g.values())[5] == 0.0
    assert parse_grid("1", allow_single=True).n == 1
    for bad in ("1", "1:2", "2:1:5", "0:1:1", "a:b:c", "0:1:2.5", "0:inf:4"):
        with pytest.raises(ConfigError):
            parse_grid(bad)


def test_scan_table(capsys):
    code, out, _ = invoke(capsys, "scan", "--Z", "1", "--L", "3.75", "--eps", "0.005",
                          "--k", "0.1:10:512", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 513
    assert lines[0] == "k,abs_t_lr,arg_t_lr,abs_r_lr,abs_r_rl,near_pole"
    rows = read_csv(out)
    assert float(rows[0]["k"]) == 0.1 and float(rows[-1]["k"]) == 10.0
    assert rows[0]["near_pole"] in ("true", "false")


def test_potential_symmetry(capsys):
    code, out, _ = invoke(capsys, "potential", "--Z", "1", "--L", "3.01", "--eps", "0.005",
                          "--s", "-5:5:1001")
    assert code == 0
    rows = read_csv(out)
    assert len(rows) == 1001
    for a, b in zip(rows, reversed(rows)):
        re_a, re_b = float(a["re_v"]), float(b["re_v"])
        im_a, im_b = float(a["im_v"]), float(b["im_v"])
        assert abs(re_a - re_b) <= 1e-13 * max(1.0, abs(re_a))
        assert abs(im_a + im_b) <= 1e-13 * max(1.0, abs(im_a))


def test_seventeen_digits(capsys):
    _, out, _ = invoke(capsys, "contour", "--eps", "0.1", "--s", "0.3:0.3001:2")
    row = out.splitlines()[1].split(",")
    assert float(row[0]) == 0.3
    assert any(len(v.replace("-", "").replace(".", "").split("e")[0]) >= 15 for v in row)


def test_verify_passes(capsys):
    code, out, _ = invoke(capsys, "verify", "--Z", "1", "--L", "3.75", "--eps", "0.005",
                          "--k", "1", "--tol", "1e-4")
    assert code == 0
    rows = read_csv(out)
    assert len(rows) == 1 and rows[0]["ok"] == "true"
    assert "t_ratio_re" in rows[0] and "t_ratio_im" in rows[0]


def test_verify_fails_with_tiny_tolerance(capsys):
    code, out, _ = invoke(capsys, "verify", "--k", "1", "--tol", "1e-15")
    assert code == 1
    assert read_csv(out)[0]["ok"] == "false"


@pytest.mark.parametrize(
    "argv",
    [
        ["scan", "--k", "10:0.1:5"],
        ["scan", "--k", "0:1:5"],
        ["potential", "--L", "3.5"],
        ["potential", "--eps", "-1"],
        ["contour", "--eps", "0"],
        ["verify", "--tol", "0"],
        ["bound-states", "--n-max", "-1"],
        ["bound-states", "--Z", "-1", "--family", "q_plus"],
    ],
)
def test_invalid_input_exit_2(capsys, argv):
    code, out, err = invoke(capsys, *argv)
    assert code == 2
    assert out == "" and "error" in err


def test_bad_thread_count(capsys, monkeypatch):
    monkeypatch.setenv("UCOULOMB_THREADS", "zero")
    code, _, err = invoke(capsys, "verify", "--k", "1")
    assert code == 2 and "UCOULOMB_THREADS" in err


def test_deterministic(capsys, tmp_path):
    paths = [tmp_path / "a.csv", tmp_path / "b.csv"]
    for p in paths:
        assert main(["scan", "--k", "0.1:3:64", "-o", str(p)]) == 0
    assert paths[0].read_bytes() == paths[1].read_bytes()
    assert capsys.readouterr().out == ""


def test_bound_states_json(capsys):
    code, out, _ = invoke(capsys, "bound-states", "--Z", "1", "--L", "0.25", "--n-max", "2",
                          "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["meta"]["L"] == 0.25 and doc["meta"]["family"] == "both"
    fams = [(r["family"], r["n"]) for r in doc["rows"]]
    assert fams == [("q_plus", 0), ("q_plus", 1), ("q_plus", 2), ("q_minus", 1), ("q_minus", 2)]
    assert doc["rows"][0]["im_k"] == pytest.approx(0.4) and doc["rows"][0]["energy"] == pytest.approx(-0.16)


def test_json_nan_becomes_null(capsys):
    # k = 0.4i is not on a real grid, so force a NaN row through run() directly
    cfg = RunConfig("scan", PhysParams(1.0, 3.75, 0.005), parse_grid("0.1:1:3"), "json", None, 1e-4)
    from ucoulomb import cli

    orig = cli._rows_scan
    try:
        cli._DISPATCH["scan"] = lambda c: (["k", "abs_t_lr"], [[0.1, math.nan]])
        assert run(cfg) == 0
    finally:
        cli._DISPATCH["scan"] = orig
    doc = json.loads(capsys.readouterr().out)
    assert doc["rows"][0]["abs_t_lr"] is None


def test_json_complex_pairs(capsys):
    code, out, _ = invoke(capsys, "verify", "--k", "1", "--format", "json")
    assert code == 0
    row = json.loads(out)["rows"][0]
    assert isinstance(row["t_ratio"], list) and len(row["t_ratio"]) == 2
