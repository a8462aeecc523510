import csv
import io
import json
import subprocess
import sys

import pytest

from zetaone.cli import RunConfig, dispatch, main, parse_config
from zetaone.closed_forms import EvalResult, zeta_plus_one_even
from zetaone.residue_verifier import ContourReport
from zetaone.series_engine import IdentityReport


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_eval_text(capsys):
    code, out, _ = run(["eval", "--fn", "zp1", "--s", "4", "--method", "closed"], capsys)
    assert code == 0
    assert "method: closed_form" in out
    assert "residual_imag:" in out
    assert f"value: {zeta_plus_one_even(2).value:.12g}" in out


def test_eval_json_roundtrip(capsys):
    code, out, _ = run(["eval", "--fn", "zm1", "--s", "6", "--method", "series", "--format", "json"], capsys)
    assert code == 0
    d = json.loads(out)
    assert d["schema_version"] == "1"
    assert list(d)[:4] == ["schema_version", "report", "fn", "s"]
    r = EvalResult.from_dict(d)
    assert r.method == "series"
    from zetaone.series_engine import zeta_minus_one_series

    assert r == zeta_minus_one_series(6, 1e-10)


def test_zeta_eval(capsys):
    code, out, _ = run(["eval", "--fn", "zeta", "--s", "2", "--format", "json"], capsys)
    assert json.loads(out)["value"] == 1.6449340668482264
    code, _, err = run(["eval", "--fn", "zeta", "--s", "2", "--method", "real"], capsys)
    assert code == 1 and "Traceback" not in err


def test_identity_json(capsys):
    code, out, _ = run(["identity", "--id", "euler_goldbach", "--limit", "10000000", "--format", "json"], capsys)
    assert code == 0
    r = IdentityReport.from_dict(json.loads(out))
    assert r.residual <= 5e-4
    code, out, _ = run(["identity", "--id", "zeta2mk_sum", "--m", "3", "--limit", "10", "--format", "json"], capsys)
    assert json.loads(out)["identity_id"] == "zeta2mk_sum"


def test_verify_json(capsys):
    code, out, _ = run(["verify", "--fn", "g", "--m", "2", "--N", "5", "--format", "json"], capsys)
    assert code == 0
    d = json.loads(out)
    assert d["passed"] is True
    r = ContourReport.from_dict(d)
    assert r.passed and r.N == 5


def test_json_deterministic(capsys):
    argv = ["verify", "--fn", "f", "--m", "3", "--N", "4", "--format", "json"]
    _, a, _ = run(argv, capsys)
    _, b, _ = run(argv, capsys)
    assert a == b


def test_table_csv(capsys):
    code, out, _ = run(["table", "--smin", "2", "--smax", "8", "--format", "csv"], capsys)
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [int(r["s"]) for r in rows] == [2, 4, 6, 8]
    assert all(float(r["zp1_diff"]) <= 1e-9 and float(r["zm1_diff"]) <= 1e-9 for r in rows)


def test_bernoulli_text_and_csv(capsys):
    _, out, _ = run(["bernoulli", "--n", "12"], capsys)
    assert out.strip() == "B_12 = -691/2730"
    _, out, _ = run(["bernoulli", "--range", "0", "2", "--format", "csv"], capsys)
    assert out.splitlines() == ["n,numerator,denominator", "0,1,1", "1,-1,2", "2,1,6"]


def test_csv_rejected_elsewhere(capsys):
    code, _, err = run(["verify", "--fn", "f", "--m", "1", "--N", "2", "--format", "csv"], capsys)
    assert code == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["bogus"],
        [],
        ["eval", "--fn", "zp1", "--s", "3"],
        ["eval", "--fn", "zp1", "--s", "102"],
        ["verify", "--fn", "f", "--m", "9", "--N", "2"],
        ["identity", "--id", "shallit_zikan", "--limit", "1"],
        ["bernoulli", "--n", "-2"],
        ["table", "--smin", "3"],
    ],
)
def test_exit_code_1(argv, capsys):
    code, _, err = run(argv, capsys)
    assert code == 1
    assert "Traceback" not in err


def test_exit_code_2(monkeypatch, capsys):
    monkeypatch.setenv("ZETAONE_TERM_CAP", "50")
    code, _, err = run(["eval", "--fn", "zp1", "--s", "2", "--method", "series"], capsys)
    assert code == 2
    assert "numeric error" in err
    code, _, _ = run(["bernoulli", "--n", "70"], capsys)
    assert code == 2


def test_out_file(tmp_path, capsys):
    target = tmp_path / "r.json"
    code, out, _ = run(["eval", "--fn", "zp1", "--s", "2", "--format", "json", "--out", str(target)], capsys)
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["fn"] == "zp1"


def test_config_dispatch():
    cfg = parse_config(["verify", "--fn", "f", "--m", "1", "--N", "3"])
    assert cfg == RunConfig("verify", {"fn": "f", "m": 1, "N": 3}, "text", None)
    code, text = dispatch(cfg)
    assert code == 0 and "passed: True" in text


def test_selftest_json(capsys):
    code, out, _ = run(["selftest", "--format", "json"], capsys)
    d = json.loads(out)
    assert code == 0
    assert d["passed"] is True
    assert [c["criterion"] for c in d["checks"]] == list(range(1, 11))


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "zetaone.cli", "eval", "--fn", "zm1", "--s", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "value: 0.75" in proc.stdout
