import json
import subprocess
import sys

import pytest


def test_table_examples(run_cli):
    assert run_cli("table", "catalan-row", "--n", 6) == (0, "132 165 110 44 10 1\n")
    assert run_cli("table", "s-sum", "--r", 3, "--comp", "3,3,2,3,3") == (0, "10233/2\n")
    code, out = run_cli("table", "coprime-list", "--limit", 500)
    assert code == 0 and len(out.split()) == 21
    code, out = run_cli("table", "theta", "--m", 1, "--n", 3, "--r", 0, "--format", "json")
    # 1*2*15*15 + 4*4*6*6 + 9*6*1*1
    assert json.loads(out)["rows"][0]["values"] == ["1080"]


def test_verify_examples(run_cli):
    assert run_cli("verify", "theta", "--n-max", 20, "--m-max", 4, "--r-max", 6)[0] == 0
    assert run_cli("verify", "shapiro", "--n-max", 300)[0] == 0
    code, out = run_cli("verify", "corollary:nn+1", "--n-max", 6)
    report = json.loads(out)
    assert code == 0 and report["status"] == "pass" and report["checked"] > 0
    assert set(report) >= {"command", "params", "checked", "failures", "status", "elapsed_ms"}


def test_verify_csv(run_cli):
    code, out = run_cli("verify", "shapiro", "--n-max", 5, "--format", "csv")
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 6 and lines[1].endswith(",pass")


def test_scan_exit_codes(run_cli):
    code, out = run_cli("scan", "7.2", "--n", "7,12,13,16")
    assert code == 0 and json.loads(out)["status"] == "confirmed_in_range"
    code, out = run_cli("scan", "7.6", "--n-max", 20, "--r-max", 3, "--s-max", 3)
    report = json.loads(out)
    assert code == 3 and report["status"] == "falsified"
    assert report["failures"][0] == {"id": "7.6", "tuple": [3, 1, 2], "lhs": "0", "rhs": "220"}


def test_qfactor(run_cli):
    code, out = run_cli("qfactor", "--n", 6, "--k", 4, "--format", "text")
    assert code == 0 and out.startswith("B(6,4)(q) = Phi_4^2 * Phi_11 * Phi_12")


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "nope"],
        ["verify", "shapiro", "--n-max", "-1"],
        ["verify", "shapiro", "--workers", "0"],
        ["scan", "7.99"],
        ["scan", "7.1", "--n-max", "0"],
        ["table", "nope"],
        ["table", "catalan-row"],
        ["table", "s-sum", "--r", "1", "--comp", "1,0"],
        ["qfactor", "--n", "3", "--k", "5"],
        ["bogus"],
        [],
    ],
)
def test_usage_errors_exit_2(run_cli, argv):
    assert run_cli(*argv)[0] == 2


def test_out_file_and_determinism(tmp_path, run_cli):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run_cli("scan", "7.1", "--workers", 1, "--out", a)
    run_cli("scan", "7.1", "--workers", 4, "--out", b)
    da, db = json.loads(a.read_text()), json.loads(b.read_text())
    da.pop("elapsed_ms"), db.pop("elapsed_ms")
    assert da == db and "workers" not in da["params"]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "catalan_sums", "table", "catalan-row", "--n", "4"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout == "14 14 6 1\n"
