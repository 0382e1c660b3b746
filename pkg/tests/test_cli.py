import csv
import json
import subprocess
import sys

import pytest

from monogenic12.cli import main
from monogenic12.scan import CSV_COLUMNS, analyze, oracle_check, row_of, scan, verify


def run(*args):
    return subprocess.run([sys.executable, "-m", "monogenic12", *args], capture_output=True, text=True)


def test_classify_text(capsys):
    assert main(["classify", "--a", "-1", "--b", "1", "--prime-bound", "500"]) == 0
    out = capsys.readouterr().out
    assert "Gal(f) = 12T2" in out and "monogenic: yes" in out
    assert "G6 = 6T1" in out and "agrees" in out


def test_classify_negative_and_reducible(capsys):
    assert main(["classify", "--a", "11", "--b", "33", "--prime-bound", "0"]) == 0
    out = capsys.readouterr().out
    assert "q=3" in out and "condition 3" in out
    assert main(["classify", "--a", "1", "--b", "1"]) == 0
    assert "irreducible: no" in capsys.readouterr().out


def test_classify_json(capsys):
    assert main(["classify", "--a", "2", "--b", "2", "--json", "--prime-bound", "300"]) == 0
    r = json.loads(capsys.readouterr().out)
    assert r["Gal_f"] == "12T28" and r["monogenic"] and r["prediction"]["agrees"]
    assert r["statements"]["R"] is True


def test_usage_errors():
    assert run("classify", "--a", "0", "--b", "3").returncode == 2
    assert run("classify", "--a", "x", "--b", "3").returncode == 2
    assert run("verify", "--box", "0").returncode == 2
    assert run("oracle-check", "--box", "-1").returncode == 2
    assert run("bogus").returncode == 2


def test_scan_rows_and_summary(tmp_path):
    rows = scan(range(-2, 3), range(-2, 3))
    assert len(rows) == 16
    by = {(r.a, r.b): r for r in rows}
    assert by[(-1, 1)].monogenic and str(by[(-1, 1)].Gal_f) == "12T2"
    assert by[(2, 2)].monogenic and str(by[(2, 2)].Gal_f) == "12T28"
    assert not by[(1, 1)].irreducible and by[(1, 1)].monogenic is None
    assert [(r.a, r.b) for r in rows] == sorted(by)


def test_row_invariants():
    for a, b in [(1, 1), (11, 33), (-5, 5), (9, 1)]:
        r = row_of(analyze(a, b))
        assert (r.monogenic is not None) == r.irreducible
        assert (r.obstruction_prime is not None) == (r.monogenic is False)


def test_scan_cli_csv_deterministic(tmp_path):
    out1, out2 = tmp_path / "a.csv", tmp_path / "b.csv"
    args = ["--amin", "-6", "--amax", "6", "--bmin", "-6", "--bmax", "6"]
    assert main(["scan", *args, "--out", str(out1)]) == 0
    assert run("scan", *args, "--out", str(out2), "--threads", "2").returncode == 0
    assert out1.read_bytes() == out2.read_bytes()
    rows = list(csv.reader(out1.open()))
    assert tuple(rows[0]) == CSV_COLUMNS
    assert len(rows) == 1 + 12 * 12


def test_scan_cli_json_single_cell(tmp_path):
    out = tmp_path / "r.json"
    assert main(["scan", "--amin", "4", "--amax", "4", "--bmin", "-2", "--bmax", "-2",
                 "--out", str(out), "--format", "json"]) == 0
    (row,) = json.loads(out.read_text())
    assert row["Gal_f"] == "12T38" and row["monogenic"] is True and row["prediction_agrees"]
    assert list(row) == list(CSV_COLUMNS)


def test_scan_zero_rows(tmp_path):
    out = tmp_path / "z.csv"
    assert main(["scan", "--amin", "0", "--amax", "0", "--bmin", "-3", "--bmax", "3", "--out", str(out)]) == 0
    assert out.read_text() == ",".join(CSV_COLUMNS) + "\n"


def test_scan_unwritable_path(tmp_path):
    bad = tmp_path / "missing" / "out.csv"
    r = run("scan", "--amin", "1", "--amax", "1", "--bmin", "1", "--bmax", "1", "--out", str(bad))
    assert r.returncode == 2


@pytest.mark.parametrize("box", [1, 5, 12])
def test_verify_small_boxes(box):
    assert all(c.passed for c in verify(box))


def test_verify_cli_exit_code():
    r = run("verify", "--box", "5")
    assert r.returncode == 0 and r.stdout.count("PASS") == 4


def test_oracle_check_cli():
    r = run("oracle-check", "--a", "9", "--b", "1")
    assert r.returncode == 0
    line = [x for x in r.stdout.splitlines() if x.startswith("x^12 + 9*x^6 + 1  q=3")][0]
    assert "divides" in line and "Dedekind: divides" in line
    r = run("oracle-check", "--a", "2", "--b", "2")
    line = [x for x in r.stdout.splitlines() if x.startswith("x^12 + 2*x^6 + 2  q=2")][0]
    assert "condition 1: coprime" in line and "Dedekind: coprime" in line
    assert run("oracle-check", "--box", "4").returncode == 0


def test_oracle_check_box():
    r = range(-10, 11)
    total, bad = oracle_check([(a, b) for a in r for b in r if a * b])
    assert total > 3000 and bad == []
