"""Command-line interface tests."""

import json
import os
import re
import subprocess
import sys
from pathlib import Path

import pytest

from chesscount import cli, count_table

SRC = Path(__file__).resolve().parent.parent / "src"


def run_cli(*args):
    env = dict(os.environ)
    env["PYTHONPATH"] = str(SRC) + os.pathsep + env.get("PYTHONPATH", "")
    return subprocess.run(
        [sys.executable, "-m", "chesscount", *args],
        capture_output=True,
        env=env,
        text=False,
    )


# --- count ---


def test_count_bishop(capsys):
    assert cli.main(["count", "bishop", "8", "2"]) == 0
    assert capsys.readouterr().out == "1736\n"


def test_count_anassa_below(capsys):
    assert cli.main(["count", "anassa", "4", "2", "--below", "2"]) == 0
    assert capsys.readouterr().out == "7\n"


def test_count_negative_board_size(capsys):
    assert cli.main(["count", "anassa", "-1", "3"]) == 0
    assert capsys.readouterr().out == "6\n"


def test_count_json(capsys):
    assert cli.main(["count", "anassa", "4", "2", "--below", "2", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload == {"piece": "anassa", "m": 4, "k": 2, "below": 2, "count": 7}


# --- table ---


def test_table_csv(capsys):
    assert cli.main(["table", "bishop", "2"]) == 0
    assert capsys.readouterr().out == "1\n1,1\n1,4,4\n"
    assert cli.main(["table", "anassa", "2"]) == 0
    assert capsys.readouterr().out == "1\n1,1\n1,4,3\n"


def test_table_tsv(capsys):
    assert cli.main(["table", "anassa", "2", "--format", "tsv"]) == 0
    assert capsys.readouterr().out == "1\n1\t1\n1\t4\t3\n"


def test_table_rect(capsys):
    assert cli.main(["table", "anassa", "2", "--rect"]) == 0
    assert capsys.readouterr().out == "1,0,0\n1,1,0\n1,4,3\n"


def test_table_json(capsys):
    assert cli.main(["table", "bishop", "3", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["piece"] == "bishop"
    assert payload["rows"][2] == [1, 4, 4]
    assert payload["rows"][3] == [1, 9, 26, 26, 8]


def test_table_bfile_round_trip(capsys):
    assert cli.main(["table", "anassa", "4", "--format", "bfile", "--offset", "5"]) == 0
    text = capsys.readouterr().out
    start, values = cli.parse_bfile(text)
    assert start == 5
    assert values == count_table("anassa", 4).flatten()


def test_parse_bfile_rejects_index_gaps():
    with pytest.raises(ValueError):
        cli.parse_bfile("0 1\n2 5\n")


# --- coeffs ---


def test_coeffs_csv_collapses_equal_parities(capsys):
    assert cli.main(["coeffs", "bishop", "2"]) == 0
    assert capsys.readouterr().out == "0,-1/3,1/2,-2/3,1/2\n"
    assert cli.main(["coeffs", "anassa", "0"]) == 0
    assert capsys.readouterr().out == "1\n"


def test_coeffs_json_schema(capsys):
    assert cli.main(["coeffs", "bishop", "3", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert set(payload) == {"piece", "k", "period", "coeffs"}
    assert payload["piece"] == "bishop" and payload["k"] == 3
    assert payload["period"] == 2 and len(payload["coeffs"]) == 2
    for vec in payload["coeffs"]:
        assert len(vec) == 7
        for entry in vec:
            assert re.fullmatch(r"-?\d+/\d+", entry)


def test_coeffs_anassa_period_one(capsys):
    assert cli.main(["coeffs", "anassa", "3", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["period"] == 1 and len(payload["coeffs"]) == 1


# --- output redirection ---


def test_out_writes_file(tmp_path, capsys):
    target = tmp_path / "rows.csv"
    assert cli.main(["table", "bishop", "2", "--out", str(target)]) == 0
    assert capsys.readouterr().out == ""
    assert target.read_text(encoding="utf-8") == "1\n1,1\n1,4,4\n"


def test_out_failure_reports_path_and_cause(tmp_path, capsys):
    target = tmp_path / "missing" / "rows.csv"
    assert cli.main(["table", "bishop", "2", "--out", str(target)]) == 1
    err = capsys.readouterr().err
    assert str(target) in err and "cannot write" in err


# --- usage errors exit with status 2 ---


@pytest.mark.parametrize(
    "argv",
    [
        ["count", "queen", "4", "1"],
        ["count", "bishop", "4", "-1"],
        ["count", "bishop", "4", "2", "--below", "1"],
        ["count", "anassa", "4", "2", "--below", "-1"],
        ["count", "bishop", "4", "2", "--format", "bfile"],
        ["coeffs", "bishop", "-2"],
        ["coeffs", "bishop", "2", "--format", "bfile"],
        ["table", "bishop", "-3"],
        ["table", "bishop", "4", "--format", "yaml"],
        ["verify", "everything"],
    ],
)
def test_usage_errors(argv, capsys):
    with pytest.raises(SystemExit) as excinfo:
        cli.main(argv)
    assert excinfo.value.code == 2
    capsys.readouterr()


# --- verify ---


def test_verify_fast_suites_pass(capsys):
    assert cli.main(["verify", "coeffs", "--k-max", "3"]) == 0
    out = capsys.readouterr().out
    assert "0 failures" in out and "FAIL" not in out


def test_verify_reports_failures(monkeypatch, capsys):
    monkeypatch.setattr("chesscount.formulas.white_rooks_alt", lambda m, k: -7)
    assert cli.main(["verify", "identities", "--m-max", "4", "--k-max", "2"]) == 1
    out = capsys.readouterr().out
    assert "FAIL" in out
    assert "got -7" in out


# --- determinism across processes ---


def test_byte_identical_runs():
    for args in (
        ["table", "bishop", "7", "--format", "bfile"],
        ["coeffs", "bishop", "3", "--format", "json"],
    ):
        first = run_cli(*args)
        second = run_cli(*args)
        assert first.returncode == second.returncode == 0, first.stderr
        assert first.stdout == second.stdout
        assert first.stdout
