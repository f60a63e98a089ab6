import io
import json
from fractions import Fraction as F

import pytest
from hypothesis import given, settings

from favgame import Instance
from favgame.cli import main
from favgame.io import (
    InstanceFormatError,
    curve_rows,
    dump_instance,
    parse_instance,
    read_curve_csv,
    write_curve_csv,
)
from favgame.model import M2

from conftest import instances

EXAMPLE1 = '{"s": 3, "jobs": [{"size": 1, "favorite": 1}, {"size": 1, "favorite": 2}]}'


def test_parse_exact_numbers():
    inst = parse_instance('{"s": "3/2", "jobs": [{"size": 0.1, "favorite": 2}]}')
    assert inst.s == F(3, 2)
    assert inst.jobs[0].size == F(1, 10) and inst.jobs[0].favorite is M2


@pytest.mark.parametrize("text", [
    "[]",
    "not json",
    '{"s": 2}',
    '{"s": 2, "jobs": [], "extra": 1}',
    '{"s": "1/2", "jobs": []}',
    '{"s": true, "jobs": []}',
    '{"s": 2, "jobs": {}}',
    '{"s": 2, "jobs": [{"size": 1}]}',
    '{"s": 2, "jobs": [{"size": 0, "favorite": 1}]}',
    '{"s": 2, "jobs": [{"size": 1, "favorite": 3}]}',
    '{"s": 2, "jobs": [{"size": "x", "favorite": 1}]}',
    '{"s": 2, "jobs": [{"size": 1, "favorite": "1"}]}',
])
def test_parse_rejects(text):
    with pytest.raises(InstanceFormatError):
        parse_instance(text)


@settings(max_examples=60)
@given(instances())
def test_instance_round_trip(inst):
    assert parse_instance(dump_instance(inst)) == inst


def test_curve_rows_default_grid():
    rows = curve_rows("1", "3", "0.01")
    assert len(rows) == 201
    assert rows[0].s == 1 and rows[-1].s == 3
    at_two = rows[100]
    assert at_two.s == 2 and at_two.segment == 5
    assert at_two.poa == pytest.approx(15 / 7) and at_two.spoa == 1.5


def test_curve_rejects_bad_ranges():
    with pytest.raises(ValueError):
        curve_rows(2, 1, F(1, 10))
    with pytest.raises(ValueError):
        curve_rows(1, 2, 0)


def test_csv_round_trip():
    rows = curve_rows(1, 2, F(1, 4))
    buf = io.StringIO()
    write_curve_csv(rows, buf)
    text = buf.getvalue()
    assert text.splitlines()[0] == "s,poa,spoa,spoa_simple,segment"
    assert "\r" not in text
    back = read_curve_csv(io.StringIO(text))
    assert [r.segment for r in back] == [r.segment for r in rows]
    for a, b in zip(back, rows):
        assert a.spoa == pytest.approx(b.spoa, rel=1e-11)


# --- command line ---------------------------------------------------------


def test_cli_curve_stdout(capsys):
    assert main(["curve"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 202
    assert lines[101].startswith("2,2.14285714286,1.5,1.5,5")


def test_cli_curve_file(tmp_path):
    out = tmp_path / "c.csv"
    assert main(["curve", "--s-min", "1", "--s-max", "2", "--step", "0.5", "--out", str(out)]) == 0
    assert out.read_text().count("\n") == 4
    assert main(["curve", "--out", str(tmp_path / "missing" / "c.csv")]) == 2
    assert main(["curve", "--s-min", "2", "--s-max", "1"]) == 2


def test_cli_breakpoints(capsys):
    assert main(["breakpoints"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[1].startswith("s2 = 1.618033988")
    assert out[4] == "s5 = 2.000000000000"


def test_cli_certify(capsys):
    assert main(["certify", "--kind", "spoa", "--segment", "3", "--s", "17/10"]) == 0
    out = capsys.readouterr().out
    assert "PASS" in out
    report = json.loads(out.split("--- report\n")[1])
    assert report["ratio"] == "27/17" and report["passed"] is True
    assert main(["certify", "--kind", "spoa", "--segment", "2", "--s", "3"]) == 2
    assert main(["certify", "--kind", "spoa", "--s", "3"]) == 2
    assert main(["certify", "--kind", "poa", "--s", "2"]) == 0
    assert main(["certify", "--kind", "example1", "--s", "3"]) == 0


def test_cli_rejects_small_s(capsys):
    assert main(["lp-check", "--s", "0.5"]) == 2
    with pytest.raises(SystemExit) as exc:
        main(["lp-check", "--s", "abc"])
    assert exc.value.code == 2


def test_cli_lp_check(capsys):
    assert main(["lp-check", "--s", "2", "--mode", "ne"]) == 0
    assert "diff    = 0" in capsys.readouterr().out
    assert main(["lp-check", "--s", "1.7", "--float"]) == 0


def test_cli_analyze(tmp_path, capsys):
    path = tmp_path / "ex1.json"
    path.write_text(EXAMPLE1)
    assert main(["analyze", "--file", str(path), "--coalitions"]) == 0
    out = capsys.readouterr().out
    assert "Nash equilibria (2)" in out and "strong equilibria (1)" in out
    assert "poa  = 3" in out and "spoa = 1" in out
    assert "coalition against [M2 M1]: [0, 1]" in out


def test_cli_analyze_errors(tmp_path, monkeypatch):
    bad = tmp_path / "bad.json"
    bad.write_text('{"s": 2}')
    assert main(["analyze", "--file", str(bad)]) == 2
    assert main(["analyze", "--file", str(tmp_path / "nope.json")]) == 2
    big = tmp_path / "big.json"
    big.write_text(dump_instance(Instance.from_pairs(2, [(1, 1)] * 5)))
    monkeypatch.setenv("FAVGAME_JOB_CAP", "4")
    assert main(["analyze", "--file", str(big)]) == 4


def test_cli_analyze_empty_instance(tmp_path, capsys):
    path = tmp_path / "empty.json"
    path.write_text('{"s": 2, "jobs": []}')
    assert main(["analyze", "--file", str(path)]) == 0
    assert "ratios undefined" in capsys.readouterr().out


def test_cli_search(capsys):
    assert main(["search", "--s", "2", "--jobs", "5", "--trials", "50", "--seed", "1"]) == 0
    out = capsys.readouterr().out
    assert "max spoa" in out and "COUNTEREXAMPLES" not in out
    assert main(["search", "--s", "2", "--trials", "0"]) == 0
    assert capsys.readouterr().out.strip() == "no trials"
    assert main(["search", "--s", "2", "--trials", "-1"]) == 2


def test_cli_search_cap(monkeypatch):
    monkeypatch.setenv("FAVGAME_JOB_CAP", "3")
    assert main(["search", "--s", "2", "--jobs", "5", "--trials", "2"]) == 4
