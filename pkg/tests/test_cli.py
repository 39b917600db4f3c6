import json
import subprocess
import sys

import pytest

from quadco.cli import main, parse_window


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:
        code = exc.code
    out = capsys.readouterr()
    return code, out.out, out.err


def last_json(out):
    return json.loads(out.strip().splitlines()[-1])


@pytest.mark.parametrize(
    "text,lines",
    [("y2 y2", ["y3 y1"]), ("y3 y1", ["y3 y1"]), ("y1 y1", ["0"]), ("y1 y2", ["y3 y0"])],
)
def test_normalize(capsys, text, lines):
    code, out, _ = run(capsys, "normalize", text)
    assert code == 0
    assert out.strip().splitlines()[:-1] == lines


def test_normalize_atilde(capsys):
    code, out, _ = run(capsys, "normalize", "y0", "y5", "--ring", "atilde")
    assert code == 0
    assert last_json(out)["monomials"] == [[5, 0]]


def test_normalize_errors(capsys):
    assert run(capsys, "normalize", "y2 z1")[0] == 2
    assert run(capsys, "normalize", "y-1 y2", "--ring", "atilde")[0] == 2
    assert run(capsys, "normalize", "y1 y2 y4", "--max-steps", "1")[0] == 3
    assert run(capsys, "normalize", "y2", "--strategy", "sideways")[0] == 2


def test_table_f(capsys):
    code, out, _ = run(capsys, "table", "--what", "f", "--window", "0:3")
    assert code == 0
    rows = {tuple(r["key"]): r["value"] for r in last_json(out)["table"]}
    assert rows[(3, 0)] == [{"key": [0, 3], "value": 1}, {"key": [1, 2], "value": 1}]


def test_table_h_and_support(capsys):
    _, out, _ = run(capsys, "table", "--what", "h", "--window", "0:2")
    rows = {tuple(r["key"]): r["value"] for r in last_json(out)["table"]}
    assert rows[(2, 1)]["text"] == "x^2 y"
    assert rows[(2, 1)]["terms"] == [{"x": 2, "y": 1}]
    _, out, _ = run(capsys, "table", "--what", "support", "--window", "0:3")
    rows = {tuple(r["key"]): r["value"] for r in last_json(out)["table"]}
    assert rows[(3, 0)] == [[0, 3], [1, 2]] and rows[(2, 1)] == []


def test_table_empty_window(capsys):
    code, out, _ = run(capsys, "table", "--what", "f", "--window", "3:1")
    assert code == 0 and last_json(out)["table"] == []


def test_table_bad_flag(capsys):
    assert run(capsys, "table", "--what", "g")[0] == 2
    assert run(capsys, "table", "--what", "f", "--window", "a:b")[0] == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["selfdual", "--window", "15"],
        ["copbw", "--n", "3", "--dmax", "20"],
        ["quadratic", "--n", "3", "--dmax", "12"],
        ["milnor"],
        ["adem", "--samples", "100"],
        ["reciprocity"],
        ["pairing", "--window", "10"],
        ["perp"],
        ["comonoid", "--n", "4"],
        ["foracle"],
    ],
)
def test_verify_suites_pass(capsys, argv):
    code, out, err = run(capsys, "verify", *argv)
    report = json.loads(out)
    assert code == 0 and report["pass"]
    assert report["suite"] == argv[0]
    assert all(c["ok"] for c in report["checks"])
    assert "pass" in err


def test_verify_is_deterministic(capsys):
    first = run(capsys, "verify", "reciprocity", "--seed", "5")[1]
    second = run(capsys, "verify", "reciprocity", "--seed", "5")[1]
    assert first == second


def test_verify_usage_errors(capsys):
    assert run(capsys, "verify", "nothing")[0] == 2
    assert run(capsys, "verify", "perp", "--dmax", "3")[0] == 2
    assert run(capsys, "verify", "selfdual", "--window", "-1")[0] == 2


def test_verify_mismatch_exit_code(capsys, monkeypatch):
    from quadco import cli, verify

    monkeypatch.setitem(cli.SUITES, "perp", lambda **_: [verify.Check("forced", 1, 2)])
    code, out, _ = run(capsys, "verify", "perp")
    assert code == 1 and json.loads(out)["pass"] is False


def test_parse_window():
    assert parse_window("4") == (-4, 4)
    assert parse_window("-2:7") == (-2, 7)
    assert parse_window("0,3") == (0, 3)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "quadco", "normalize", "y2 y2"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0] == "y3 y1"
