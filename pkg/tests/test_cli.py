import json
import math

import numpy as np
import pytest

from blends import gen_cospi
from blends.cli import fmt, main, parse_points


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def step_spec(tmp_path):
    path = tmp_path / "step.json"
    path.write_text('{"a": 0, "b": 1, "p": [-1], "q": [1]}')
    return str(path)


def csv_rows(text):
    lines = text.strip().splitlines()
    return lines[0].split(","), [line.split(",") for line in lines[1:]]


def test_gen_step(capsys):
    code, out, _ = run(capsys, "gen", "step", "0", "0")
    assert code == 0
    assert json.loads(out) == {"a": 0, "b": 1, "p": [-1], "q": [1]}


def test_gen_cospi(capsys):
    code, out, _ = run(capsys, "gen", "cospi", "2", "2")
    assert code == 0
    assert json.loads(out)["p"][2] == pytest.approx(-math.pi**2 / 2, rel=1e-15)


def test_gen_poly(capsys):
    code, out, _ = run(capsys, "gen", "poly", "1", "1", "--coeffs", "0", "0", "1")
    assert code == 0
    assert json.loads(out) == {"a": 0, "b": 1, "p": [0, 0], "q": [1, 2]}


def test_gen_poly_needs_coeffs(capsys):
    assert run(capsys, "gen", "poly", "1", "1")[0] == 2


def test_eval_step(capsys, step_spec):
    code, out, err = run(capsys, "eval", "--spec", step_spec, "--points", "0:1:3")
    assert code == 0 and err == ""
    header, rows = csv_rows(out)
    assert header == ["z", "h0"]
    assert rows == [["0", "-1"], ["0.5", "0"], ["1", "1"]]


def test_eval_at_points_with_derivatives(capsys, step_spec, tmp_path):
    target = tmp_path / "out.csv"
    code, out, _ = run(capsys, "eval", "--spec", step_spec, "--at", "0.25", "--nder", "2", "-o", str(target))
    assert code == 0 and out == ""
    header, rows = csv_rows(target.read_text())
    assert header == ["z", "h0", "h1", "h2"]
    assert rows == [["0.25", "-0.5", "2", "0"]]


def test_gen_eval_round_trip(capsys, tmp_path):
    code, out, _ = run(capsys, "gen", "cospi", "8", "8")
    spec = tmp_path / "cos.json"
    spec.write_text(out)
    code, out, _ = run(capsys, "eval", "--spec", str(spec), "--points", "0:1:2021", "--nder", "3")
    assert code == 0
    header, rows = csv_rows(out)
    assert len(header) == 5 and len(rows) == 2021
    table = np.array(rows, dtype=float)
    s = np.arange(2021) / 2020
    np.testing.assert_array_equal(table[:, 1:], gen_cospi(8, 8)(s, nder=3))


def test_eval_writes_nan(capsys, tmp_path):
    spec = tmp_path / "step.json"
    code, out, _ = run(capsys, "gen", "step", "987", "610")
    spec.write_text(out)
    code, out, err = run(capsys, "eval", "--spec", str(spec), "--at", "0")
    assert code == 0
    assert csv_rows(out)[1] == [["0", "nan"]]
    assert err.startswith("blends: warning:") and "overflows binary64" in err


def test_integrate(capsys, step_spec, tmp_path):
    assert run(capsys, "integrate", "--spec", step_spec)[1].strip() == "0"
    assert run(capsys, "integrate", "--spec", step_spec, "--exact")[1].strip() == "0"
    spec = tmp_path / "left.json"
    spec.write_text('{"a": 0, "b": 1, "p": [1, 0, 0, 0, 0], "q": [0, 0, 0, 0, 0]}')
    assert run(capsys, "integrate", "--spec", str(spec))[1].strip() == "0.5"
    spec.write_text('{"a": 0, "b": 1, "p": [0, 0], "q": [1, 3]}')  # z^3
    assert run(capsys, "integrate", "--spec", str(spec))[1].strip() == "0.25"
    assert run(capsys, "integrate", "--spec", str(spec), "--exact")[1].strip() == "1/4"


def test_weights_fractions(capsys):
    code, out, _ = run(capsys, "weights", "4", "4")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "side,j,weight"
    assert [l.split(",")[2] for l in lines[1:]] == [
        "1/2", "1/9", "1/36", "1/168", "1/1260",
        "1/2", "-1/9", "1/36", "-1/168", "1/1260",
    ]  # fmt: skip


def test_weights_decimals(capsys):
    out = run(capsys, "weights", "1", "1", "--format", "decimals")[1]
    values = [float(l.split(",")[2]) for l in out.strip().splitlines()[1:]]
    assert values == [0.5, 1 / 12, 0.5, -1 / 12]


def test_weights_negative(capsys):
    assert run(capsys, "weights", "-1", "2")[0] == 2


def test_lebesgue(capsys):
    code, out, _ = run(capsys, "lebesgue", "0", "0", "--points", "0:1:5")
    assert code == 0
    header, rows = csv_rows(out)
    assert header == ["s", "L"]
    assert [r[1] for r in rows] == ["1"] * 5


def test_antiderivative(capsys, step_spec):
    code, out, _ = run(capsys, "antiderivative", "--spec", step_spec)
    assert code == 0
    spec = json.loads(out)
    assert spec["p"] == [0, -1] and spec["q"] == [0, 1]


def test_antiderivative_initial_value(capsys, tmp_path):
    spec = tmp_path / "one.json"
    spec.write_text('{"a": 1, "b": 3, "p": [1], "q": [1]}')
    out = run(capsys, "antiderivative", "--spec", str(spec), "--initial", "5")[1]
    assert json.loads(out) == {"a": 1, "b": 3, "p": [5, 2], "q": [7, 2]}


def test_string_commands(capsys, tmp_path):
    spec = tmp_path / "string.json"
    spec.write_text('{"knots": [0, 1, 2], "taylor": [[0, 0], [1, 2], [4, 4]]}')
    code, out, _ = run(capsys, "string-eval", "--spec", str(spec), "--at", "1", "--nder", "1")
    assert code == 0
    assert csv_rows(out)[1] == [["1", "1", "2"]]
    out = run(capsys, "string-integrate", "--spec", str(spec))[1]
    assert float(out) == pytest.approx(8 / 3, rel=1e-15)
    code, _, err = run(capsys, "string-eval", "--spec", str(spec), "--at", "3")
    assert code == 2 and "outside" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["eval", "--spec", "{spec}", "--points", "0:1:1"],
        ["eval", "--spec", "{spec}", "--points", "0:1:0"],
        ["eval", "--spec", "{spec}", "--points", "0:1"],
        ["eval", "--spec", "{spec}", "--points", "a:b:3"],
        ["eval", "--spec", "{spec}"],
        ["eval", "--spec", "{spec}", "--at", "0", "--points", "0:1:3"],
        ["eval", "--spec", "{spec}", "--at", "0", "--nder", "-1"],
        ["eval", "--spec", "{bad}", "--at", "0"],
        ["frobnicate"],
        [],
    ],
)
def test_input_errors_exit_2(capsys, tmp_path, step_spec, argv):
    bad = tmp_path / "bad.json"
    bad.write_text('{"a": 0, "b": 0, "p": [1], "q": [1]}')
    argv = [a.format(spec=step_spec, bad=bad) for a in argv]
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == ""
    assert err


def test_missing_file_exit_3(capsys, tmp_path):
    code, out, err = run(capsys, "eval", "--spec", str(tmp_path / "nope.json"), "--at", "0")
    assert code == 3 and out == "" and "nope.json" in err


def test_unwritable_output_exit_3(capsys, step_spec, tmp_path):
    target = tmp_path / "missing-dir" / "out.csv"
    code, _, err = run(capsys, "eval", "--spec", step_spec, "--at", "0", "-o", str(target))
    assert code == 3 and err


def test_thread_cap(capsys, step_spec, monkeypatch):
    monkeypatch.setenv("BLEND_THREADS", "1")
    assert run(capsys, "eval", "--spec", step_spec, "--at", "0")[0] == 0
    monkeypatch.setenv("BLEND_THREADS", "lots")
    code, _, err = run(capsys, "eval", "--spec", step_spec, "--at", "0")
    assert code == 2 and "BLEND_THREADS" in err


def test_help_exits_0(capsys):
    assert main(["--help"]) == 0


def test_fmt():
    assert fmt(1.0) == "1"
    assert fmt(-0.5) == "-0.5"
    assert fmt(float("nan")) == "nan"
    assert fmt(0.1) == "0.1"
    assert float(fmt(math.pi)) == math.pi


def test_parse_points_exact_endpoints():
    pts = parse_points("0.1:0.7:7")
    assert pts[0] == 0.1 and pts[-1] == 0.7 and pts.size == 7
    pts = parse_points("0:1:2021")
    assert pts[1248] == 1248 / 2020
