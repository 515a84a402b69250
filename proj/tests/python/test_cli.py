"""End-to-end checks of the command-line tool (path in $INSPECTGAME_CLI)."""

import csv
import io
import json
import os
import subprocess
from fractions import Fraction

CLI = os.environ.get("INSPECTGAME_CLI", "inspectgame")

TWO_PERIOD = '{"variant":"zero_sum","n":2,"m":1,"k":1,"b":1,"rewards":[1]}'
THREE_PERIOD = '{"variant":"zero_sum","n":3,"m":1,"k":2,"b":1,"rewards":[1,1]}'


def run(*args, stdin=None, check=True):
    proc = subprocess.run(
        [CLI, *args], input=stdin, capture_output=True, text=True, timeout=300
    )
    if check:
        assert proc.returncode == 0, proc.stderr
    return proc


def frac(value):
    return Fraction(int(value["num"]), int(value["den"]))


def test_solve_inline():
    proc = run("solve", "--spec-json", TWO_PERIOD)
    root = json.loads(proc.stdout)["root"]
    assert frac(root["inspector_value"]) == Fraction(-1, 3)
    assert frac(root["p"]) == Fraction(1, 3)
    assert frac(root["q"]) == Fraction(1, 3)


def test_solve_from_stdin_and_file(tmp_path):
    proc = run("solve", "--spec", "-", stdin=THREE_PERIOD)
    assert frac(json.loads(proc.stdout)["root"]["q"]) == Fraction(5, 12)

    path = tmp_path / "spec.json"
    path.write_text(THREE_PERIOD)
    proc = run("solve", "--spec", str(path), "--full-table")
    assert len(json.loads(proc.stdout)["table"]) >= 5


def test_round_trip_spec_yields_identical_output():
    first = run("solve", "--spec-json", THREE_PERIOD)
    wire = json.loads(first.stdout)["spec"]
    second = run("solve", "--spec-json", json.dumps(wire))
    assert json.loads(first.stdout) == json.loads(second.stdout)


def test_schedule_csv():
    proc = run("schedule", "--spec-json", THREE_PERIOD, "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(proc.stdout)))
    as_map = {(int(r["n"]), int(r["m"])): Fraction(r["p"]) for r in rows}
    assert as_map[(3, 1)] == Fraction(1, 4)
    assert as_map[(1, 1)] == Fraction(1, 2)
    assert as_map[(2, 0)] == 0


def test_verify_pass_and_exit_codes():
    proc = run("verify", "--spec-json", THREE_PERIOD)
    payload = json.loads(proc.stdout)
    assert payload["all_pass"] is True
    assert all(check["pass"] for check in payload["checks"])
    assert frac(payload["root"]["p"]) == Fraction(1, 4)
    assert frac(payload["root"]["q"]) == Fraction(5, 12)

    bad_json = run("solve", "--spec-json", "{not json", check=False)
    assert bad_json.returncode == 2
    assert "error" in json.loads(bad_json.stderr)

    invalid = run(
        "solve", "--spec-json", '{"variant":"zero_sum","n":2,"m":1,"k":1,"b":-1,"rewards":[1]}',
        check=False,
    )
    assert invalid.returncode == 3
    assert json.loads(invalid.stderr)["error"]["type"] == "penalty_out_of_range"

    both_sources = run("solve", "--spec", "x.json", "--spec-json", TWO_PERIOD, check=False)
    assert both_sources.returncode == 2


def test_leadership_command():
    spec = '{"variant":"leadership","n":2,"m":1,"k":1,"a":"1/2","b":1,"rewards":[1]}'
    payload = json.loads(run("leadership", "--spec-json", spec).stdout)
    assert frac(payload["gain_factor"]) == Fraction(1, 2)
    values = {
        (v["state"]["n"], v["state"]["m"], v["state"]["k"]): frac(v["u"])
        for v in payload["values"]
    }
    assert values[(2, 1, 1)] == Fraction(-1, 3)


def test_simulate_reproducible(tmp_path):
    args = ("simulate", "--spec-json", TWO_PERIOD, "--trials", "50000", "--seed", "11")
    first = run(*args)
    second = run(*args)
    assert first.stdout == second.stdout
    report = json.loads(first.stdout)
    assert abs(report["inspector_z"]) <= 4.0

    hist = tmp_path / "hist.csv"
    run(*args, "--histogram-csv", str(hist))
    rows = list(csv.DictReader(hist.open()))
    caught = [r for r in rows if r["kind"] == "caught_at_period"]
    assert sum(int(r["count"]) for r in caught) == 50000


def test_sweep_q_is_one_over_n():
    proc = run(
        "sweep", "--spec-json", '{"variant":"zero_sum","n":2,"m":1,"k":1,"b":0,"rewards":[1]}',
        "--n", "2..6", "--m", "1..n-1", "--k", "1..1", "--b", "0",
    )
    rows = list(csv.DictReader(io.StringIO(proc.stdout)))
    assert rows, "sweep emitted no rows"
    for row in rows:
        assert Fraction(row["q"]) == Fraction(1, int(row["n"]))
        assert Fraction(row["p"]) == Fraction(int(row["m"]), int(row["n"]))
    # Deterministic ordering by the sweep keys.
    keys = [(int(r["n"]), int(r["m"])) for r in rows]
    assert keys == sorted(keys)


def test_sweep_rational_b_column():
    proc = run(
        "sweep", "--spec-json", TWO_PERIOD, "--n", "3..3", "--m", "1..1", "--k", "1..2",
        "--b", "1/2,2",
    )
    rows = list(csv.DictReader(io.StringIO(proc.stdout)))
    assert {row["b"] for row in rows} == {"1/2", "2"}
    for row in rows:
        # Exact and approximate columns describe the same number.
        assert abs(float(Fraction(row["v"])) - float(row["v_approx"])) < 1e-9
        assert Fraction(row["v"]) == -Fraction(row["w"])
