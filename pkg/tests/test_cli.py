import json
import subprocess
import sys
import time

import pytest
from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from heron_curves.cli import _join_negative_values, main
from heron_curves.verify import verify_report

from conftest import pythagorean_points, small_rationals


def run(argv, capsys, stdin=None, monkeypatch=None):
    if stdin is not None:
        import io

        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    try:
        code = main(argv)
    except SystemExit as exc:
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


def test_isosceles_example(capsys):
    code, out, _ = run(["isosceles", "--p1", "3,4", "--t", "1/2", "--branch", "-"], capsys)
    assert code == 0
    rep = json.loads(out)
    assert rep["schema"] == "heron-curves/1"
    assert rep["solutions"] == [{"apex": ["-25/9", "125/24"], "leg": "425/72", "t": "1/2", "branch": "-"}]


def test_decimal_flag(capsys):
    code, out, _ = run(["isosceles", "--p1", "3,4", "--t", "0.5", "--branch", "-"], capsys)
    assert code == 0 and json.loads(out)["solutions"][0]["leg"] == "425/72"


def test_heron_curve_example(capsys):
    code, out, _ = run(["heron", "curve", "--m", "1", "--q", "1"], capsys)
    rep = json.loads(out)
    assert code == 0
    assert (rep["curve"]["A"], rep["curve"]["B"]) == ("-8", "8")
    assert rep["torsion"]["witness_P"] == {"point": {"x": "-2", "y": "4"}, "order": None}


def test_singular_curve_is_domain_error(capsys):
    code, out, err = run(["heron", "gen", "--m", "1", "--q", "-1", "--count", "3"], capsys)
    assert code == 1
    assert "singular curve" in err
    assert out == ""


@pytest.mark.parametrize(
    "argv",
    [
        ["heron", "curve", "--m", "1"],
        ["heron", "curve", "--m", "one", "--q", "1"],
        ["heron", "gen", "--m", "1", "--q", "1", "--count", "0"],
        ["heron", "witnesses", "--m", "1", "--q", "1", "--h", "2"],
        ["heron", "curve", "--m", "1", "--q", "1", "--bogus", "3"],
        ["isosceles", "--p1", "3;4", "--t", "1"],
        ["isosceles", "--p1", "3,4"],
    ],
)
def test_parse_errors_exit_2(argv, capsys):
    code, _, _ = run(argv, capsys)
    assert code == 2


def test_negative_values_are_joined():
    assert _join_negative_values(["--q", "-4/7", "--p1", "-3,4", "--branch", "-"]) == [
        "--q=-4/7",
        "--p1=-3,4",
        "--branch",
        "-",
    ]


def test_negative_rational_flag(capsys):
    code, out, _ = run(["heron", "witnesses", "--m", "1", "--q", "-4/7"], capsys)
    assert code == 0 and json.loads(out)["q"] == "-4/7"


def test_verify_closed_loop_and_tamper(tmp_path, capsys):
    code, out, _ = run(["heron", "gen", "--m", "1", "--q", "1", "--count", "3"], capsys)
    assert code == 0
    path = tmp_path / "r.json"
    path.write_text(out)
    code, vout, _ = run(["verify", str(path)], capsys)
    v = json.loads(vout)
    assert code == 0 and v["failed"] == 0 and v["checked"] == 6
    rep = json.loads(out)
    rep["records"][2]["sides"][1] = "7/3"
    path.write_text(json.dumps(rep))
    code, vout, _ = run(["verify", str(path)], capsys)
    v = json.loads(vout)
    assert code == 1
    assert [r["index"] for r in v["results"] if not r["ok"]] == [2]


def test_verify_empty(capsys, monkeypatch):
    code, out, _ = run(["verify"], capsys, stdin="", monkeypatch=monkeypatch)
    assert code == 0 and json.loads(out)["checked"] == 0
    code, out, _ = run(["verify", "-"], capsys, stdin='{"schema": "heron-curves/1", "records": []}', monkeypatch=monkeypatch)
    assert code == 0 and json.loads(out)["checked"] == 0


def test_verify_rejects_garbage(capsys, monkeypatch):
    code, _, _ = run(["verify"], capsys, stdin="not json", monkeypatch=monkeypatch)
    assert code == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["heron", "curve", "--m", "1", "--q", "-2"],
        ["heron", "curve", "--m", "1", "--q", "-1"],
        ["heron", "torsion", "--m", "1", "--n", "1"],
        ["heron", "torsion", "--m", "2", "--q", "3/5"],
        ["heron", "order4", "--m", "3", "--t", "1"],
        ["heron", "witnesses", "--m", "1", "--h", "1/2"],
        ["heron", "witnesses", "--m", "1", "--u", "3"],
        ["genus3", "special", "--u", "2"],
        ["genus3", "special", "--u", "3/2", "--family", "right"],
        ["genus3", "search", "--q", "25/32", "--height", "16"],
        ["isosceles", "--p1", "3,4", "--enumerate", "--height", "4"],
        ["isosceles", "--p1", "5,0", "--t", "2"],
    ],
)
def test_every_subcommand_verifies(argv, capsys):
    code, out, _ = run(argv, capsys)
    assert code == 0
    rep = json.loads(out)
    assert rep["records"]
    assert verify_report(rep)["failed"] == 0


def test_witness_output_labels_heuristic(capsys):
    _, out, _ = run(["heron", "witnesses", "--m", "1", "--h", "1/2"], capsys)
    ind = json.loads(out)["independence"]
    assert ind["heuristic"] is True and ind["independent"] is True


def test_csv_output(capsys):
    code, out, _ = run(["heron", "order4", "--m", "1", "--t", "1", "--format", "csv"], capsys)
    lines = out.strip().splitlines()
    assert code == 0 and lines[0].startswith("kind,") and len(lines) == 4
    code, out2, _ = run(["--format", "csv", "heron", "order4", "--m", "1", "--t", "1"], capsys)
    assert out2 == out


def test_jobs_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("HERON_CURVES_JOBS", "2")
    _, a, _ = run(["genus3", "search", "--q", "9/16", "--height", "40"], capsys)
    monkeypatch.setenv("HERON_CURVES_JOBS", "1")
    _, b, _ = run(["genus3", "search", "--q", "9/16", "--height", "40"], capsys)
    assert a == b


def test_gen_runtime_and_module_entry_point():
    start = time.perf_counter()
    proc = subprocess.run(
        [sys.executable, "-m", "heron_curves", "heron", "gen", "--m", "1", "--q", "1", "--count", "5"],
        capture_output=True,
        text=True,
    )
    assert time.perf_counter() - start < 10
    assert proc.returncode == 0
    assert len([r for r in json.loads(proc.stdout)["records"] if r["kind"] == "triangle"]) == 5


@settings(max_examples=25, deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture])
@given(small_rationals(5, 4, nonzero=True), small_rationals(5, 4, nonzero=True), st.integers(1, 3))
def test_closed_loop_heron(capsys, m, q, count):
    assume(m * q + 1 != 0)
    code, out, _ = run(["heron", "gen", "--m", str(m), "--q", str(q), "--count", str(count)], capsys)
    assert code in (0, 1)
    if out:
        assert verify_report(json.loads(out))["failed"] == 0


@settings(max_examples=25, deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture])
@given(pythagorean_points(), small_rationals(9, 9))
def test_closed_loop_isosceles(capsys, p1, t):
    code, out, _ = run(["isosceles", "--p1", f"{p1[0]},{p1[1]}", "--t", str(t)], capsys)
    assert code in (0, 1)
    if code == 0:
        assert verify_report(json.loads(out))["failed"] == 0


@settings(max_examples=25, deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture])
@given(small_rationals(), small_rationals())
def test_closed_loop_order4(capsys, m, t):
    code, out, _ = run(["heron", "order4", "--m", str(m), "--t", str(t)], capsys)
    assert code in (0, 1)
    if code == 0:
        assert verify_report(json.loads(out))["failed"] == 0
