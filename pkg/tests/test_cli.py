"""End-to-end CLI behavior: outputs, exit codes, determinism, round trips."""

import json
from fractions import Fraction

import pytest

from dtu.cli import main
from dtu.encode import parse_fraction, parse_golden, parse_seq, parse_surd
from dtu.geval import LambdaKind, g_mediant
from dtu.verify import report_markdown, verify_suite


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_eval_text(capsys):
    code, out, _ = run(capsys, "eval", "--lambda", "phi-inv", "--x", "2/5")
    assert code == 0
    exact, decimal = out.strip().split("\n")
    assert exact == "7-4*phi"
    assert decimal.startswith("0.5278640450")
    assert parse_golden(exact) == g_mediant(LambdaKind.PHI_INV, Fraction(2, 5))


def test_eval_json_round_trip(capsys):
    code, out, _ = run(capsys, "eval", "--lambda", "half", "--x", "2/5",
                       "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert parse_fraction(payload["exact"]) == Fraction(3, 8)


def test_eval_cf_input(capsys):
    code, out, _ = run(capsys, "eval", "--lambda", "tau", "--x", "2",
                       "--x-is-cf")
    assert code == 0
    assert out.splitlines()[0] == "2-1*phi"


def test_sample_csv(capsys):
    code, out, _ = run(capsys, "sample", "--lambda", "half", "--depth", "3")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "x_num,x_den,g_exact,g_decimal"
    rows = [line.split(",") for line in lines[1:]]
    xs = [Fraction(int(r[0]), int(r[1])) for r in rows]
    assert xs == sorted(xs)
    assert xs[0] == 0 and xs[-1] == 1
    third = next(r for r in rows if (r[0], r[1]) == ("1", "3"))
    assert parse_fraction(third[2]) == Fraction(1, 4)
    assert len(third[3].replace(".", "").lstrip("0")) >= 30


def test_classify_json(capsys):
    code, out, _ = run(capsys, "classify", "--period", "7,4")
    assert code == 0
    payload = json.loads(out)
    assert payload["classification"] == "DerivZero"
    assert payload["kappa"] == "15"
    assert parse_surd(payload["growth_rate_exact"]).compare(
        parse_surd("(15+4*sqrt(14))/1")) == 0
    assert payload["certificate"]["sign"] == -1
    code, out, _ = run(capsys, "classify", "--period", "7,3",
                       "--preperiod", "2,1", "--orientation", "phi")
    assert json.loads(out)["classification"] == "DerivInfinity"


def test_extremal_modes(capsys):
    code, out, _ = run(capsys, "extremal", "--n", "4", "--s", "16",
                       "--mode", "brute")
    payload = json.loads(out)
    assert code == 0
    assert payload["sequence"] == "4,2,4,2"
    assert payload["value_exact"] == "89"
    assert payload["min_sequence"] == "1,6,1,1"
    assert payload["certified"] is True
    code, out, _ = run(capsys, "extremal", "--n", "4", "--s", "16",
                       "--mode", "min")
    assert json.loads(out)["sequence"] == "1,6,1,1"
    code, out, _ = run(capsys, "extremal", "--n", "4", "--s", "16",
                       "--mode", "max")
    assert json.loads(out)["sequence"] == "4,2,4,2"


def test_kappa2_command(tmp_path, capsys):
    trace_path = tmp_path / "trace.json"
    code, out, _ = run(capsys, "kappa2", "--epsilon", "1/500",
                       "--trace", str(trace_path))
    assert code == 0
    payload = json.loads(out)
    assert parse_fraction(payload["lo"]) == 13 + Fraction(2, 38)
    assert parse_fraction(payload["hi"]) == 13 + Fraction(2, 37)
    assert parse_seq(payload["witness_lo"]) == (7, 3) * 37 + (7, 4)
    steps = json.loads(trace_path.read_text())
    assert len(steps) == payload["steps"] <= 12
    assert {"step", "density", "period_length", "kappa",
            "classification"} <= set(steps[0])


def test_exit_codes(capsys):
    # usage errors -> 1
    code, _, err = run(capsys, "eval", "--lambda", "nope", "--x", "1/2")
    assert code == 1
    code, _, err = run(capsys, "eval", "--lambda", "half", "--x", "3/2")
    assert code == 1
    # infeasible instance -> 2
    code, _, err = run(capsys, "extremal", "--n", "4", "--s", "5",
                       "--mode", "min")
    assert code == 2
    # cap exceeded -> 2
    code, _, err = run(capsys, "extremal", "--n", "12", "--s", "120",
                       "--mode", "brute")
    assert code == 2
    with pytest.raises(SystemExit):
        main(["eval", "--help"])


def test_unknown_subcommand(capsys):
    code, _, err = run(capsys, "frobnicate")
    assert code == 1


def test_deterministic_outputs(capsys):
    outs = []
    for _ in range(2):
        code, out, _ = run(capsys, "classify", "--period", "7,3,7,4")
        outs.append(out)
    assert outs[0] == outs[1]
    outs = []
    for _ in range(2):
        code, out, _ = run(capsys, "sample", "--lambda", "phi-inv",
                           "--depth", "5")
        outs.append(out)
    assert outs[0] == outs[1]


def test_env_cap_override(capsys, monkeypatch):
    monkeypatch.setenv("DTU_FAREY_DEPTH_CAP", "4")
    code, _, err = run(capsys, "sample", "--lambda", "half", "--depth", "64")
    assert code == 1
    monkeypatch.setenv("DTU_BRUTE_CAP", "10")
    code, _, err = run(capsys, "extremal", "--n", "4", "--s", "16",
                       "--mode", "brute")
    assert code == 2


def test_verify_command_and_fault_injection(tmp_path, capsys):
    out_dir = tmp_path / "report"
    code, out, _ = run(capsys, "verify", "--output", str(out_dir))
    assert code == 0
    assert "Overall: PASS" in out
    assert (out_dir / "report.md").exists()
    payload = json.loads((out_dir / "report.json").read_text())
    assert payload["passed"] is True
    assert all(c["status"] == "PASS" for c in payload["checks"])
    assert payload["kappa2"]["lo"] == "248/19"
    trace = json.loads((out_dir / "kappa2_trace.json").read_text())
    assert len(trace) == payload["kappa2"]["steps"]

    # injected fault: exactly one FAIL row, exit code 3
    code, out, _ = run(capsys, "verify", "--inject-fault",
                       "orientation-duality")
    assert code == 3
    fails = [line for line in out.splitlines() if "| FAIL |" in line]
    assert len(fails) == 1
    assert "orientation-duality" in fails[0]


def test_report_renders_bracket_endpoints_unreduced():
    report = verify_suite(eps=Fraction(1, 500))
    md = report_markdown(report)
    assert "496/38" in md
    assert "483/37" in md
    assert report.passed
