import csv
import json
import subprocess
import sys

import pytest

from g2roll.cli import main

X = "[1,0,0,0,1,0,0]"
Y = "[0,1,0,0,0,1,0]"
Z = '[0,0,"1/8",0,0,0,"1/8"]'


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out.strip() else None), err


def test_distance_example(capsys):
    assert run(capsys, "distance", X, Y)[:2] == (0, {"distance": 2})


def test_complete_example(capsys):
    code, out, _ = run(capsys, "triple", "complete", X, Y)
    assert code == 0 and out["z"] == ["0", "0", "1/8", "0", "0", "0", "1/8"]


@pytest.mark.parametrize("argv, key, expected", [
    (("mul", X, Y), "product", ["0", "0", "0", "2", "0", "0", "0", "-2"]),
    (("cross", X, Y), "cross", ["0", "0", "2", "0", "0", "0", "-2"]),
    (("dot", X, "[1,0,0,0,-1,0,0]"), "dot", "2"),
    (("classify", X, "[1,0,0,0,-1,0,0]"), "class", "X3"),
    (("midpoint", X, Y), "midpoint", ["0", "0", "1", "0", "0", "0", "-1"]),
    (("quantize", "trace-dot", X, X), "value", "0"),
    (("quantize", "adjoint", "[1,0,0,0,0,0,0]", "[0,1,0,0,0,0,0]"), "image",
     ["0", "0", "1", "0", "0", "0", "0"]),
])
def test_commands(capsys, argv, key, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and out[key] == expected


def test_structured_outputs(capsys):
    code, out, _ = run(capsys, "annihilator", X)
    assert code == 0 and len(out["basis"]) == 3
    code, out, _ = run(capsys, "line", X, "[0,1,0,0,0,-1,0]")
    assert code == 0 and len(out["basis"]) == 2
    code, out, _ = run(capsys, "apartment", X, Y, Z)
    assert out["basis"]["w"] == ["0", "0", "0", "1", "0", "0", "0"]
    assert all(r["status"] == "pass" for r in out["hexagon"])
    code, out, _ = run(capsys, "triple", "extend", "--case", "3", "[1,0,0,0,-1,0,0]", X)
    assert code == 0 and out["scale"] == "1/8"
    code, out, _ = run(capsys, "quantize", "delta", "[0,0,1,0,0,0,0]")
    assert out["matrix"][0][1] == "1"
    code, out, _ = run(capsys, "quantize", "adjoint")
    assert len(out["tensor"]) == 7 and out["tensor"][0][1] == ["0", "0", "1", "0", "0", "0", "0"]


def test_g2_commands_round_trip(capsys):
    t = f"[{X},{Y},{Z}]"
    rotated = f"[{Y},{Z},{X}]"
    code, out, _ = run(capsys, "g2", "from-triples", t, rotated)
    assert code == 0
    m = json.dumps(out["matrix"])
    code, out, _ = run(capsys, "g2", "apply", m, X)
    assert out["image"] == [str(c) for c in json.loads(Y)]
    code, out, _ = run(capsys, "g2", "transport", f"[{X},{Y}]", f"[{Y},{X}]")
    assert code == 0 and out["class"] == "X2"


def test_domain_errors_exit_one(capsys):
    code, out, _ = run(capsys, "distance", X, "[1,0,0,0,0,0,0]")
    assert code == 1 and out["code"] == "NotNull"
    code, out, _ = run(capsys, "midpoint", X, "[0,1,0,0,0,-1,0]")
    assert code == 1 and out["code"] == "NotTwoRolls"
    code, out, _ = run(capsys, "triple", "validate", X, Y, X)
    assert code == 1 and out["code"] == "InvalidTriple"
    code, out, _ = run(capsys, "g2", "apply", json.dumps([[2] + [0] * 6] + [[0] * 7] * 6), X)
    assert code == 1 and out["code"] == "NotInG2"
    code, out, _ = run(capsys, "g2", "transport", f"[{X},{Y}]", f"[{X},{X}]")
    assert code == 1 and out["code"] == "DifferentOrbits"


@pytest.mark.parametrize("argv", [
    ("distance", X),
    ("distance", X, "[1,0"),
    ("distance", X, "[0.5,0,0,0,0.5,0,0]"),
    ("distance", X, "[1,0,0]"),
    ("frobnicate",),
    ("verify", "nonsense"),
    ("roll", "simulate", "--ratio", "3", "--steps", "0"),
])
def test_usage_errors_exit_two(capsys, argv):
    assert main(list(argv)) == 2


def test_outputs_parse_back(capsys):
    _, out, _ = run(capsys, "triple", "complete", X, Y)
    z = json.dumps(out["z"])
    code, out2, _ = run(capsys, "triple", "validate", X, Y, z)
    assert code == 0 and out2 == {"valid": True}


def test_payload_from_file_and_stdin(capsys, tmp_path, monkeypatch):
    path = tmp_path / "x.json"
    path.write_text(X)
    assert run(capsys, "distance", f"@{path}", Y)[1] == {"distance": 2}
    import io
    monkeypatch.setattr(sys, "stdin", io.StringIO(Y))
    assert run(capsys, "distance", X, "-")[1] == {"distance": 2}


def test_pretty_format(capsys):
    main(["--format", "pretty", "distance", X, Y])
    assert capsys.readouterr().out == '{\n  "distance": 2\n}\n'


def test_roll_simulate_csv(capsys, tmp_path):
    out_file = tmp_path / "traj.csv"
    code, out, _ = run(capsys, "roll", "simulate", "--ratio", "3", "--steps", "50", "--out", str(out_file))
    assert code == 0 and out["rows"] == 51
    assert out["max_abs_quadratic_form"] <= 1e-12
    with open(out_file) as fh:
        rows = list(csv.reader(fh))
    assert rows[0][:2] == ["theta", "contact_x"] and len(rows[0]) == 15
    assert len(rows) == 52


def test_verify_report_and_determinism(capsys, monkeypatch):
    code, out, _ = run(capsys, "verify", "hexagon", "--seed", "7", "--samples", "5")
    assert code == 0 and out["suite"] == "hexagon" and out["seed"] == 7
    assert {"check", "samples", "status", "worst_residual_or_counterexample"} <= set(out["checks"][0])
    main(["verify", "algebra", "--seed", "3", "--samples", "20"])
    first = capsys.readouterr().out
    main(["verify", "algebra", "--seed", "3", "--samples", "20"])
    assert capsys.readouterr().out == first
    monkeypatch.setenv("G2ROLL_SEED", "3")
    main(["verify", "algebra", "--samples", "20"])
    assert capsys.readouterr().out == first


def test_verify_ratio(capsys):
    code, out, _ = run(capsys, "verify", "ratio", "--samples", "50")
    checks = {c["check"]: c for c in out["checks"]}
    assert code == 0
    assert checks["ratio.defect_R3"]["worst_residual_or_counterexample"] <= 1e-12
    assert min(checks["ratio.defect_other_R"]["worst_residual_or_counterexample"].values()) > 0.1


@pytest.mark.parametrize("suite", ["algebra", "incidence", "torsor", "quantization"])
def test_verify_suites_small(capsys, suite):
    code, out, _ = run(capsys, "verify", suite, "--seed", "1", "--samples", "4")
    assert code == 0 and out["status"] == "pass"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "g2roll", "distance", X, Y],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout) == {"distance": 2}
