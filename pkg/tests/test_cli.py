from __future__ import annotations

import json
import subprocess
import sys

import pytest

from thetagroup5.cli import run


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_eta_mult_exact_bytes(capsys):
    code, out, _ = call(capsys, "eta-mult", "--matrix", "0 -1 1 0")
    assert code == 0 and out == '{"num":7,"den":4}\n'


def test_kernel_member(capsys):
    code, out, _ = call(capsys, "kernel", "--k", "5", "--matrix", "0 -1 1 0")
    assert code == 0 and out == '{"member":false}\n'
    code, out, _ = call(capsys, "kernel", "--k", "2", "--matrix", "0 -1 1 0", "--form", "G")
    assert json.loads(out) == {"member": True}


def test_eta_verify(capsys):
    code, out, _ = call(capsys, "eta-verify", "--matrix", "2 1 1 1", "--tau", "0.3+0.8i", "--prec", "128")
    assert code == 0 and float(json.loads(out)["residual"]) < 1e-25


def test_eta_verify_failure_exit(capsys):
    code, out, _ = call(capsys, "eta-verify", "--matrix", "2 1 1 1", "--tau", "0.3+0.8i", "--prec", "40")
    assert code == 2 and json.loads(out)["ok"] is False


def test_theta_eval_methods_agree(capsys):
    _, a, _ = call(capsys, "theta-eval", "--char", "1/5 9/5", "--v", "0", "--tau", "0+2i", "--prec", "128")
    _, b, _ = call(capsys, "theta-eval", "--char", "1/5 9/5", "--tau", "0+2i", "--method", "product")
    va, vb = json.loads(a)["value"], json.loads(b)["value"]
    assert va[:30] == vb[:30]


def test_negative_values_accepted(capsys):
    code, out, _ = call(capsys, "theta-eval", "--char", "-1/5 -9/5", "--tau", "-0.7+0.4i", "--v", "-0.1")
    assert code == 0
    code, out, _ = call(capsys, "sample", "--case", "-S", "--count", "2", "--seed", "3")
    assert code == 0 and json.loads(out)["case"] == "-S"


def test_transform(capsys):
    code, out, _ = call(capsys, "transform", "--matrix", "1 5 0 1", "--char", "1/5 1/5")
    data = json.loads(out)
    assert code == 0 and data["new_char"] == ["1/5", "-19/5"]
    assert set(data) >= {"new_char", "eta_cube", "extra_phase"}


def test_mult(capsys):
    _, out, _ = call(capsys, "mult", "--system", "F", "--matrix", "1 5 0 1")
    assert json.loads(out)["value"] == {"num": 2, "den": 5}
    _, out, _ = call(capsys, "mult", "--system", "F", "--matrix", "0 -1 1 0", "--k", "5")
    assert json.loads(out)["value"] == {"num": 1, "den": 1}


def test_cosets(capsys):
    _, out, _ = call(capsys, "cosets", "--group", "gamma1")
    data = json.loads(out)
    assert len(data["reps"]) == 30 and data["certificate"]["complete"]
    _, out, _ = call(capsys, "cosets", "--group", "gamma1", "--plain")
    assert out.splitlines()[27] == "5 12 2 5"
    code, _, _ = call(capsys, "cosets", "--group", "kernel")
    assert code == 64


def test_cusps(capsys):
    _, out, _ = call(capsys, "cusps", "--bound", "12")
    assert json.loads(out)["status"] == "decided"


def test_sample_deterministic(capsys):
    _, a, _ = call(capsys, "sample", "--case", "I", "--count", "5", "--seed", "1")
    _, b, _ = call(capsys, "--seed", "0", "sample", "--case", "I", "--count", "5", "--seed", "1")
    assert a == b


@pytest.mark.parametrize("argv,code", [
    (["bogus"], 64),
    (["eta-mult"], 64),
    (["eta-mult", "--matrix", "1 0 0 1", "--nope"], 64),
    (["eta-mult", "--matrix", "1 2 3 4"], 1),
    (["mult", "--system", "F", "--matrix", "1 1 0 1"], 1),
    (["theta-eval", "--char", "0 0", "--tau", "0-1i"], 1),
    (["verify", "--suite", "nonsense"], 64),
])
def test_exit_codes(capsys, argv, code):
    got, out, err = call(capsys, *argv)
    assert got == code and out == "" and err


def test_verify_subset(capsys):
    code, out, _ = call(capsys, "verify", "--suite", "eta,kernels", "--quiet")
    report = json.loads(out)
    assert code == 0 and report["ok"] and [c["id"] for c in report["checks"]] == [1, 2, 7]


def test_console_script_module():
    proc = subprocess.run([sys.executable, "-m", "thetagroup5", "eta-mult", "--matrix", "1 1 0 1"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout == '{"num":1,"den":12}\n'
