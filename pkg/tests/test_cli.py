from __future__ import annotations

import json
import subprocess
import sys

import pytest

from braid3.cli import run


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_conjugate_true(capsys):
    code, out, _ = call(capsys, "conjugate", "s1^3 s2^4 s1^5 s2^-1", "s1^3 s2^6 s1^3 s2^-1")
    assert (code, out) == (0, "conjugate: true\n")


def test_conjugate_false_exit_one(capsys):
    code, out, _ = call(capsys, "conjugate", "s1^5 s2^2 s1^3 s2^-1", "s1^5 s2^-1 s1^3 s2^2")
    assert (code, out) == (1, "conjugate: false\n")
    code, out, _ = call(capsys, "conjugate", "--format", "json", "1", "2")
    assert json.loads(out) == {"conjugate": True}


def test_classify(capsys):
    code, out, _ = call(capsys, "classify", "s1^5 s2^1")
    assert code == 0 and out.startswith("case (1)") and "T(2,5)" in out
    code, out, _ = call(capsys, "classify", "--format", "json", "s1^3 s2^-2 s1^2 s2^-1")
    payload = json.loads(out)
    assert payload["case"] == 3 and payload["transversally_nonsimple"] is True
    code, out, _ = call(capsys, "classify", "--flype-bound", "4", "s1^2 s2^2")
    assert code == 0 and out.startswith("case (2)")


def test_normalize_and_invariants(capsys):
    assert call(capsys, "normalize", "s1^1 s2^1 s1^1")[1] == "D^1\n"
    code, out, _ = call(capsys, "normalize", "--format", "json", "s1^-1")
    assert json.loads(out)["inf"] == -1
    code, out, _ = call(capsys, "invariants", "1 1 1 2")
    assert "jones: q^2 + q^6 - q^8" in out and "determinant: 3" in out
    code, out, _ = call(capsys, "invariants", "--format", "json", "1 1")
    assert json.loads(out)["alexander"] is None


def test_atlas_outputs(capsys):
    code, out, _ = call(capsys, "atlas", "--max-crossings", "12", "--format", "csv")
    assert code == 0 and len(out.splitlines()) == 21
    code, out, _ = call(capsys, "atlas", "--max-crossings", "10", "--names", "bundled")
    assert "10n16" in out and out.splitlines()[-1] == "6 rows"
    code, out, _ = call(capsys, "atlas", "--max-crossings", "8", "--format", "json")
    assert len(json.loads(out)) == 1


def test_verify_table1(capsys):
    code, out, _ = call(capsys, "verify-table1")
    assert code == 0 and out.splitlines()[-1] == "RESULT: PASS"


@pytest.mark.parametrize("argv", [
    ["normalize", "s1^0"],
    ["conjugate", "s1^x", "s1^1"],
    ["classify", "s3^1"],
    ["atlas", "--max-crossings", "6"],
    ["atlas", "--max-crossings", "12", "--names", "/nonexistent.csv"],
    ["invariants", "--strands", "2", "s2^1"],
])
def test_input_errors_exit_two(capsys, argv):
    code, out, err = call(capsys, *argv)
    assert code == 2 and out == "" and err.startswith("braid3: error:")


def test_usage_errors_exit_two(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["frobnicate"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        run(["atlas"])
    assert exc.value.code == 2


def test_module_entry_point_is_byte_deterministic():
    argv = [sys.executable, "-m", "braid3", "atlas", "--max-crossings", "12", "--format", "json"]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    assert first == second and first.startswith(b"[")
