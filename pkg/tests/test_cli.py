import json

import pytest

from gpi import cli, verify
from gpi.algebra import builtin, dump_algebra
from gpi.engine import VerificationError


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_codim(capsys):
    assert run(capsys, "codim", "--algebra", "ut2_self", "-n", "1") == (0, "gc_1 = 5\n", "")


def test_codim_json(capsys):
    code, out, _ = run(capsys, "codim", "--algebra", "ut2_D", "-n", "2", "--json")
    assert code == 0
    assert json.loads(out) == {"algebra": "ut2_D", "gc": 4 + 2, "n": 2}


def test_free_algebra(capsys):
    code, out, _ = run(capsys, "codim", "--algebra", "free(2)", "-n", "2")
    assert (code, out) == (0, "gc_2 = 16\n")


def test_cocharacter_both_pipelines(capsys):
    code, out, _ = run(capsys, "cocharacter", "--algebra", "ut2_D", "-n", "2", "--pipeline", "both")
    assert code == 0
    assert "gc_2 = 6" in out
    assert out.rstrip().endswith("pipelines agree")


def test_cocharacter_json(capsys):
    code, out, _ = run(capsys, "cocharacter", "--algebra", "ut2_self", "-n", "2", "--json")
    doc = json.loads(out)
    assert code == 0
    assert doc["gc"] == 10


def test_hilbert_closed_form(capsys):
    code, out, _ = run(capsys, "hilbert", "--algebra", "ut2_D", "-k", "1", "-N", "3", "--closed-form", "ut2_D")
    assert code == 0
    assert out.splitlines() == ["1: 3", "2: 4", "3: 5", "MATCH"]


def test_check_identity(capsys):
    code, out, _ = run(capsys, "check-identity", "--algebra", "ut2_self", "--poly", "w[1] x1 w[1]")
    assert (code, out) == (0, "IDENTITY\n")
    code, out, _ = run(capsys, "check-identity", "--algebra", "ut2_self", "--poly", "x1 x2 - x2 x1")
    assert code == 0
    assert out.startswith("NOT AN IDENTITY\nwitness: ")


def test_capelli(capsys):
    code, out, _ = run(capsys, "capelli", "--algebra", "ut2_D", "-m", "4", "--generalized")
    assert code == 0
    assert "IDENTITY" in out and "NOT" not in out
    code, out, _ = run(capsys, "capelli", "--algebra", "matrix2", "-m", "2")
    assert "witness: x = e11, e12; y = e11, e11, e21" in out


def test_bound(capsys):
    code, out, _ = run(capsys, "bound", "--algebra", "ut2_D", "-n", "1")
    assert code == 0
    assert "(1)  3  12" in out


def test_envelope_check(capsys):
    code, out, _ = run(capsys, "envelope-check", "--algebra", "ut2_graded_D", "--poly", "y1 y2 - y2 y1", "-m", "2")
    assert (code, out) == (0, "HOLDS  given polynomial\n")


def test_algebra_from_file(tmp_path, capsys):
    path = tmp_path / "ut2.json"
    path.write_text(json.dumps(dump_algebra(builtin("ut2_D"))))
    assert run(capsys, "codim", "--algebra", str(path), "-n", "1")[:2] == (0, "gc_1 = 3\n")


def test_bad_inputs_exit_two(capsys, tmp_path):
    assert run(capsys, "codim", "--algebra", "nope", "-n", "1")[0] == 2
    assert run(capsys, "check-identity", "--algebra", "ut2_D", "--poly", "x1 +")[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    assert run(capsys, "codim", "--algebra", str(bad), "-n", "1")[0] == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["codim", "-n", "0"])
    assert exc.value.code == 2


def test_verification_failure_exits_one(capsys, monkeypatch):
    def broken(*args, **kwargs):
        raise VerificationError("trace mismatch")

    monkeypatch.setattr(cli, "cocharacter", broken)
    code, _, err = run(capsys, "cocharacter", "--algebra", "ut2_D", "-n", "2")
    assert code == 1
    assert "trace mismatch" in err


def test_verify_paper_subset(capsys):
    code, out, _ = run(capsys, "verify-paper", "--criteria", "8,9")
    assert code == 0
    assert out.rstrip().endswith("ALL PASS")


def test_verify_paper_reports_failure(capsys, monkeypatch):
    monkeypatch.setitem(verify.CRITERIA, 9, lambda: verify.CriterionResult(9, "forced", False))
    code, out, _ = run(capsys, "verify-paper", "--criteria", "9")
    assert code == 1
    assert "SOME CRITERIA FAILED" in out


def test_output_is_deterministic(capsys):
    first = run(capsys, "cocharacter", "--algebra", "ut2_self", "-n", "3")
    second = run(capsys, "cocharacter", "--algebra", "ut2_self", "-n", "3")
    assert first == second


def test_polynomial_from_file(tmp_path, capsys):
    path = tmp_path / "f.txt"
    path.write_text("x1 x2 x3 x4 - x1 x2 x4 x3 - x2 x1 x3 x4 + x2 x1 x4 x3\n")
    assert run(capsys, "check-identity", "--algebra", "ut2_F", "--poly", str(path))[:2] == (0, "IDENTITY\n")
