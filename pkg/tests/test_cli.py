import json
import subprocess
import sys

from qhess import cli
from qhess.symfunc import SymFunc
from qhess.verify import CheckReport


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_poincare_text(capsys):
    code, out, _ = run_cli(capsys, "poincare", "3,3,3")
    assert code == 0
    assert out.strip() == "(1+2q+2q^2+q^3) * h[3]"


def test_poincare_json_round_trips_byte_identical(capsys):
    code, out, _ = run_cli(
        capsys, "poincare", "n=4; I=1,2; h=2,4,4", "--format", "json"
    )
    assert code == 0
    line = out.strip()
    assert json.dumps(json.loads(line), separators=(",", ":")) == line
    data = json.loads(line)
    assert data["method"] == "general"
    assert data["dimension"] == 3
    assert data["fixed_points"] == 12
    assert data["value"]["terms"][0] == {"partition": [4], "coeffs": ["1", "1", "1", "1"]}


def test_poincare_invalid_input_exits_2(capsys):
    code, _, err = run_cli(capsys, "poincare", "2,1,3")
    assert code == 2
    assert "non-monotone" in err


def test_poincare_algorithm_preconditions(capsys):
    code, _, err = run_cli(
        capsys, "poincare", "n=4; I=1,3; h=3,4,4", "--algorithm", "alg2"
    )
    assert code == 2
    assert "initial-segment" in err
    code, _, err = run_cli(
        capsys, "poincare", "n=4; I=1,2; h=2,4,4", "--algorithm", "alg1"
    )
    assert code == 2
    code, _, err = run_cli(capsys, "poincare", "1,2,3", "--algorithm", "admissible")
    assert code == 2
    assert "irreducible" in err


def test_poincare_bases(capsys):
    code, out, _ = run_cli(capsys, "poincare", "3,3,3", "--basis", "e")
    assert code == 0
    assert out.strip() == "(1+2q+2q^2+q^3) * e[3]"
    code, out, _ = run_cli(capsys, "poincare", "2,2", "--basis", "m")
    assert code == 0
    assert "m[1,1]" in out
    code, out, _ = run_cli(capsys, "poincare", "3,3,3", "--basis", "s")
    assert code == 0
    assert "s[" in out


def test_csf_text_and_e_basis(capsys):
    code, out, _ = run_cli(capsys, "csf", "n=4; I=1; h=4,4")
    assert code == 0
    assert out.strip() == "(1+q+q^2+q^3) * m[1,1,1,1]"
    code, out, _ = run_cli(capsys, "csf", "n=5; I=1,2; h=2,5,5", "--basis", "e")
    assert code == 0
    assert out.strip() == "(1+q+q^2+q^3+q^4) * e[5] + (q+q^2+q^3) * e[4,1]"


def test_csf_bound_exit_2(capsys):
    code, _, err = run_cli(capsys, "csf", "n=9; I=; h=9")
    assert code == 2
    assert "bound" in err


def test_csf_mismatch_exits_1(capsys, monkeypatch):
    from qhess import engine as engine_mod
    from qhess.qpoly import QPoly

    real = engine_mod.poincare_general
    monkeypatch.setattr(
        cli._engine,
        "poincare_general",
        lambda h: real(h).scale(QPoly((0, 1))),
    )
    code, _, err = run_cli(capsys, "csf", "2,3,3", "--basis", "e")
    assert code == 1
    assert "MISMATCH" in err


def test_expand_file_and_stdin(tmp_path, capsys, monkeypatch):
    f = SymFunc.term((2, 1), 1, "h")
    path = tmp_path / "f.json"
    path.write_text(json.dumps(f.to_json()))
    code, out, _ = run_cli(capsys, "expand", str(path), "--to", "s")
    assert code == 0
    data = json.loads(out)
    assert data["basis"] == "s"
    assert [t["partition"] for t in data["terms"]] == [[3], [2, 1]]

    import io

    monkeypatch.setattr(sys, "stdin", io.StringIO(json.dumps(f.to_json())))
    code, out, _ = run_cli(capsys, "expand", "-", "--to", "m")
    assert code == 0
    assert json.loads(out)["basis"] == "m"


def test_expand_bad_json_exits_2(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{nope")
    code, _, err = run_cli(capsys, "expand", str(path))
    assert code == 2
    code, _, err = run_cli(capsys, "expand", str(tmp_path / "missing.json"))
    assert code == 2


def test_verify_pass_and_json(capsys):
    code, out, _ = run_cli(capsys, "verify", "modular-law", "--max-n", "4")
    assert code == 0
    assert out.startswith("PASS modular-law")
    code, out, _ = run_cli(
        capsys, "verify", "two-level", "cap-first", "--max-n", "5", "--format", "json"
    )
    assert code == 0
    reports = json.loads(out)
    assert [r["check"] for r in reports] == ["two-level", "cap-first"]
    assert all(r["status"] == "pass" for r in reports)


def test_verify_jobs_flag(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "three-way", "--max-n", "4", "--jobs", "2"
    )
    assert code == 0
    assert out.startswith("PASS three-way")


def test_verify_unknown_check_exits_2(capsys):
    code, _, err = run_cli(capsys, "verify", "bogus")
    assert code == 2
    assert "unknown check" in err


def test_verify_failure_exits_1(capsys, monkeypatch):
    failing = CheckReport("sw", "fail", 1, 0.0, witness={"input": "2,2"})
    monkeypatch.setattr(cli, "run_checks", lambda *a, **k: [failing])
    code, out, _ = run_cli(capsys, "verify", "sw")
    assert code == 1
    assert "FAIL sw" in out


def test_conjecture_subcommand(capsys):
    code, out, _ = run_cli(capsys, "conjecture-h2", "--max-n", "6")
    assert code == 0
    assert out.startswith("PASS conjecture-h2")


def test_enumerate(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "3")
    assert code == 0
    assert out.splitlines() == ["1,2,3", "1,3,3", "2,2,3", "2,3,3", "3,3,3"]
    code, out, _ = run_cli(capsys, "enumerate", "3", "--kind", "generalized")
    assert code == 0
    assert len(out.splitlines()) == 10
    code, out, _ = run_cli(capsys, "enumerate", "4", "--domain", "1,2")
    assert code == 0
    assert all(line.startswith("n=4; I=1,2;") for line in out.splitlines())
    code, out, _ = run_cli(capsys, "enumerate", "4", "--domain", "")
    assert code == 0
    assert out.strip() == "n=4; I=; h=4"
    code, _, err = run_cli(capsys, "enumerate", "15")
    assert code == 2
    assert "bound" in err


def test_usage_error_exits_2(capsys):
    assert cli.main([]) == 2
    assert cli.main(["poincare"]) == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "qhess", "poincare", "3,4,4,4"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "h[4]" in proc.stdout
