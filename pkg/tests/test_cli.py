"""Command-line contract: exit codes, report schemas, determinism."""

import json

import pytest

from padic_mub.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gauss_ring_oracle_pass(capsys):
    code, out, _ = run(capsys, "gauss-ring", "-p", "3", "-k", "1", "-l", "1",
                       "-a", "1", "-b", "0", "--oracle")
    assert code == 0
    assert "3^{1/2}" in out and "PASS" in out
    assert "1.73205080757" in out


def test_gauss_ring_rejects_p2(capsys):
    code, _, err = run(capsys, "gauss-ring", "-p", "2", "-k", "1", "-l", "1",
                       "-a", "1", "-b", "0")
    assert code == 2
    assert "p = 2" in err or "p != 2" in err


def test_gauss_ring_case2(capsys):
    code, out, _ = run(capsys, "gauss-ring", "-p", "3", "-k", "2", "-l", "2",
                       "-a", "3", "-b", "1")
    assert code == 0
    assert "closed 0 (case2)" in out


def test_gauss_integral_examples(capsys):
    code, out, _ = run(capsys, "gauss-integral", "-p", "3", "-r", "1",
                       "-a", "1", "-b", "0", "--oracle")
    assert code == 0 and "PASS" in out
    code, out, _ = run(capsys, "gauss-integral", "-p", "3", "-r", "1",
                       "-a", "0", "-b", "1/3")
    assert code == 0 and "closed 0" in out
    code, out, _ = run(capsys, "gauss-integral", "-p", "3", "-r", "2",
                       "-a", "0", "-b", "0")
    assert code == 0 and "3^{2}" in out


def test_gauss_integral_accepts_digit_strings(capsys):
    code, out, _ = run(capsys, "gauss-integral", "-p", "3", "-r", "1",
                       "-a", "2 2 0 0 *3^-1", "-b", "0", "--oracle")
    assert code == 0
    assert "a=8/3" in out


def test_mub_finite_pass_and_reject(capsys):
    code, out, _ = run(capsys, "mub-finite", "-p", "3", "-r", "2")
    assert code == 0 and "10 bases" in out
    code, out, _ = run(capsys, "mub-finite", "-p", "7", "-r", "1")
    assert code == 0 and "8 bases" in out
    code, _, err = run(capsys, "mub-finite", "-p", "6", "-r", "1")
    assert code == 2 and "not prime" in err
    code, _, err = run(capsys, "mub-finite", "-p", "2", "-r", "1")
    assert code == 2


def test_mub_padic_table_and_raise(capsys):
    code, out, _ = run(capsys, "mub-padic", "-p", "3", "-r", "1")
    assert code == 0
    assert "4 families" in out and "PASS" in out
    code, out, _ = run(capsys, "mub-padic", "-p", "3", "-r", "0")
    assert code == 0 and "raised from 0" in out


def test_mub_padic_p5(capsys):
    code, out, _ = run(capsys, "mub-padic", "-p", "5", "-r", "1")
    assert code == 0 and "6 families" in out


def test_fourier_ball_and_eigen(capsys):
    code, out, _ = run(capsys, "fourier-ball", "-p", "3", "-r", "1", "-z", "1/3")
    assert code == 0 and "PASS" in out
    code, out, _ = run(capsys, "eigen-check", "-p", "3", "-a", "1", "-b", "0",
                       "-c", "1/3")
    assert code == 0 and "8/3^2" in out


def test_sweep_operators_and_unknown_suite(capsys):
    code, out, _ = run(capsys, "sweep", "operators", "--seed", "7")
    assert code == 0 and "passed: True" in out
    with pytest.raises(SystemExit) as exc:
        main(["sweep", "not-a-suite"])
    assert exc.value.code == 2


def test_json_reports_are_deterministic(capsys):
    argv = ["mub-padic", "-p", "3", "-r", "1", "--format", "json"]
    code1, out1, _ = run(capsys, *argv)
    code2, out2, _ = run(capsys, *argv)
    assert code1 == code2 == 0
    assert out1 == out2
    payload = json.loads(out1)
    assert payload["schema"] == 1
    assert payload["config"]["command"] == "mub-padic"
    assert payload["config"]["p"] == 3


def test_json_floats_are_rounded(capsys):
    _, out, _ = run(capsys, "gauss-ring", "-p", "3", "-k", "1", "-l", "1",
                    "-a", "1", "-b", "0", "--oracle", "--format", "json")
    payload = json.loads(out)
    assert payload["numeric"] == 1.73205080757  # 12 significant digits


def test_csv_output(capsys):
    _, out, _ = run(capsys, "mub-padic", "-p", "3", "-r", "1", "--format", "csv")
    lines = out.strip().splitlines()
    assert lines[0] == "i,j,label_i,label_j,numeric,closed_exact,certified,deviation"
    assert len(lines) == 1 + 12 * 13 // 2


def test_out_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, _ = run(capsys, "mub-finite", "-p", "3", "-r", "1",
                       "--format", "json", "--out", str(target))
    assert code == 0
    payload = json.loads(target.read_text())
    assert payload["passed"] is True


def test_outdir_env(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("PADIC_MUB_OUTDIR", str(tmp_path))
    code, _, _ = run(capsys, "eigen-check", "-p", "3", "-a", "0", "-b", "1",
                     "-c", "1", "--format", "json", "--out", "eig.json")
    assert code == 0
    assert (tmp_path / "eig.json").exists()


def test_invalid_coefficient_is_exit_2(capsys):
    code, _, err = run(capsys, "gauss-integral", "-p", "3", "-r", "1",
                       "-a", "1 *5^0", "-b", "0")
    assert code == 2 and "error" in err
