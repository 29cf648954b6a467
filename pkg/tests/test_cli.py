import subprocess
import sys

import numpy as np
import pytest

from projlmo.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestVerify:
    def test_ball2_passes(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--set", "ball2 c=0,0 r=1", "--trials", "50",
            "--seed", "7",
        )
        assert code == 0
        assert "result: PASS" in out
        assert "[FAIL]" not in out

    def test_one_dim_simplex(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--set", "simplex n=1", "--trials", "25"
        )
        assert code == 0

    def test_invalid_box_is_usage_error(self, capsys):
        code, _, err = run_cli(capsys, "verify", "--set", "box l=1,0 u=0,1")
        assert code == 2
        assert "lower <= upper" in err

    def test_unknown_kind_is_usage_error(self, capsys):
        code, _, _ = run_cli(capsys, "verify", "--set", "frisbee r=1")
        assert code == 2

    def test_zero_trials_is_usage_error(self, capsys):
        code, _, _ = run_cli(
            capsys, "verify", "--set", "simplex n=2", "--trials", "0"
        )
        assert code == 2

    def test_jobs_do_not_change_output(self, capsys):
        args = ("verify", "--set", "ball1 r=1.5 n=3", "--trials", "40", "--seed", "3")
        _, serial, _ = run_cli(capsys, *args, "--jobs", "1")
        _, threaded, _ = run_cli(capsys, *args, "--jobs", "4")
        assert serial == threaded


class TestSweep:
    def test_rows_and_bound(self, capsys, tmp_path):
        out_path = tmp_path / "sweep.csv"
        code, _, _ = run_cli(
            capsys, "sweep", "--set", "ball2 c=2,2 r=1", "--x", "1,0",
            "--lambda-grid", "1:1e4:5", "--out", str(out_path),
        )
        assert code == 0
        lines = out_path.read_text().strip().splitlines()
        assert lines[0] == "lambda,gap,thm1_bound,eps_from_eq6"
        rows = np.array([[float(v) for v in ln.split(",")] for ln in lines[1:]])
        assert rows.shape == (5, 4)
        # gap decreases along the grid and respects the bound row-wise
        assert np.all(np.diff(rows[:, 1]) < 0)
        assert np.all(rows[:, 1] <= rows[:, 2] + 1e-9)
        # eps_from_eq6 must equal min(delta*mu, mu^2)/lambda
        mu = np.hypot(2.0, 2.0) + 1.0
        num = min(2.0 * mu, mu * mu)
        np.testing.assert_allclose(rows[:, 3], num / rows[:, 0], rtol=1e-15)

    def test_stdout_output(self, capsys):
        code, out, _ = run_cli(
            capsys, "sweep", "--set", "singleton p=1,1", "--x", "1,0",
            "--lambda-grid", "1:100:3",
        )
        assert code == 0
        rows = out.strip().splitlines()[1:]
        assert all(float(r.split(",")[1]) == 0.0 for r in rows)

    def test_bad_grid(self, capsys):
        code, _, _ = run_cli(
            capsys, "sweep", "--set", "simplex n=2", "--x", "1,0",
            "--lambda-grid", "nonsense",
        )
        assert code == 2


class TestLambdaStar:
    def test_square_search(self, capsys):
        code, out, _ = run_cli(
            capsys, "lambdastar", "--set", "polytope v=-1,-1;1,-1;-1,1;1,1",
            "--x", "0.5,-0.25",
        )
        assert code == 0
        assert "lambda_star: 4" in out
        assert "min_norm_match: true" in out

    def test_zero_budget_reports_not_exact(self, capsys):
        code, out, _ = run_cli(
            capsys, "lambdastar", "--set", "polytope v=-1,-1;1,-1;-1,1;1,1",
            "--x", "0.5,-0.25", "--max-doublings", "0",
        )
        assert code == 1
        assert "not yet exact" in out

    def test_requires_polytope(self, capsys):
        code, _, err = run_cli(
            capsys, "lambdastar", "--set", "ball2 c=0,0 r=1", "--x", "1,0"
        )
        assert code == 2
        assert "polytope" in err


class TestFw:
    def test_ball_demo(self, capsys):
        code, out, _ = run_cli(
            capsys, "fw", "--set", "ball2 c=0,0 r=1", "--target", "2,0",
            "--max-iter", "3000",
        )
        assert code == 0
        solution = [float(v) for v in out.splitlines()[2].split(": ")[1].split(",")]
        np.testing.assert_allclose(solution, [1.0, 0.0], atol=1e-4)

    def test_trace_csv(self, capsys, tmp_path):
        out_path = tmp_path / "trace.csv"
        code, _, _ = run_cli(
            capsys, "fw", "--set", "simplex n=3", "--target", "0,0,0",
            "--max-iter", "50", "--out", str(out_path),
        )
        assert code == 0
        lines = out_path.read_text().strip().splitlines()
        assert lines[0] == "k,objective,gap_estimate,epsilon"
        assert len(lines) == 51


class TestBench:
    def test_report(self, capsys):
        code, out, _ = run_cli(
            capsys, "bench", "--set", "ballinf r=1 n=4", "--trials", "50"
        )
        assert code == 0
        assert "approx_lmo/project median ratio" in out

    def test_zero_trials_rejected(self, capsys):
        code, _, _ = run_cli(
            capsys, "bench", "--set", "simplex n=2", "--trials", "0"
        )
        assert code == 2


class TestDeterminism:
    def test_verify_byte_identical(self, capsys):
        args = (
            "verify", "--set", "polytope v=0,0;1,0;0,1", "--trials", "30",
            "--seed", "9", "--jobs", "2",
        )
        _, first, _ = run_cli(capsys, *args)
        _, second, _ = run_cli(capsys, *args)
        assert first == second

    def test_sweep_byte_identical(self, capsys, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        base = ("sweep", "--set", "ball1 r=2 n=3", "--x", "0.3,-1,2")
        run_cli(capsys, *base, "--out", str(a))
        run_cli(capsys, *base, "--out", str(b))
        assert a.read_bytes() == b.read_bytes()


def test_console_entrypoint():
    proc = subprocess.run(
        [sys.executable, "-m", "projlmo.cli", "verify", "--set", "simplex n=2",
         "--trials", "10"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "result: PASS" in proc.stdout
