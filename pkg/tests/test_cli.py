"""CLI contracts: formats, exit codes, config merging, goldens, figures."""

import json
import math
import os

import numpy as np
import pytest

from quarteig.cli import main
from quarteig.eigenfun import lambda_eval
from quarteig.params import ParamSet

GOLDEN_DIR = os.path.join(os.path.dirname(__file__), "golden")


def run_cli(args, capsys):
    code = main(args)
    out = capsys.readouterr()
    return code, out.out, out.err


class TestTabulate:
    def test_single_point_row(self, capsys):
        code, out, _ = run_cli(
            ["tabulate", "--i", "2", "--mu", "3", "--nu", "-1", "--jmax", "2", "--x", "1"],
            capsys,
        )
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == "i,j,mu,nu,x,value"
        row0 = lines[1].split(",")
        assert float(row0[5]) == pytest.approx((2.0 / 3.0) * math.exp(-1.0), rel=1e-15)

    def test_invalid_parameters_exit_2(self, capsys):
        code, _, err = run_cli(["tabulate", "--i", "3", "--mu", "2", "--nu", "1", "--x", "1"], capsys)
        assert code == 2
        assert "odd integer mu" in err

    def test_small_x_matches_asymptotic_row(self, capsys):
        code, out, _ = run_cli(
            ["tabulate", "--i", "2", "--mu", "3", "--nu", "1", "--jmax", "0", "--x", "1e-3"],
            capsys,
        )
        assert code == 0
        val = float(out.strip().split("\n")[1].split(",")[5])
        assert val == pytest.approx((4.0 / 3.0) * 1e3, rel=1e-2)

    def test_json_round_trip_bitwise(self, capsys, tmp_path):
        out_path = str(tmp_path / "tab.json")
        code, _, _ = run_cli(
            ["tabulate", "--i", "2", "--mu", "3", "--nu", "1", "--jmax", "3",
             "--xmin", "0.5", "--xmax", "4", "--xcount", "5", "--format", "json",
             "--output", out_path],
            capsys,
        )
        assert code == 0
        rows = json.load(open(out_path))["rows"]
        p = ParamSet.classify(3.0, 1.0)
        for r in rows:
            assert r["value"] == lambda_eval(r["i"], r["j"], p, r["x"])  # bitwise

    def test_csv_has_lf_endings_and_17_digits(self, capsys, tmp_path):
        out_path = str(tmp_path / "t.csv")
        run_cli(
            ["tabulate", "--i", "2", "--mu", "3", "--nu", "1", "--x", "0.1", "--jmax", "0",
             "--output", out_path],
            capsys,
        )
        raw = open(out_path, "rb").read()
        assert b"\r" not in raw
        value = raw.decode().strip().split("\n")[1].split(",")[5]
        assert float(value) == lambda_eval(2, 0, ParamSet.classify(3, 1), 0.1)


class TestGolden:
    @pytest.mark.parametrize("nu,fname", [(1, "tabulate_mu3_nu1.csv"), (-1, "tabulate_mu3_nu-1.csv")])
    def test_shipped_goldens(self, capsys, nu, fname):
        code, out, _ = run_cli(
            ["tabulate", "--i", "2", "--mu", "3", "--nu", str(nu), "--jmax", "4",
             "--xmin", "0.5", "--xmax", "5", "--xcount", "10"],
            capsys,
        )
        assert code == 0
        golden = open(os.path.join(GOLDEN_DIR, fname)).read().strip().split("\n")
        fresh = out.strip().split("\n")
        assert fresh[0] == golden[0]
        assert len(fresh) == len(golden)
        for got, want in zip(fresh[1:], golden[1:]):
            g, w = got.split(","), want.split(",")
            assert g[:5] == w[:5]
            assert float(g[5]) == pytest.approx(float(w[5]), rel=1e-12)


class TestPlotdata:
    def test_shape_and_header(self, capsys, tmp_path):
        out_path = str(tmp_path / "pd.csv")
        code, _, _ = run_cli(
            ["plotdata", "--i", "2", "--mu", "3", "--nu", "1", "--jmax", "4",
             "--xmin", "0.1", "--xmax", "10", "--xcount", "200", "--xspacing", "log",
             "--output", out_path],
            capsys,
        )
        assert code == 0
        lines = open(out_path).read().strip().split("\n")
        assert lines[0] == "x,L2_0,L2_1,L2_2,L2_3,L2_4"
        assert len(lines) == 201
        for ln in lines[1:]:
            assert all(np.isfinite(float(v)) for v in ln.split(","))

    def test_render_writes_figure(self, capsys, tmp_path):
        out_path = str(tmp_path / "pd.csv")
        code, _, _ = run_cli(
            ["plotdata", "--i", "2", "--mu", "3", "--nu", "1", "--jmax", "2",
             "--xmin", "0.5", "--xmax", "5", "--xcount", "20", "--output", out_path, "--render"],
            capsys,
        )
        assert code == 0
        png = str(tmp_path / "pd.png")
        assert os.path.exists(png) and os.path.getsize(png) > 1000


class TestVerifyCommand:
    def test_single_suite_passes(self, capsys, tmp_path):
        out_path = str(tmp_path / "rep.json")
        code, _, err = run_cli(
            ["verify", "--suite", "parity", "--output", out_path, "--no-timestamp"], capsys
        )
        assert code == 0
        rep = json.load(open(out_path))
        assert rep["suite"] == "parity"
        assert rep["summary"]["failed"] == 0
        assert "passed" in err

    def test_unsupported_parity_all_skipped(self, capsys, tmp_path):
        out_path = str(tmp_path / "rep42.json")
        code, _, _ = run_cli(
            ["verify", "--suite", "transform", "--mu", "4", "--nu", "2",
             "--output", out_path, "--no-timestamp"],
            capsys,
        )
        assert code == 0
        rep = json.load(open(out_path))
        assert rep["summary"]["skipped"] == len(rep["cases"]) > 0

    def test_forced_failure_exits_1(self, capsys, tmp_path):
        code, _, _ = run_cli(
            ["verify", "--suite", "eigen", "--mu", "3", "--nu", "1",
             "--selftest-perturb", "1e-6", "--output", str(tmp_path / "f.json")],
            capsys,
        )
        assert code == 1

    def test_render_report_figure(self, capsys, tmp_path):
        out_path = str(tmp_path / "rep.json")
        code, _, _ = run_cli(
            ["verify", "--suite", "parity", "--output", out_path, "--render"], capsys
        )
        assert code == 0
        assert os.path.getsize(str(tmp_path / "rep.png")) > 1000

    def test_unknown_suite_exit_2(self, capsys):
        code, _, err = run_cli(["verify", "--suite", "bogus"], capsys)
        assert code == 2
        assert "unknown suite" in err


class TestKernelTransformGram:
    def test_kernel_grid(self, capsys):
        code, out, _ = run_cli(
            ["kernel", "--mu", "3", "--nu", "1", "--tcount", "5"], capsys
        )
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == "t,G" and len(lines) == 6

    def test_kernel_even_parity_exit_2(self, capsys):
        code, _, _ = run_cli(["kernel", "--mu", "4", "--nu", "2", "--tcount", "3"], capsys)
        assert code == 2

    def test_transform_column(self, capsys):
        code, out, _ = run_cli(
            ["transform", "--i", "2", "--mu", "3", "--nu", "1", "--j", "1", "--x", "1"],
            capsys,
        )
        assert code == 0
        row = out.strip().split("\n")[1].split(",")
        assert float(row[1]) == pytest.approx(-float(row[2]), rel=1e-4)

    def test_gram_explore_non_ic1(self, capsys):
        code, out, _ = run_cli(
            ["gram", "--mu", "2.5", "--nu", "0.5", "--jmax", "1"], capsys
        )
        assert code == 0
        rows = out.strip().split("\n")
        assert len(rows) == 3


class TestConfigMerging:
    def test_flags_win_over_config(self, capsys, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"mu": 5.0, "nu": 1.0, "jmax": 1, "x": 2.0, "i": 2}))
        code, out, _ = run_cli(
            ["--config", str(cfg), "tabulate", "--mu", "3"], capsys
        )
        assert code == 0
        row = out.strip().split("\n")[1].split(",")
        assert row[2] == "3"  # flag beat the config file
        assert row[4] == "2"  # config supplied the grid point

    def test_bad_config_rejected(self, capsys, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text("[1, 2]")
        code, _, err = run_cli(["--config", str(cfg), "tabulate"], capsys)
        assert code == 2
