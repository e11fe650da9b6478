"""Command line behavior: argument handling, config files, output, errors."""

import json
import subprocess
import sys

import pytest

from relaysec import Scheme
from relaysec.cli import main, parse_config


def run_cli(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def csv_rows(text):
    lines = text.strip().splitlines()
    return lines[0], [line.split(",") for line in lines[1:]]


class TestAnalytic:
    def test_unit_point(self, capsys):
        rc, out, err = run_cli(capsys, "analytic", "--mer-db", "0", "--relays", "1")
        assert rc == 0 and err == ""
        header, rows = csv_rows(out)
        assert header.startswith("scheme,relay_count,mer_db")
        assert [r[0] for r in rows] == ["direct", "maxmin", "proposed"]
        assert float(rows[0][6]) == 0.5
        assert float(rows[1][6]) == pytest.approx(2 / 3, rel=1e-9)

    def test_exact_line(self, capsys):
        rc, out, _ = run_cli(
            capsys, "analytic", "--mer-db", "0", "--relays", "1", "--scheme", "maxmin", "--seed", "123"
        )
        assert rc == 0
        assert out.splitlines()[1] == "maxmin,1,0,1,1,1,0.6666666667,,,,0,123"

    def test_five_db_direct(self, capsys):
        rc, out, _ = run_cli(capsys, "analytic", "--mer-db", "5", "--relays", "1", "--scheme", "direct")
        _, rows = csv_rows(out)
        se = 10 ** -0.5
        assert float(rows[0][6]) == pytest.approx(se / (1 + se), rel=1e-9)

    def test_scheme_list_in_one_flag(self, capsys):
        rc, out, _ = run_cli(
            capsys, "analytic", "--mer-db", "0", "--relays", "2", "--scheme", "proposed,direct"
        )
        assert rc == 0
        _, rows = csv_rows(out)
        assert [r[0] for r in rows] == ["direct", "proposed"]

    def test_missing_mer_db(self, capsys):
        rc, out, err = run_cli(capsys, "analytic", "--relays", "1")
        assert rc == 1 and out == ""
        assert err.startswith("error:") and "--mer-db" in err

    def test_missing_relays(self, capsys):
        rc, _, err = run_cli(capsys, "analytic", "--mer-db", "0")
        assert rc == 1 and "--relays" in err

    def test_unknown_scheme(self, capsys):
        rc, _, err = run_cli(capsys, "analytic", "--mer-db", "0", "--relays", "1", "--scheme", "bogus")
        assert rc == 1 and "bogus" in err and "proposed" in err

    def test_relay_scheme_with_no_relays(self, capsys):
        rc, _, err = run_cli(capsys, "analytic", "--mer-db", "0", "--relays", "0")
        assert rc == 1 and err.startswith("error:")

    def test_direct_only_with_no_relays(self, capsys):
        rc, out, _ = run_cli(capsys, "analytic", "--mer-db", "0", "--relays", "0", "--scheme", "direct")
        assert rc == 0
        _, rows = csv_rows(out)
        assert float(rows[0][6]) == 0.5


class TestSimulate:
    def test_point_with_intervals(self, capsys):
        rc, out, err = run_cli(
            capsys,
            "simulate", "--mer-db", "0", "--relays", "2", "--trials", "20000", "--seed", "7",
        )
        assert rc == 0 and err == ""
        _, rows = csv_rows(out)
        for r in rows:
            analytic, p_hat, lo, hi = map(float, (r[6], r[7], r[8], r[9]))
            assert lo <= p_hat <= hi
            assert abs(p_hat - analytic) < 0.02
            assert r[10] == "20000" and r[11] == "7"

    def test_zero_trials_rejected(self, capsys):
        rc, _, err = run_cli(capsys, "simulate", "--mer-db", "0", "--relays", "1", "--trials", "0")
        assert rc == 1 and "trial" in err

    def test_workers_do_not_change_output(self, capsys):
        argv = ["simulate", "--mer-db", "3", "--relays", "2", "--trials", "70000", "--seed", "19"]
        rc1, out1, _ = run_cli(capsys, *argv, "--workers", "1")
        rc2, out2, _ = run_cli(capsys, *argv, "--workers", "3")
        assert rc1 == rc2 == 0
        assert out1 == out2


class TestSweep:
    def test_mer_sweep_csv(self, capsys):
        rc, out, _ = run_cli(
            capsys,
            "sweep", "--var", "mer_db", "--from", "0", "--to", "10", "--step", "5", "--relays", "2",
        )
        assert rc == 0
        _, rows = csv_rows(out)
        assert len(rows) == 9
        assert [r[2] for r in rows[::3]] == ["0", "5", "10"]

    def test_relay_sweep_json(self, capsys):
        rc, out, _ = run_cli(
            capsys,
            "sweep", "--var", "relay_count", "--from", "1", "--to", "4", "--step", "1",
            "--mer-db", "5", "--scheme", "proposed", "--format", "json",
        )
        assert rc == 0
        decoded = json.loads(out)
        assert [d["relay_count"] for d in decoded] == [1, 2, 3, 4]
        probs = [d["analytic"] for d in decoded]
        assert probs == sorted(probs, reverse=True)
        assert all(d["mc_p_hat"] is None for d in decoded)

    def test_missing_var(self, capsys):
        rc, _, err = run_cli(capsys, "sweep", "--from", "0", "--to", "1", "--step", "1", "--relays", "1")
        assert rc == 1 and "--var" in err

    def test_missing_bounds(self, capsys):
        rc, _, err = run_cli(capsys, "sweep", "--var", "mer_db", "--relays", "1")
        assert rc == 1 and "--from" in err and "--to" in err and "--step" in err

    def test_mer_sweep_needs_fixed_relays(self, capsys):
        rc, _, err = run_cli(capsys, "sweep", "--var", "mer_db", "--from", "0", "--to", "1", "--step", "1")
        assert rc == 1 and "--relays" in err

    def test_relay_sweep_needs_fixed_mer(self, capsys):
        rc, _, err = run_cli(
            capsys, "sweep", "--var", "relay_count", "--from", "1", "--to", "2", "--step", "1"
        )
        assert rc == 1 and "--mer-db" in err

    def test_out_file(self, capsys, tmp_path):
        dest = tmp_path / "fig.csv"
        rc, out, _ = run_cli(
            capsys,
            "sweep", "--var", "mer_db", "--from", "0", "--to", "5", "--step", "5",
            "--relays", "1", "--out", str(dest),
        )
        assert rc == 0 and out == ""
        text = dest.read_text(encoding="utf-8")
        assert text.startswith("scheme,") and len(text.strip().splitlines()) == 7


class TestConfig:
    def test_parse_types_and_comments(self, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text(
            "# base point\n"
            "mer_db = 5.0\n"
            "relay_count = 2   # fixed M\n"
            "\n"
            "schemes = maxmin,proposed\n"
            "trials = 1000\n"
            "seed = 9\n",
            encoding="utf-8",
        )
        parsed = parse_config(cfg)
        assert parsed == {
            "mer_db": 5.0,
            "relay_count": 2,
            "schemes": (Scheme.MAX_MIN, Scheme.PROPOSED),
            "trials": 1000,
            "seed": 9,
        }

    def test_config_supplies_defaults(self, capsys, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("mer_db = 0\nrelay_count = 1\nseed = 123\n", encoding="utf-8")
        rc, out, _ = run_cli(capsys, "analytic", "--config", str(cfg), "--scheme", "maxmin")
        assert rc == 0
        assert out.splitlines()[1] == "maxmin,1,0,1,1,1,0.6666666667,,,,0,123"

    def test_flags_override_config(self, capsys, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("mer_db = 5\nrelay_count = 1\n", encoding="utf-8")
        rc, out, _ = run_cli(
            capsys, "analytic", "--config", str(cfg), "--mer-db", "0", "--scheme", "direct"
        )
        assert rc == 0
        _, rows = csv_rows(out)
        assert float(rows[0][6]) == 0.5  # flag value 0 dB, not the config's 5

    def test_config_drives_sweep(self, capsys, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text(
            "variable = relay_count\nstart = 1\nstop = 3\nstep = 1\nmer_db = 5\n",
            encoding="utf-8",
        )
        rc, out, _ = run_cli(capsys, "sweep", "--config", str(cfg), "--scheme", "direct")
        assert rc == 0
        _, rows = csv_rows(out)
        assert [r[1] for r in rows] == ["1", "2", "3"]

    def test_bad_line_reports_position(self, capsys, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("mer_db = 0\nrelay_count = 1\nnonsense line\n", encoding="utf-8")
        rc, _, err = run_cli(capsys, "analytic", "--config", str(cfg))
        assert rc == 1 and ":3:" in err

    def test_unknown_key_rejected(self, capsys, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("mer_db = 0\nrelay_count = 1\nwidgets = 4\n", encoding="utf-8")
        rc, _, err = run_cli(capsys, "analytic", "--config", str(cfg))
        assert rc == 1 and "widgets" in err

    def test_bad_value_reports_key(self, capsys, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("trials = lots\n", encoding="utf-8")
        rc, _, err = run_cli(capsys, "simulate", "--mer-db", "0", "--relays", "1", "--config", str(cfg))
        assert rc == 1 and "trials" in err

    def test_missing_config_file(self, capsys, tmp_path):
        rc, _, err = run_cli(capsys, "analytic", "--mer-db", "0", "--relays", "1",
                             "--config", str(tmp_path / "absent.cfg"))
        assert rc == 1 and err.startswith("error:")


class TestEntryPoint:
    def test_module_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "relaysec", "analytic", "--mer-db", "0", "--relays", "1"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert proc.stdout.startswith("scheme,")

    def test_help_mentions_subcommands(self):
        proc = subprocess.run(
            [sys.executable, "-m", "relaysec", "--help"], capture_output=True, text=True
        )
        assert proc.returncode == 0
        for word in ("analytic", "simulate", "sweep"):
            assert word in proc.stdout
