import json
import math
import re

import pytest

from sine_moments.arithmetic import _fnv1a64, a_m
from sine_moments.cli import cli_dispatch
from sine_moments.predictions import ShiftConfig, conjecture_rhs


def run(capsys, *argv):
    code = cli_dispatch(list(argv))
    out = capsys.readouterr().out
    return code, out


class TestFormats:
    def test_csv_shape(self, capsys):
        code, out = run(capsys, "predict", "--M", "1", "--mu", "0.3",
                        "--nu", "-0.2", "--aM", "1")
        assert code == 0
        lines = out.split("\r\n")
        assert lines[0] == "M,aM,method,coalescence_detected,value_re,value_im"
        assert lines[-1] == ""  # trailing CRLF
        cells = lines[1].split(",")
        expected = conjecture_rhs(ShiftConfig(1, [0.3], [-0.2]), 1.0).value
        assert float(cells[4]) == expected.real
        assert float(cells[5]) == expected.imag

    def test_seventeen_digit_round_trip(self, capsys):
        code, out = run(capsys, "arith", "aM", "--M", "2")
        value_cell = out.split("\r\n")[1].split(",")[3]
        assert float(value_cell) == a_m(2).value
        assert re.match(r"^0\.\d{16,17}$", value_cell)

    def test_manifest(self, tmp_path, capsys):
        csv_path = tmp_path / "out.csv"
        man_path = tmp_path / "run.json"
        code = cli_dispatch(["predict", "--M", "1", "--mu", "0.1", "--nu", "0.4",
                             "--aM", "1", "--out", str(csv_path),
                             "--manifest", str(man_path)])
        assert code == 0
        manifest = json.loads(man_path.read_text())
        csv_bytes = csv_path.read_bytes()
        assert manifest["checksum_fnv1a64"] == f"{_fnv1a64(csv_bytes):016x}"
        assert manifest["artifact_version"]
        # sorted keys in the serialized file
        raw = man_path.read_text()
        keys = re.findall(r'^  "([a-z_0-9]+)":', raw, re.M)
        assert keys == sorted(keys)


class TestExitCodes:
    def test_usage_error_unknown_flag(self, capsys):
        assert cli_dispatch(["predict", "--M", "1", "--mu", "0", "--nu", "0",
                             "--bogus", "1"]) == 2

    def test_usage_error_missing_required(self, capsys):
        assert cli_dispatch(["moment", "--M", "1"]) == 2

    def test_numeric_error(self, capsys):
        # coincident shifts make the permutation formula raise
        code = cli_dispatch(["cue", "exact", "--N", "16", "--M", "1",
                             "--mu", "0.1", "--nu", "0.1", "--formula", "perm"])
        assert code == 3

    def test_bad_real_list(self, capsys):
        assert cli_dispatch(["predict", "--M", "1", "--mu", "zap",
                             "--nu", "0"]) == 2


class TestConfigFile:
    def test_config_supplies_defaults_flags_override(self, tmp_path, capsys):
        conf = tmp_path / "conf.json"
        conf.write_text(json.dumps({"T0": 20.0, "T": 500.0}))
        code, out = run(capsys, "--config", str(conf), "moment", "--M", "1",
                        "--mu", "0", "--nu", "0", "--T", "800")
        assert code == 0
        row = out.split("\r\n")[1].split(",")
        assert float(row[1]) == 20.0   # from config file
        assert float(row[2]) == 800.0  # flag wins over file


class TestReproducibility:
    def test_mc_byte_identical(self, capsys):
        argv = ["cue", "mc", "--N", "6", "--M", "1", "--mu", "0.2",
                "--nu", "-0.1", "--samples", "200", "--seed", "42"]
        _, out1 = run(capsys, *argv)
        _, out2 = run(capsys, *argv)
        assert out1 == out2

    def test_threads_env_override(self, capsys, monkeypatch):
        argv = ["cue", "mc", "--N", "6", "--M", "1", "--mu", "0.2",
                "--nu", "-0.1", "--samples", "200", "--seed", "42",
                "--threads", "1"]
        _, base = run(capsys, *argv)
        monkeypatch.setenv("SINE_MOMENTS_THREADS", "4")
        _, threaded = run(capsys, *argv)
        assert base == threaded


class TestSubcommands:
    def test_scan(self, capsys):
        code, out = run(capsys, "scan", "--M", "1", "--mu", "0", "--nu", "0",
                        "--T-list", "500,1000")
        assert code == 0
        assert len(out.strip().split("\r\n")) == 3

    def test_cue_scale(self, capsys):
        code, out = run(capsys, "cue", "scale", "--N-list", "8,16", "--M", "1",
                        "--mu", "0.3", "--nu", "-0.2")
        assert code == 0
        rows = out.strip().split("\r\n")[1:]
        assert [r.split(",")[0] for r in rows] == ["8", "16"]

    def test_arith_d2_with_cache(self, tmp_path, capsys):
        cache = tmp_path / "sieve.bin"
        code1, out1 = run(capsys, "arith", "d2", "--T", "5000",
                          "--cache", str(cache))
        assert code1 == 0 and cache.exists()
        code2, out2 = run(capsys, "arith", "d2", "--T", "5000",
                          "--cache", str(cache))
        assert code2 == 0
        assert out1 == out2

    def test_cfkrs_both_modes(self, capsys):
        code, out = run(capsys, "cfkrs", "--t", "1e6", "--M", "1",
                        "--mu", "0.25", "--nu", "-0.25")
        assert code == 0
        rows = out.strip().split("\r\n")[1:]
        assert [r.split(",")[2] for r in rows] == ["zeta", "pole"]

    def test_verify_cue6(self, capsys):
        code, out = run(capsys, "verify", "cue6", "--M", "2", "--trials", "5",
                        "--seed", "7")
        assert code == 0
        rows = out.strip().split("\r\n")[1:]
        assert rows[-1].startswith("max,")
        assert float(rows[-1].split(",")[2]) < 1e-9
