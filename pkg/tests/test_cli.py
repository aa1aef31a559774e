import csv
import io
import json
import math
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from movsig.cli import SWEEP_HEADER, deg2rad, main, rad2deg
from movsig.experiments import db_to_linear


def run(argv, capsys):
    try:
        code = main(argv)
    except SystemExit as exc:
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


def read_csv(text):
    rows = list(csv.reader(io.StringIO(text)))
    return rows[0], [[float(v) for v in r] for r in rows[1:]]


class TestFreqOpt:
    def test_exact(self, capsys):
        code, out, _ = run(["freq-opt", "--n", "2", "--theta1", "90", "--theta2", "0", "--band", "1.0:1.8"], capsys)
        assert code == 0
        assert "1.500000 f_A" in out and "exact: yes" in out

    def test_json(self, capsys):
        code, out, _ = run(["freq-opt", "--n", "4", "--theta1", "90", "--theta2", "0", "--format", "json"], capsys)
        assert code == 0
        rep = json.loads(out)
        assert rep["exact"] is True
        assert rep["frequency_over_fa"] == pytest.approx(1.25)
        assert rep["orthogonal_frequencies_over_fa"] == pytest.approx([1.25, 1.5, 1.75])
        assert rep["residual"] <= 1e-9 * 4

    def test_degenerate(self, capsys):
        code, out, _ = run(["freq-opt", "--n", "2", "--theta1", "30", "--theta2", "30"], capsys)
        assert code == 0
        assert "degenerate" in out and "exact: no" in out

    def test_spacing(self, capsys):
        code, out, _ = run(["freq-opt", "--n", "2", "--spacing", "0.0299792458", "--theta1", "90", "--theta2", "0",
                            "--format", "json"], capsys)
        assert code == 0
        assert json.loads(out)["frequency_hz"] == pytest.approx(1.5e10)

    @pytest.mark.parametrize("argv", [
        ["freq-opt", "--theta1", "30", "--theta2", "10"],
        ["freq-opt", "--n", "2", "--theta1", "30"],
        ["freq-opt", "--n", "2", "--theta1", "30", "--theta2", "10", "--band", "1.8:1.0"],
        ["freq-opt", "--n", "2", "--theta1", "30", "--theta2", "10", "--band", "abc"],
        ["freq-opt", "--n", "0", "--theta1", "30", "--theta2", "10"],
        ["freq-opt", "--n", "2", "--theta1", "95", "--theta2", "10"],
        ["freq-opt", "--n", "2", "--theta1", "30", "--theta2", "10", "--fa", "-1"],
        [],
        ["bogus"],
    ])
    def test_usage_errors(self, argv, capsys):
        code, _, err = run(argv, capsys)
        assert code == 2
        assert err


class TestRegion:
    def test_mac_orthogonal(self, capsys):
        code, out, _ = run(["region", "--channel", "mac", "--snr-db", "10", "--n", "4", "--orthogonal"], capsys)
        assert code == 0
        header, rows = read_csv(out)
        assert header == ["r1", "r2"]
        r = math.log2(41)
        assert np.allclose(rows, [[r, 0], [r, r], [0, r], [0, 0]], rtol=0, atol=1e-12)
        assert r == pytest.approx(5.3576, abs=1e-4)

    def test_mac_explicit_pentagon(self, capsys):
        code, out, _ = run(["region", "--channel", "mac", "--snr-db", "10", "--n", "4", "--theta1", "20",
                            "--theta2", "20", "--freq", "1.0"], capsys)
        assert code == 0
        _, rows = read_csv(out)
        assert len(rows) == 5
        assert max(a + b for a, b in rows) == pytest.approx(math.log2(81), abs=1e-9)

    def test_bc_orthogonal(self, capsys):
        code, out, _ = run(["region", "--channel", "bc", "--snr-db", "10", "--n", "2", "--orthogonal"], capsys)
        assert code == 0
        _, rows = read_csv(out)
        assert len(rows) == 202
        assert rows[0] == pytest.approx([math.log2(21), 0])
        sums = [a + b for a, b in rows]
        assert max(sums) == pytest.approx(2 * math.log2(11), abs=1e-9)
        assert sums.index(max(sums)) == 100
        assert max(sums) == pytest.approx(6.9189, abs=1e-4)

    def test_bc_explicit_orthogonal_frequency(self, capsys):
        code, out, _ = run(["region", "--channel", "bc", "--snr-db", "10", "--n", "2", "--theta1", "90",
                            "--theta2", "0", "--freq", "1.5", "--grid", "3"], capsys)
        assert code == 0
        assert len(read_csv(out)[1]) == 4

    def test_bc_non_orthogonal_rejected(self, capsys):
        code, _, err = run(["region", "--channel", "bc", "--snr-db", "10", "--n", "2", "--theta1", "10",
                            "--theta2", "0", "--freq", "1.0"], capsys)
        assert code == 2 and "orthogonal" in err

    @pytest.mark.parametrize("argv", [
        ["region", "--channel", "bc", "--snr-db", "10", "--n", "2", "--orthogonal", "--grid", "1"],
        ["region", "--channel", "mac", "--snr-db", "10", "--n", "2"],
        ["region", "--channel", "xyz", "--snr-db", "10", "--n", "2", "--orthogonal"],
        ["region", "--channel", "mac", "--snr-db", "ten", "--n", "2", "--orthogonal"],
        ["region", "--channel", "mac", "--snr-db", "10", "--n", "2", "--theta1", "10", "--theta2", "0",
         "--freq", "-1"],
    ])
    def test_usage_errors(self, argv, capsys):
        code, _, err = run(argv, capsys)
        assert code == 2 and err

    def test_out_file(self, tmp_path, capsys):
        path = tmp_path / "r.csv"
        code, out, _ = run(["region", "--channel", "mac", "--snr-db", "0", "--n", "1", "--orthogonal",
                            "--out", str(path)], capsys)
        assert code == 0 and out == ""
        assert path.read_text().startswith("r1,r2\n")


class TestSweep:
    def test_inline(self, capsys):
        code, out, _ = run(["sweep", "--snr-db", "0,10", "--n", "2", "--trials", "50", "--seed", "1"], capsys)
        assert code == 0
        header, rows = read_csv(out)
        assert header == SWEEP_HEADER
        assert [r[:2] for r in rows] == [[0, 2], [10, 2]]
        assert all(r[5] == 50 for r in rows)
        assert out.endswith("\n") and "\r" not in out

    def test_config_file(self, tmp_path, capsys):
        cfg = tmp_path / "c.json"
        cfg.write_text(json.dumps({"snr_db": [5], "n_antennas": [2, 4], "trials": 20, "seed": 3,
                                   "band": [1.0, 1.8], "f_a": 1e10, "d1": 10, "d2": 10}))
        code, out, _ = run(["sweep", "--config", str(cfg)], capsys)
        assert code == 0
        assert len(read_csv(out)[1]) == 2
        # flags override the file
        code, out2, _ = run(["sweep", "--config", str(cfg), "--trials", "10"], capsys)
        assert read_csv(out2)[1][0][5] == 10

    def test_determinism(self, tmp_path, capsys):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        base = ["sweep", "--snr-db", "10", "--n", "2,4", "--trials", "300", "--seed", "42"]
        assert run(base + ["--out", str(a)], capsys)[0] == 0
        assert run(base + ["--out", str(b), "--workers", "2"], capsys)[0] == 0
        assert a.read_bytes() == b.read_bytes()

    def test_missing_config(self, tmp_path, capsys):
        code, _, err = run(["sweep", "--config", str(tmp_path / "nope.json")], capsys)
        assert code == 1 and err

    def test_malformed_config(self, tmp_path, capsys):
        cfg = tmp_path / "c.json"
        cfg.write_text("{not json")
        assert run(["sweep", "--config", str(cfg)], capsys)[0] == 1
        cfg.write_text(json.dumps({"trials": 0}))
        assert run(["sweep", "--config", str(cfg)], capsys)[0] == 2
        cfg.write_text(json.dumps({"colour": 3}))
        assert run(["sweep", "--config", str(cfg)], capsys)[0] == 2
        cfg.write_text(json.dumps({"trials": "many"}))
        assert run(["sweep", "--config", str(cfg)], capsys)[0] == 2

    def test_unwritable_output(self, tmp_path, capsys):
        code, _, err = run(["sweep", "--trials", "1", "--snr-db", "0", "--n", "2",
                            "--out", str(tmp_path / "missing" / "x.csv")], capsys)
        assert code == 1 and err

    @pytest.mark.parametrize("argv", [
        ["sweep", "--trials", "0"],
        ["sweep", "--trials", "x"],
        ["sweep", "--seed", "-4"],
        ["sweep", "--n", "2,a"],
    ])
    def test_usage_errors(self, argv, capsys):
        assert run(argv, capsys)[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "movsig", "freq-opt", "--n", "2", "--theta1", "90",
                           "--theta2", "0"], capture_output=True, text=True)
    assert proc.returncode == 0 and "exact: yes" in proc.stdout


@given(st.floats(-90, 90))
def test_degree_round_trip(x):
    assert rad2deg(deg2rad(x)) == pytest.approx(x, rel=1e-12, abs=1e-300)


@given(st.floats(-60, 60))
def test_db_round_trip(x):
    assert 10 * math.log10(db_to_linear(x)) == pytest.approx(x, rel=1e-12, abs=1e-13)
