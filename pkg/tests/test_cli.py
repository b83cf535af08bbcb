import csv
import json
import subprocess
import sys
from math import sqrt

import pytest

from concurrence_bound import states
from concurrence_bound.cli import SweepSpec, UsageError, main
from concurrence_bound.concurrence import analyze, isotropic_exact_concurrence
from concurrence_bound.io import CSV_COLUMNS, load_state, report_to_dict, save_state
from concurrence_bound.states import fidelity_with_mes


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def read_csv(path):
    with open(path, newline="") as fh:
        return list(csv.DictReader(fh))


class TestAnalyze:
    def test_tiles(self, tmp_path, capsys):
        path = tmp_path / "tiles.json"
        assert run(capsys, "state", "tiles", "--out", path)[0] == 0
        code, out, _ = run(capsys, "analyze", path)
        assert code == 0
        assert "entangled: yes" in out
        assert "concurrence_lower_bound: 0.0504676" in out

    def test_maximally_mixed(self, tmp_path, capsys):
        save_state(states.maximally_mixed(3, 3), tmp_path / "mm.json")
        code, out, _ = run(capsys, "analyze", tmp_path / "mm.json", "--format", "csv")
        assert code == 0
        row = out.strip().split(",")
        assert row[0] == "mm"
        assert row[7] == "0.000000"
        assert row[-1] == "false"

    def test_structured_matches_library_exactly(self, tmp_path, capsys):
        for name, rho in [("pyr", states.pyramid_upb()), ("h", states.horodecki_3x3(4.4))]:
            save_state(rho, tmp_path / f"{name}.json")
            code, out, _ = run(capsys, "analyze", tmp_path / f"{name}.json", "--format", "structured")
            assert code == 0
            assert json.loads(out) == json.loads(json.dumps(report_to_dict(analyze(rho, label=name))))

    def test_malformed(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text("{oops")
        code, _, err = run(capsys, "analyze", bad)
        assert code == 2
        assert "malformed" in err

    def test_invalid_state(self, tmp_path, capsys):
        doc = {"format_version": 1, "dim_a": 2, "dim_b": 2, "real_part": [[0.98 / 4 if i == j else 0 for j in range(4)] for i in range(4)], "imag_part": [[0] * 4] * 4}
        path = tmp_path / "t.json"
        path.write_text(json.dumps(doc))
        code, _, err = run(capsys, "analyze", path)
        assert code == 2
        assert "trace" in err

    def test_missing_file(self, tmp_path, capsys):
        assert run(capsys, "analyze", tmp_path / "absent.json")[0] == 2


class TestState:
    def test_isotropic(self, tmp_path, capsys):
        path = tmp_path / "iso.json"
        code, out, _ = run(capsys, "state", "isotropic", "--d", 3, "--fidelity", 0.5, "--out", path)
        assert code == 0 and out == ""
        assert fidelity_with_mes(load_state(path)) == pytest.approx(0.5, abs=1e-12)

    def test_horodecki_then_analyze(self, tmp_path, capsys):
        path = tmp_path / "h.json"
        assert run(capsys, "state", "horodecki", "--alpha", 3.5, "--out", path)[0] == 0
        code, out, _ = run(capsys, "analyze", path, "--format", "structured")
        expected = 2 * sqrt(3) * (sqrt(3 * 12.25 - 52.5 + 19) - 1) / 63
        assert json.loads(out)["bound"]["value"] == pytest.approx(expected, abs=1e-10)

    @pytest.mark.parametrize(
        "argv",
        [
            ["state", "horodecki", "--alpha", "6"],
            ["state", "isotropic", "--d", "3"],
            ["state", "isotropic", "--d", "3", "--fidelity", "1.5"],
            ["state", "werner", "--d", "3"],
            ["state", "mes"],
        ],
    )
    def test_usage_errors(self, argv, tmp_path, capsys):
        code, _, err = run(capsys, *argv, "--out", tmp_path / "x.json")
        assert code == 2
        assert err
        assert not (tmp_path / "x.json").exists()

    @pytest.mark.parametrize("family", ["tiles", "pyramid"])
    def test_fixed_families(self, family, tmp_path, capsys):
        assert run(capsys, "state", family, "--out", tmp_path / "s.json")[0] == 0
        assert load_state(tmp_path / "s.json").dims == (3, 3)

    def test_mes(self, tmp_path, capsys):
        assert run(capsys, "state", "mes", "--d", 4, "--out", tmp_path / "s.json")[0] == 0
        assert fidelity_with_mes(load_state(tmp_path / "s.json")) == pytest.approx(1.0)


class TestSweep:
    def test_horodecki(self, tmp_path, capsys):
        out = tmp_path / "h.csv"
        code, _, _ = run(capsys, "sweep", "horodecki", "--start", 2, "--stop", 5, "--step", 0.25, "--out", out)
        assert code == 0
        rows = read_csv(out)
        assert list(rows[0]) == ["alpha", *CSV_COLUMNS]
        alphas = [float(r["alpha"]) for r in rows]
        assert alphas == [2 + 0.25 * k for k in range(13)]
        for a, r in zip(alphas, rows):
            assert (r["entangled"] == "true") == (a > 3)
            assert (float(r["concurrence_lower_bound"]) > 0) == (a > 3)

    def test_isotropic_matches_exact(self, tmp_path, capsys):
        out = tmp_path / "i.csv"
        assert run(capsys, "sweep", "isotropic", "--d", 3, "--start", 0, "--stop", 1, "--step", 0.05, "--out", out)[0] == 0
        rows = read_csv(out)
        assert len(rows) == 21
        for r in rows:
            f = float(r["fidelity"])
            assert float(r["concurrence_lower_bound"]) == pytest.approx(isotropic_exact_concurrence(3, f), abs=5e-7)

    def test_deterministic_and_parallel(self, tmp_path, capsys):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        args = ["sweep", "horodecki", "--start", 2, "--stop", 5, "--step", 0.1]
        run(capsys, *args, "--out", a)
        run(capsys, *args, "--jobs", 4, "--out", b)
        assert a.read_bytes() == b.read_bytes()

    @pytest.mark.parametrize(
        "argv",
        [
            ["horodecki", "--start", 5.5, "--stop", 6, "--step", 0.1],
            ["horodecki", "--start", 3, "--stop", 2.5, "--step", 0.1],
            ["isotropic", "--start", 0, "--stop", 1, "--step", 0],
            ["isotropic", "--start", 0, "--stop", 1, "--step", 0.1, "--d", 1],
        ],
    )
    def test_invalid_range(self, argv, tmp_path, capsys):
        assert run(capsys, "sweep", *argv, "--out", tmp_path / "x.csv")[0] == 2


class TestSweepGrid:
    def test_endpoints_included(self):
        assert SweepSpec("horodecki", 2, 3, 0.5).grid() == [2.0, 2.5, 3.0]

    def test_clamped_final_point(self):
        assert SweepSpec("horodecki", 2, 3, 0.4).grid() == [2.0, 2.4, 2.8, 3.0]

    def test_single_point(self):
        assert SweepSpec("isotropic", 0.5, 0.5, 0.1).grid() == [0.5]

    def test_clipping(self):
        spec = SweepSpec("horodecki", 0, 10, 1)
        assert (spec.start, spec.stop) == (2, 5)

    def test_empty_after_clipping(self):
        with pytest.raises(UsageError):
            SweepSpec("isotropic", 1.5, 2, 0.1)

    def test_tenth_steps_land_on_decimals(self):
        grid = SweepSpec("horodecki", 2, 5, 0.1).grid()
        assert len(grid) == 31
        assert grid[10] == 3.0
        assert grid[-1] == 5.0


class TestSelftest:
    def test_passes(self, capsys):
        code, out, _ = run(capsys, "selftest")
        assert code == 0
        assert "tiles ||R(rho)||" in out
        assert "pyramid ||R(rho)||" in out
        assert "isotropic d=3 bound exact" in out
        assert "FAIL" not in out

    def test_mutated_constant_fails(self, capsys, monkeypatch):
        monkeypatch.setattr(states, "PYRAMID_HEIGHT", states.PYRAMID_HEIGHT * 1.01)
        code, out, err = run(capsys, "selftest")
        assert code == 1
        assert "pyramid" in err

    def test_realignment_mutation_fails(self, capsys, monkeypatch):
        import concurrence_bound.criteria as criteria

        # a wrong reshuffle (plain transpose) keeps norms at 1 and must be caught
        monkeypatch.setattr(criteria, "realign", lambda rho: rho.matrix.T.copy())
        code, _, err = run(capsys, "selftest")
        assert code == 1
        assert "tiles" in err


def test_usage_without_command(capsys):
    assert run(capsys)[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "concurrence_bound", "selftest"], capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    assert "all checks passed" in proc.stdout
