import json
import subprocess
import sys

import pytest

from heckesectors.cli import main


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


class TestDecompose:
    def test_twisted_cubic(self, capsys):
        code, out, _ = run(capsys, "decompose", "--m", "2", "--n", "1")
        assert code == 0
        assert out.strip() == "Sym3⊗det^-1: 1, Sym1: 2"

    def test_standard(self, capsys):
        assert run(capsys, "decompose", "--m", "1", "--n", "0")[1].strip() == "Sym1: 1"

    def test_constant_term(self, capsys):
        code, out, _ = run(capsys, "decompose", "--m", "4", "--n", "4", "--format", "json")
        rows = json.loads(out)
        triv = [row for row in rows if row["sym"] == 0]
        assert triv[0]["multiplicity"] == 14

    @pytest.mark.parametrize("argv", [("--m", "0", "--n", "0"), ("--m", "-1", "--n", "2"), ("--m", "x", "--n", "1")])
    def test_invalid(self, capsys, argv):
        assert run(capsys, "decompose", *argv)[0] == 2


class TestATable:
    def _values(self, capsys, r):
        code, out, _ = run(capsys, "atable", "--r", str(r), "--format", "json")
        assert code == 0
        return {row["n"]: row["A"] for row in json.loads(out)}

    def test_r5(self, capsys):
        v = self._values(capsys, 5)
        assert v[4] == "14" and all(v[n] == "≤1" for n in range(9) if n != 4)

    def test_r2(self, capsys):
        v = self._values(capsys, 2)
        assert all(v[n] == ("14" if n % 2 == 0 else "0") for n in range(9))

    def test_r23(self, capsys):
        v = self._values(capsys, 23)
        assert v[4] == "14" and all(v[n] == "0" for n in range(9) if n != 4)

    def test_bad_r(self, capsys):
        assert run(capsys, "atable", "--r", "1")[0] == 2


class TestConstants:
    def _rows(self, capsys, *extra):
        code, out, _ = run(capsys, "constants", *extra, "--format", "json")
        assert code == 0
        return {row["name"].split("(")[0]: row for row in json.loads(out)}

    def test_r2_q8(self, capsys):
        assert self._rows(capsys, "--r", "2")["q8_upper"]["exact"] == "7"

    def test_r2_q4_at_zero(self, capsys):
        assert float(self._rows(capsys, "--r", "2", "--phi", "0")["q4"]["decimal"]) == 1.0

    def test_r20_q8(self, capsys):
        assert self._rows(capsys, "--r", "20")["q8_upper"]["times_256"] == "982/256"

    def test_table(self, capsys):
        code, out, _ = run(capsys, "constants", "--r", "3")
        assert code == 0 and "55/32" in out and "301/64" in out


class TestSector:
    def test_r7_json(self, capsys):
        code, out, _ = run(capsys, "sector", "--r", "7", "--format", "json")
        row = json.loads(out)[0]
        assert code == 0
        assert row["Q"] == 2.341
        assert row["half_angle_rad"] == pytest.approx(1.3137, abs=1e-4)

    def test_r4_threshold(self, capsys):
        code, out, _ = run(capsys, "sector", "--r", "4", "--format", "json")
        assert json.loads(out)[0]["threshold"] == pytest.approx(0.684, abs=1e-3)

    def test_r2_branch_lines(self, capsys):
        code, out, _ = run(capsys, "sector", "--r", "2")
        assert code == 0
        assert out.count("branch ") == 2
        assert "|a| > 0.702" in out

    def test_infeasible_exit(self, capsys):
        code, _, err = run(capsys, "sector", "--r", "7", "--cap", "0.3")
        assert code == 3 and "infeasible" in err

    def test_env_cap(self, capsys, monkeypatch):
        monkeypatch.setenv("HECKESECTORS_CAP", "0.3")
        assert run(capsys, "sector", "--r", "7")[0] == 3


class TestVerify:
    def test_rays_file(self, capsys, tmp_path):
        out_path = tmp_path / "rays.csv"
        assert run(capsys, "synth", "--seed", "1", "--r", "5", "--count", "10000", "--out", str(out_path))[0] == 0
        code, out, _ = run(capsys, "verify", "--data", str(out_path), "--r", "5", "--format", "json")
        assert code == 0
        k3 = [row for row in json.loads(out)["rows"] if row["quantity"] == "k=3"]
        assert abs(k3[-1]["estimate"]) < 0.2

    def test_empty(self, capsys, tmp_path):
        p = tmp_path / "empty.csv"
        p.write_text("")
        code, out, _ = run(capsys, "verify", "--data", str(p))
        assert code == 0 and "empty" in out

    def test_bad_file(self, capsys, tmp_path):
        p = tmp_path / "bad.csv"
        p.write_text("norm,re,im\n5,0.1,0.2\nx,1,1\n")
        code, _, err = run(capsys, "verify", "--data", str(p))
        assert code == 2 and "line 3" in err

    def test_csv_output(self, capsys, tmp_path):
        p = tmp_path / "one.csv"
        p.write_text("norm,re,im\n5,0.2,1.1\n")
        code, out, _ = run(capsys, "verify", "--data", str(p), "--format", "csv", "--s", "1.1")
        assert code == 0 and out.splitlines()[0].startswith("s,quantity")
        assert len(out.splitlines()) == 6


class TestOther:
    def test_poles(self, capsys):
        code, out, _ = run(capsys, "poles", "--m", "3", "--n", "3", "--r", "3", "--format", "json")
        rows = json.loads(out)
        assert code == 0
        assert rows[-1]["lo"] == rows[-1]["hi"] == 5
        assert all(row["verified"] for row in rows)

    def test_poles_bad_degree(self, capsys):
        assert run(capsys, "poles", "--m", "3", "--n", "2", "--r", "3")[0] == 2

    def test_boundary_scan(self, capsys):
        code, out, _ = run(capsys, "boundary", "--scan", "--format", "json")
        row = json.loads(out)[0]
        assert code == 0 and row["scan_matches"] is True
        assert abs(row["residual_s"]) < 1e-9 and abs(row["residual_t"]) < 1e-9

    def test_boundary_infeasible(self, capsys):
        assert run(capsys, "boundary", "--cap", "1/5")[0] == 3

    def test_lemma(self, capsys):
        code, out, _ = run(capsys, "lemma", "--Q", "2", "--format", "json")
        assert code == 0 and json.loads(out)[0]["bound_exact"] == "1/35"
        assert run(capsys, "lemma")[0] == 2

    def test_lines(self, capsys):
        code, out, _ = run(capsys, "lines", "--r", "5", "--format", "csv")
        assert code == 0 and len(out.splitlines()) == 11

    def test_check_sector(self, capsys):
        code, out, _ = run(capsys, "check-sector", "--r", "5", "--center", "0.3", "--angle", "2.52", "--format", "json")
        assert code == 0 and json.loads(out)[0]["ok"] is True
        assert run(capsys, "check-sector", "--r", "7", "--center", "0", "--angle", "2.5")[0] == 2

    def test_synth_deterministic(self, capsys):
        a = run(capsys, "synth", "--seed", "4", "--r", "3", "--count", "20")[1]
        b = run(capsys, "synth", "--seed", "4", "--r", "3", "--count", "20")[1]
        assert a == b and len(a.splitlines()) == 21

    def test_bad_global_options(self, capsys):
        assert run(capsys, "lines", "--r", "5", "--grid", "3")[0] == 2
        assert run(capsys, "lines", "--r", "5", "--tol", "0")[0] == 2

    def test_module_entry_point(self):
        proc = subprocess.run([sys.executable, "-m", "heckesectors", "decompose", "--m", "2", "--n", "1"],
                              capture_output=True, text=True, check=True)
        assert proc.stdout.strip() == "Sym3⊗det^-1: 1, Sym1: 2"
