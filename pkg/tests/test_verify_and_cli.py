import csv
import io
import json
import math

import pytest

from wallisqm import verify, wallis_series
from wallisqm.cli import main
from wallisqm.wallis_series import PartialSum, scaled_a


class TestVerifySuites:
    def test_strict_all_pass(self):
        results = verify.run("strict")
        failed = [r.name for r in results if not r.passed]
        assert failed == []
        assert len(results) == len(verify.CHECKS)

    def test_relaxed_all_pass(self):
        assert all(r.passed for r in verify.run("relaxed"))

    def test_unknown_profile(self):
        with pytest.raises(ValueError):
            verify.run("sloppy")

    def test_detects_perturbed_partial_sum(self, monkeypatch):
        def perturbed(n):
            sa = scaled_a(n)
            return PartialSum(
                n_terms=n,
                value=4.0 * sa - 2.9 * (8.0 / (3.0 * math.pi)),
                closed_form_limit=4.0 - 8.0 / math.pi,
                tail_bound=4.0 * (1.0 - sa),
            )

        monkeypatch.setattr(wallis_series, "sum_a_recurrence", perturbed)
        by_name = {r.name: r for r in verify.run("strict")}
        assert not by_name["sum-a-recurrence-vs-direct"].passed


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestPiCommand:
    def test_csv_roundtrip_and_envelope(self, capsys):
        code, out, _ = run_cli(capsys, "pi", "--n", "1,10,1000")
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert [r["n_or_l"] for r in rows] == ["1", "10", "1000"]
        for r in rows:
            value = float(r["value"])
            reference = float(r["reference"])
            assert reference == math.pi
            assert float(r["abs_error"]) == abs(value - reference)
            assert float(r["abs_error"]) < float(r["bound"])
        # 17-significant-digit cells reproduce the doubles exactly
        n1 = rows[0]
        assert float(n1["value"]) == 2.0 * (4.0 / 3.0)

    def test_json_matches_csv(self, capsys):
        code, out_csv, _ = run_cli(capsys, "pi", "--n", "5")
        code2, out_json, _ = run_cli(capsys, "--format", "json", "pi", "--n", "5")
        assert code == code2 == 0
        row_csv = next(csv.DictReader(io.StringIO(out_csv)))
        row_json = json.loads(out_json)[0]
        assert row_json["value"] == float(row_csv["value"])
        assert row_json["bound"] == float(row_csv["bound"])

    def test_deterministic(self, capsys):
        _, out1, _ = run_cli(capsys, "pi", "--n", "1:20:3")
        _, out2, _ = run_cli(capsys, "pi", "--n", "1:20:3")
        assert out1 == out2

    def test_range_selection(self, capsys):
        _, out, _ = run_cli(capsys, "pi", "--n", "2:10:4")
        rows = list(csv.DictReader(io.StringIO(out)))
        assert [r["n_or_l"] for r in rows] == ["2", "6", "10"]


class TestSumCommand:
    def test_simple_mode(self, capsys):
        code, out, _ = run_cli(capsys, "sum", "--n", "1,2")
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert [r["label"] for r in rows] == [
            "a-sum-recurrence", "a-sum-direct"] * 2
        first = rows[0]
        assert float(first["value"]) == pytest.approx(8.0 / (3.0 * math.pi), rel=1e-13)
        assert float(first["reference"]) == pytest.approx(4.0 - 8.0 / math.pi, rel=1e-15)

    def test_general_mode(self, capsys):
        code, out, _ = run_cli(capsys, "sum", "--mode", "general",
                               "--m", "0.5", "--k", "0.5", "--n", "100")
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert float(rows[0]["reference"]) == pytest.approx(4.0 - math.pi, rel=1e-13)

    def test_invalid_params_exit_2(self, capsys):
        code, _, err = run_cli(capsys, "sum", "--mode", "general",
                               "--m", "0.5", "--k", "0.0", "--n", "10")
        assert code == 2
        assert "k - m" in err

    def test_missing_params_exit_2(self, capsys):
        code, _, err = run_cli(capsys, "sum", "--mode", "general", "--n", "10")
        assert code == 2
        assert "--m" in err


class TestVariationalCommand:
    def test_gaussian_coulomb_row(self, capsys):
        code, out, _ = run_cli(capsys, "variational", "--family", "gaussian",
                               "--potential", "coulomb", "--l-max", "0")
        assert code == 0
        row = next(csv.DictReader(io.StringIO(out)))
        assert float(row["value"]) == pytest.approx(-4.0 / (3.0 * math.pi), rel=1e-13)
        assert float(row["reference"]) == -0.5
        assert float(row["abs_error"]) < float(row["bound"])

    def test_oscillator_rows_have_no_bound(self, capsys):
        _, out, _ = run_cli(capsys, "variational", "--family", "gaussian",
                            "--potential", "oscillator", "--l-max", "2")
        rows = list(csv.DictReader(io.StringIO(out)))
        assert all(r["bound"] == "" for r in rows)
        assert all(float(r["abs_error"]) == 0.0 for r in rows)

    def test_lorentz_oscillator_l0_usage_error(self, capsys):
        code, _, err = run_cli(capsys, "variational", "--family", "lorentz",
                               "--potential", "oscillator", "--l-max", "3")
        assert code == 2
        assert "l-min 1" in err or "l >= 1" in err or "l = 0" in err

    def test_lorentz_oscillator_with_l_min(self, capsys):
        code, out, _ = run_cli(capsys, "variational", "--family", "lorentz",
                               "--potential", "oscillator", "--l-max", "3",
                               "--l-min", "1")
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert [r["n_or_l"] for r in rows] == ["1", "2", "3"]
        assert float(rows[0]["value"]) == pytest.approx(math.sqrt(15.0), rel=1e-13)


class TestBoundsCommand:
    def test_kazarinoff_all_satisfied(self, capsys):
        code, out, _ = run_cli(capsys, "bounds", "--kind", "kazarinoff",
                               "--grid", "1,10,100,1000000")
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert all(r["satisfied"] == "true" for r in rows)
        assert all(float(r["lower"]) < float(r["value"]) < float(r["upper"])
                   for r in rows)

    def test_quartic_domain_violation_is_per_row(self, capsys):
        code, out, _ = run_cli(capsys, "bounds", "--kind", "quartic",
                               "--grid", "0.04,1.0")
        assert code == 1  # the out-of-domain row counts as violated
        rows = list(csv.DictReader(io.StringIO(out)))
        assert rows[0]["satisfied"] == "false" and rows[0]["value"] == ""
        assert rows[1]["satisfied"] == "true"

    def test_wendel_deviation_below_envelope(self, capsys):
        code, out, _ = run_cli(capsys, "bounds", "--kind", "wendel",
                               "--grid", "1000000", "--s", "0.5")
        assert code == 0
        row = next(csv.DictReader(io.StringIO(out)))
        assert abs(float(row["value"])) < 1e-6

    def test_wendel_bad_s_exit_2(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["bounds", "--kind", "wendel", "--grid", "10", "--s", "1.5"])
        assert info.value.code == 2


class TestIntegralsCommand:
    def test_residuals_within_bounds(self, capsys):
        code, out, _ = run_cli(capsys, "integrals", "--l-max", "3")
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        labels = {r["label"] for r in rows}
        assert labels == {"gaussian-moment", "rational-moment",
                          "rational-integral", "lorentz-norm", "lorentz-coulomb"}
        for r in rows:
            assert float(r["abs_error"]) <= float(r["bound"])


class TestVerifyCommand:
    def test_strict_passes(self, capsys):
        code, out, _ = run_cli(capsys, "verify")
        assert code == 0
        lines = out.strip().splitlines()
        assert all(line.startswith("PASS") for line in lines[:-1])
        assert lines[-1].endswith("[strict]")

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "report.txt"
        code = main(["--out", str(target), "verify", "--tol-profile", "relaxed"])
        capsys.readouterr()
        assert code == 0
        assert "[relaxed]" in target.read_text()


def test_unknown_command_exits_2():
    with pytest.raises(SystemExit) as info:
        main(["conjure"])
    assert info.value.code == 2
