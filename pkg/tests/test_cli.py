import json
import math

import pytest

from vortexpack import cli


def run(capsys, argv):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


class TestMassExcess:
    def test_headline_value(self, capsys):
        code, out, _ = run(capsys, ["mass-excess", "--ell", "1000",
                                    "--sigma-perp-nm", "1"])
        assert code == 0
        data = json.loads(out)
        assert data["delta_m_over_m"] == pytest.approx(7.46e-5, rel=0.01)

    def test_json_round_trip_bit_exact(self, capsys):
        _, out, _ = run(capsys, ["mass-excess", "--ell", "7",
                                 "--sigma-ratio", "0.13"])
        data = json.loads(out)
        assert json.loads(json.dumps(data)) == data

    def test_missing_width_is_config_error(self, capsys):
        code, _, err = run(capsys, ["mass-excess", "--ell", "5"])
        assert code == 2
        assert "error" in json.loads(err)


class TestScanPperp:
    def test_header_and_gaussian_row(self, capsys):
        code, out, _ = run(capsys, ["scan-pperp", "--ell-max", "0",
                                    "--sigma-ratio", "0.01"])
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == ("ell,sqrt_ell,pperp_over_sigma_exact,"
                            "pperp_over_sigma_quadrature")
        fields = lines[1].split(",")
        assert fields[0] == "0"
        assert float(fields[2]) == pytest.approx(0.886, abs=1e-3)

    def test_seventeen_digit_csv(self, capsys):
        _, out, _ = run(capsys, ["scan-pperp", "--ell-max", "2",
                                 "--sigma-ratio", "0.01"])
        row = out.strip().splitlines()[-1].split(",")
        assert row[1] == f"{math.sqrt(2.0):.17g}"


class TestField:
    def test_csv_shape(self, capsys):
        code, out, _ = run(capsys, ["field", "--ell", "1",
                                    "--sigma-ratio", "0.2",
                                    "--rho-min", "1", "--rho-max", "2",
                                    "--n-rho", "2"])
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "t,rho,phi,z,abs_psi,phase,kg_residual"
        assert len(lines) == 3
        kg = float(lines[1].split(",")[6])
        assert kg <= 1e-4

    def test_deterministic(self, capsys):
        argv = ["field", "--ell", "2", "--sigma-ratio", "0.2", "--n-rho", "3"]
        _, out1, _ = run(capsys, argv)
        _, out2, _ = run(capsys, argv)
        assert out1 == out2


class TestObservables:
    def test_report_structure(self, capsys):
        code, out, _ = run(capsys, ["observables", "--ell", "2",
                                    "--sigma-ratio", "0.1", "--pbar", "1"])
        assert code == 0
        data = json.loads(out)
        exact = data["mean_four_momentum"]["exact"]
        quad = data["mean_four_momentum"]["quadrature"]
        assert exact[0] == pytest.approx(quad[0], rel=1e-8)
        assert data["mass_excess"]["delta_m_over_m"] > 0.0

    def test_physical_units(self, capsys):
        code, out, _ = run(capsys, ["observables", "--ell", "0",
                                    "--sigma-perp-nm", "1",
                                    "--kinetic-kev", "300"])
        assert code == 0
        data = json.loads(out)
        assert data["params"]["sigma_ratio"] == pytest.approx(3.8616e-4)
        assert data["params"]["pbar"] == pytest.approx(1.2323, abs=1e-3)


class TestMoment:
    def test_structure(self, capsys):
        code, out, _ = run(capsys, ["moment", "--ell", "3",
                                    "--sigma-ratio", "0.1", "--pbar", "1",
                                    "--helicity", "-0.5"])
        assert code == 0
        data = json.loads(out)
        quad = data["magnetic_moment_quadrature"]
        assert quad["total"][2] == pytest.approx(
            quad["orbital"][2] + quad["spin"][2], rel=1e-12)
        assert data["total_jz"] == 2.5
        assert max(abs(c) for c in data["dipole"]) <= 1e-9


class TestBoostCheck:
    def test_zero_rapidity_all_deltas_zero(self, capsys):
        code, out, _ = run(capsys, ["boost-check", "--ell", "3",
                                    "--sigma-ratio", "0.15", "--pbar", "0.7",
                                    "--rapidity", "0"])
        assert code == 0
        for line in out.strip().splitlines()[1:]:
            assert float(line.split(",")[3]) == 0.0

    def test_invariants_hold(self, capsys):
        _, out, _ = run(capsys, ["boost-check", "--ell", "3",
                                 "--sigma-ratio", "0.15", "--pbar", "0.7",
                                 "--rapidity", "2.5"])
        for line in out.strip().splitlines()[1:]:
            assert abs(float(line.split(",")[3])) <= 1e-10


class TestConfigAndErrors:
    def test_config_file(self, capsys, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"sigma-ratio": 0.1, "pbar": 1}))
        code, out, _ = run(capsys, ["--config", str(cfg),
                                    "observables", "--ell", "1"])
        assert code == 0
        assert json.loads(out)["params"]["sigma_ratio"] == 0.1

    def test_bad_config_path(self, capsys):
        code, _, err = run(capsys, ["--config", "/nope.json",
                                    "observables", "--ell", "1",
                                    "--sigma-ratio", "0.1"])
        assert code == 2
        assert "error" in json.loads(err)

    def test_unknown_command(self, capsys):
        code, _, err = run(capsys, ["frobnicate"])
        assert code == 2
        assert "error" in json.loads(err)

    def test_invalid_sigma(self, capsys):
        code, _, err = run(capsys, ["observables", "--ell", "1",
                                    "--sigma-ratio", "-0.5"])
        assert code == 2
        assert "error" in json.loads(err)
