import json
import subprocess
import sys

import numpy as np
import pytest

from thermomagic.cli import run

T_FLAGS = ["--nx", "1", "--ny", "1", "--nz", "1"]


def run_capture(argv, capsys):
    code = run(argv)
    out = capsys.readouterr().out
    return code, out


class TestWitnessCommand:
    def test_example_instance(self, capsys):
        code, out = run_capture(
            ["witness", "--p", "0.3", "--c", "0", *T_FLAGS, "--beta", "0.6931"],
            capsys,
        )
        assert code == 0
        blob = json.loads(out)
        assert abs(blob["value"] - 1.4722) < 1e-3
        assert blob["magic"] is True
        assert blob["branch"] == "incoherent-low-p"

    def test_verify_passes(self, capsys):
        code, out = run_capture(
            ["witness", "--p", "0.3", "--c", "0.1", *T_FLAGS, "--beta", "1.0", "--verify"],
            capsys,
        )
        assert code == 0
        blob = json.loads(out)
        assert blob["verification"]["decision_agrees"] is True
        assert 0 <= blob["verification"]["deviation"] <= 5e-3

    def test_reruns_identical(self, tmp_path):
        argv = ["witness", "--p", "0.4", "--c", "0.2", *T_FLAGS, "--beta", "1.2"]
        f1, f2 = tmp_path / "a.json", tmp_path / "b.json"
        assert run(argv + ["--out", str(f1)]) == 0
        assert run(argv + ["--out", str(f2)]) == 0
        assert f1.read_bytes() == f2.read_bytes()


class TestValidation:
    def test_zero_direction_exit_2(self, capsys):
        code = run(["witness", "--p", "0.3", "--nx", "0", "--ny", "0", "--nz", "0"])
        capsys.readouterr()
        assert code == 2

    def test_unphysical_coherence_exit_2(self, capsys):
        code = run(["witness", "--p", "0.9", "--c", "0.5", *T_FLAGS])
        capsys.readouterr()
        assert code == 2

    def test_unknown_command_exit_2(self, capsys):
        code = run(["does-not-exist"])
        capsys.readouterr()
        assert code == 2

    def test_unwritable_output_exit_2(self, capsys):
        code = run(
            ["witness", "--p", "0.3", *T_FLAGS, "--out", "/nonexistent-dir/x.json"]
        )
        capsys.readouterr()
        assert code == 2

    def test_bad_beta_exit_2(self, capsys):
        code = run(["witness", "--p", "0.3", *T_FLAGS, "--beta", "-0.5"])
        capsys.readouterr()
        assert code == 2


class TestConfigFile:
    def test_config_sets_defaults(self, tmp_path, capsys):
        conf = tmp_path / "conf.json"
        conf.write_text(json.dumps({"p": 0.3, "beta": 0.6931, "c": 0.0}))
        code, out = run_capture(
            ["witness", *T_FLAGS, "--config", str(conf)], capsys
        )
        assert code == 0
        assert abs(json.loads(out)["value"] - 1.4722) < 1e-3

    def test_flags_override_config(self, tmp_path, capsys):
        conf = tmp_path / "conf.json"
        conf.write_text(json.dumps({"p": 0.9}))
        code, out = run_capture(
            ["witness", "--p", "0.3", *T_FLAGS, "--beta", "0.6931", "--config", str(conf)],
            capsys,
        )
        assert code == 0
        assert json.loads(out)["config"]["p"] == 0.3

    def test_unknown_config_key_exit_2(self, tmp_path, capsys):
        conf = tmp_path / "conf.json"
        conf.write_text(json.dumps({"frobnicate": 1}))
        code = run(["witness", *T_FLAGS, "--config", str(conf)])
        capsys.readouterr()
        assert code == 2


class TestCriticalCommands:
    def test_critical_beta_single(self, capsys):
        code, out = run_capture(
            ["critical-beta", "--p", "0.3", "--c", "0", *T_FLAGS, "--beta-max", "2"],
            capsys,
        )
        assert code == 0
        assert abs(json.loads(out)["beta_crt"] - 0.17519) < 1e-4

    def test_critical_beta_sweep_csv(self, tmp_path):
        out = tmp_path / "sweep.csv"
        code = run(
            [
                "critical-beta", "--p", "0.3", *T_FLAGS,
                "--beta-max", "2", "--sweep-c", "0", "0.4", "5",
                "--out", str(out),
            ]
        )
        assert code == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "c,beta_crt"
        assert len(lines) == 6

    def test_critical_beta_verify(self, capsys):
        code, _ = run_capture(
            [
                "critical-beta", "--p", "0.3", "--c", "0", *T_FLAGS,
                "--beta-max", "2", "--verify",
            ],
            capsys,
        )
        assert code == 0

    def test_critical_coherence_sweep(self, tmp_path):
        out = tmp_path / "cc.csv"
        code = run(
            [
                "critical-coherence", "--p", "0.3",
                "--nx", "1", "--ny", "1", "--nz", "0",
                "--sweep-beta", "0.3", "0.36", "4", "--out", str(out),
            ]
        )
        assert code == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "beta,c_crt"
        assert len(lines) == 5


class TestMeshAndVolume:
    def test_cone_mesh_file(self, tmp_path):
        out = tmp_path / "mesh.csv"
        code = run(
            [
                "cone-mesh", "--p", "0.5", "--c", "0.25",
                "--nx", "1", "--ny", "1", "--nz", "0", "--beta", "2",
                "--n-q", "8", "--n-phi", "12", "--out", str(out), "--verify",
            ]
        )
        assert code == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "q,phi,x,y,z"
        assert len(lines) == 1 + 8 * 12

    def test_magic_volume_json(self, capsys):
        code, out = run_capture(
            [
                "magic-volume", "--p", "0.5", "--c", "0.25",
                "--nx", "1", "--ny", "1", "--nz", "0", "--beta", "2",
                "--n-samples", "20000", "--seed", "11", "--verify",
            ],
            capsys,
        )
        assert code == 0
        blob = json.loads(out)
        assert blob["fraction"] > 0.0
        assert blob["fraction"] <= blob["reachable_fraction"]
        assert blob["verification"]["passed"] is True

    def test_volume_seed_reproducible(self, tmp_path):
        argv = [
            "magic-volume", "--p", "0.5", "--c", "0.25",
            "--nx", "1", "--ny", "1", "--nz", "0", "--beta", "2",
            "--n-samples", "20000", "--seed", "3",
        ]
        f1, f2 = tmp_path / "a.json", tmp_path / "b.json"
        assert run(argv + ["--out", str(f1)]) == 0
        assert run(argv + ["--out", str(f2)]) == 0
        assert f1.read_bytes() == f2.read_bytes()


class TestDistillMap:
    def test_csv_and_json_outputs(self, tmp_path):
        out = tmp_path / "map.csv"
        code = run(
            [
                "distill-map", "--orbit", "T", "--p", "0.3", "--c", "0.1",
                "--n-lon", "12", "--n-lat", "7", "--beta-max", "5",
                "--out", str(out),
            ]
        )
        assert code == 0
        assert out.exists()
        twin = tmp_path / "map.json"
        assert twin.exists()
        blob = json.loads(twin.read_text())
        assert blob["orbit"] == "T"
        assert len(blob["values"]) == 7
        lines = out.read_text().splitlines()
        assert lines[0] == "lon,lat,beta_dist"
        assert len(lines) == 1 + 12 * 7

    def test_degrees_flag(self, tmp_path):
        out = tmp_path / "mapdeg.csv"
        code = run(
            [
                "distill-map", "--orbit", "H", "--p", "0.3", "--c", "0.1",
                "--n-lon", "8", "--n-lat", "5", "--beta-max", "4",
                "--degrees", "--out", str(out),
            ]
        )
        assert code == 0
        first = out.read_text().splitlines()[1].split(",")
        assert float(first[0]) == -180.0


class TestOptimalAndCatalytic:
    def test_optimal_h(self, capsys):
        code, out = run_capture(
            ["optimal-h", "--p", "0.3", "--beta", "1.0", "--verify"], capsys
        )
        assert code == 0
        blob = json.loads(out)
        assert np.allclose(blob["direction"], np.ones(3) / np.sqrt(3))
        assert len(blob["all_optimal_directions"]) == 8
        assert blob["verification"]["passed"] is True

    def test_optimal_h_explicit_m(self, capsys):
        code, out = run_capture(["optimal-h", "--m", "1.0"], capsys)
        assert code == 0
        blob = json.loads(out)
        assert abs(blob["distance_outside_octahedron"] - (1 - 1 / np.sqrt(3))) < 1e-12

    def test_catalytic(self, capsys):
        code, out = run_capture(
            [
                "catalytic", "--p", "0.3", "--c", "0", *T_FLAGS,
                "--beta", "1", "--beta-max", "2", "--verify",
            ],
            capsys,
        )
        assert code == 0
        blob = json.loads(out)
        assert abs(blob["beta_crt_cat"] - 0.09736) < 1e-4
        assert blob["verification"]["passed"] is True


class TestEntryPoint:
    def test_module_invocation(self, tmp_path):
        res = subprocess.run(
            [
                sys.executable, "-m", "thermomagic.cli",
                "witness", "--p", "0.3", *T_FLAGS, "--beta", "0.6931",
            ],
            capture_output=True,
            text=True,
        )
        assert res.returncode == 0
        assert json.loads(res.stdout)["magic"] is True
