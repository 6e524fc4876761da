import os
import subprocess
import sys
from pathlib import Path

import pytest

PRIMARY_SRC = Path(__file__).resolve().parents[2] / "src"


def primary_cli(*args: str, cwd=None) -> subprocess.CompletedProcess:
    """Invoke the primary toolkit's CLI in a subprocess."""
    env = dict(os.environ)
    env["PYTHONPATH"] = str(PRIMARY_SRC) + os.pathsep + env.get("PYTHONPATH", "")
    return subprocess.run(
        [sys.executable, "-m", "thermomagic.cli", *args],
        capture_output=True,
        text=True,
        cwd=cwd,
        env=env,
        check=False,
    )


DIRECTIONS = {
    "t": ("1", "1", "1"),
    "h": ("1", "1", "0"),
    "w": ("2", "1", "1"),
}


@pytest.fixture(scope="session")
def cli_outputs(tmp_path_factory):
    """Generate every CSV consumed by the figure tests, once per session."""
    root = tmp_path_factory.mktemp("cli-data")
    files = {}

    for tag, (nx, ny, nz) in DIRECTIONS.items():
        path = root / f"beta_crt_{tag}.csv"
        res = primary_cli(
            "critical-beta", "--p", "0.3", "--nx", nx, "--ny", ny, "--nz", nz,
            "--beta-max", "3", "--sweep-c", "0", "0.45", "16",
            "--out", str(path),
        )
        assert res.returncode == 0, res.stderr
        files[f"beta_crt_{tag}"] = path

        path = root / f"c_crt_{tag}.csv"
        res = primary_cli(
            "critical-coherence", "--p", "0.3", "--nx", nx, "--ny", ny, "--nz", nz,
            "--sweep-beta", "0", "0.45", "16", "--out", str(path),
        )
        assert res.returncode == 0, res.stderr
        files[f"c_crt_{tag}"] = path

    for orbit in ("T", "H"):
        path = root / f"map_{orbit}.csv"
        res = primary_cli(
            "distill-map", "--orbit", orbit, "--p", "0.3", "--c", "0.1",
            "--n-lon", "61", "--n-lat", "31", "--beta-max", "10",
            "--out", str(path),
        )
        assert res.returncode == 0, res.stderr
        files[f"map_{orbit}"] = path

    path = root / "mesh.csv"
    res = primary_cli(
        "cone-mesh", "--p", "0.5", "--c", "0.25", "--nx", "1", "--ny", "1",
        "--nz", "0", "--beta", "2", "--n-q", "40", "--n-phi", "72",
        "--out", str(path),
    )
    assert res.returncode == 0, res.stderr
    files["mesh"] = path

    path = root / "mesh_flat.csv"
    res = primary_cli(
        "cone-mesh", "--p", "0.3", "--c", "0", "--nx", "1", "--ny", "1",
        "--nz", "1", "--beta", "1", "--n-q", "24", "--n-phi", "8",
        "--out", str(path),
    )
    assert res.returncode == 0, res.stderr
    files["mesh_flat"] = path

    path = root / "mesh_nomagic.csv"
    res = primary_cli(
        "cone-mesh", "--p", "0.45", "--c", "0.05", "--nx", "1", "--ny", "1",
        "--nz", "1", "--beta", "0.3", "--n-q", "24", "--n-phi", "48",
        "--out", str(path),
    )
    assert res.returncode == 0, res.stderr
    files["mesh_nomagic"] = path

    return files
