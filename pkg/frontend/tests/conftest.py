import shutil
import subprocess

import pytest


@pytest.fixture(scope="session")
def sim_outputs(tmp_path_factory):
    """Canonical simulator outputs, produced through the public CLI only."""
    exe = shutil.which("simulate")
    if exe is None:
        pytest.skip("simulate CLI not installed")
    out = tmp_path_factory.mktemp("sim")
    cfg = out / "run.cfg"
    cfg.write_text("scenario = fig1c\n")
    subprocess.run([exe, "--config", str(cfg), "--out", str(out)], check=True)
    cfg.write_text("scenario = geometry-map\ngeometry.resolution = 21\n")
    subprocess.run([exe, "--config", str(cfg), "--out", str(out)], check=True)
    return out
