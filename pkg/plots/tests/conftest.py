import subprocess
import sys
from pathlib import Path

import pytest

CYLINDER_CFG = """\
profile: {kind: cylinder, R: 1.0, L: 2.0}
material: {E: 2.069e11, nu: 0.3, rho: 7868.0}
operator: lame
thickness: [0.1, 0.01, 0.001]
mesh: {n_thick: 2, n_merid: 8, geo_degree: 3, graded: true}
p: 6
k_policy: {window: 5, cap: 60}
"""

BARREL_CFG = """\
profile:
  kind: parametrized
  coefficients: [1.0, 0.0, -0.5]
  interval: [-0.892668, 0.892668]
material: {E: 2.069e11, nu: 0.3, rho: 7868.0}
operator: lame
thickness: [0.01, 0.005, 0.004, 0.002, 0.001]
mesh: {n_thick: 2, n_merid: 8, geo_degree: 3, graded: true}
p: 6
k_policy: {window: 12, cap: 60}
"""


def run_sweep(tmp_dir: Path, cfg_text: str) -> Path:
    cfg = tmp_dir / "config.yaml"
    cfg.write_text(cfg_text)
    out = tmp_dir / "out"
    subprocess.run(
        [sys.executable, "-m", "shellmodes.cli_io", "sweep", str(cfg), "-d", str(out)],
        check=True,
        capture_output=True,
        text=True,
    )
    return out


@pytest.fixture(scope="session")
def cylinder_outputs(tmp_path_factory):
    return run_sweep(tmp_path_factory.mktemp("cylinder"), CYLINDER_CFG)


@pytest.fixture(scope="session")
def barrel_outputs(tmp_path_factory):
    return run_sweep(tmp_path_factory.mktemp("barrel"), BARREL_CFG)
