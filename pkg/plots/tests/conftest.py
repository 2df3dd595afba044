import subprocess
import sys

import pytest


def entpot(*args):
    """Invoke the primary package strictly through its CLI."""
    subprocess.run(
        [sys.executable, "-m", "entpot.cli", *args],
        check=True,
        stdout=subprocess.DEVNULL,
    )


@pytest.fixture(scope="session")
def data_dir(tmp_path_factory):
    """CSV fixtures produced by the entpot command line."""
    d = tmp_path_factory.mktemp("cli_output")
    common = ["--no-timestamp"]
    entpot("curve", "--kind", "pure", "--plane", "n-c", "--n", "41",
           "--out", str(d / "pure_nc.csv"), *common)
    entpot("curve", "--kind", "horodecki", "--plane", "n-c", "--n", "41",
           "--out", str(d / "horo_nc.csv"), *common)
    entpot("curve", "--kind", "pure", "--plane", "ree-c", "--n", "41",
           "--out", str(d / "pure_rc.csv"), *common)
    entpot("curve", "--kind", "horodecki", "--plane", "ree-c", "--n", "41",
           "--out", str(d / "horo_rc.csv"), *common)
    entpot("curve", "--kind", "pure", "--plane", "ree-n", "--n", "41",
           "--out", str(d / "pure_en.csv"), *common)
    entpot("curve", "--kind", "horodecki", "--plane", "ree-n", "--n", "41",
           "--out", str(d / "horo_en.csv"), *common)
    entpot("curve", "--kind", "bell", "--plane", "ree-n", "--n", "41",
           "--out", str(d / "bell_en.csv"), *common)
    entpot("curve", "--kind", "rho-z", "--plane", "ree-n", "--n", "14",
           "--ree-tol", "1e-8", "--out", str(d / "rho_z.csv"), *common)
    entpot("curve", "--kind", "rho-a", "--plane", "ree-n", "--n", "12",
           "--ree-tol", "1e-8", "--out", str(d / "rho_a.csv"), *common)
    entpot("special-points", "--out", str(d / "points.csv"), *common)
    entpot("scan", "--n", "60", "--seed", "9", "--ree-tol", "1e-8",
           "--rho-z-curve", str(d / "rho_z.csv"), "--containment-tol", "1e-3",
           "--out", str(d / "scan.csv"), *common)
    return d
