"""End-to-end tests of the command-line interface."""

import json
import subprocess
import sys

import numpy as np
import pytest

from shpqm import cli

REFERENCE_CFG = """\
e1_ev = 35.0
e2_ev = 39.2
t_emit1_fs = 0.0
t_emit2_fs = 0.75
sigma_t_fs = 0.5
dt_min_fs = -4.0
dt_max_fs = 4.0
samples = 2001
"""


def write_cfg(tmp_path, text, name="run.cfg"):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


def run_cli(argv):
    return cli.main(argv)


def test_config_parser(tmp_path):
    path = write_cfg(tmp_path, "a = 1.5  # trailing comment\n\n# full line\nb = x\n")
    cfg = cli.load_config(path)
    assert cfg == {"a": "1.5", "b": "x"}
    assert cli.cfg_get(cfg, "a") == 1.5
    with pytest.raises(cli.ConfigError):
        cli.cfg_get(cfg, "missing")
    with pytest.raises(cli.ConfigError):
        cli.cfg_get(cfg, "b")  # not a float


def test_config_parser_rejects_malformed(tmp_path):
    for bad in ("just a line\n", "a =\n", "= 3\n", "a = 1\na = 2\n"):
        path = write_cfg(tmp_path, bad)
        with pytest.raises(cli.ConfigError):
            cli.load_config(path)


def test_missing_config_file_exits_2(tmp_path):
    code = run_cli(["interference", "--config", str(tmp_path / "nope.cfg")])
    assert code == 2


def test_constants_output(tmp_path):
    out = tmp_path / "const.json"
    assert run_cli(["constants", "--out", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["schema_version"] == "1"
    assert float(data["hbar_ev_fs"]) == pytest.approx(0.6582119569)
    assert float(data["h_ev_fs"]) == pytest.approx(4.135667696)


def test_verify_passes_and_exit_zero(tmp_path):
    out = tmp_path / "verify.json"
    assert run_cli(["verify", "--samples", "50", "--seed", "42",
                    "--out", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["all_passed"] is True
    flags = [f for suite in data["suites"].values()
             for r in suite for f in r["convention_flags"]]
    assert "gamma_dot_n_squared_plus_one" in flags
    assert "gamma5_squared_plus_one" in flags
    # informational entries never decide the exit code
    info = [r for suite in data["suites"].values() for r in suite
            if r["informational"]]
    assert info and any(not r["passed"] for r in info)


def test_verify_zero_samples_is_config_error():
    assert run_cli(["verify", "--samples", "0"]) == 2


def test_wigner_collinear_angle_zero(tmp_path):
    out = tmp_path / "w.json"
    assert run_cli(["wigner", "--boost1", "z:0.8", "--boost2", "z:0.5",
                    "--out", str(out)]) == 0
    data = json.loads(out.read_text())
    assert abs(float(data["rotation"]["angle"])) < 1e-9


def test_wigner_orthogonal_matches_oracle(tmp_path):
    from shpqm import minkowski as mk, sl2c
    out = tmp_path / "w.json"
    assert run_cli(["wigner", "--boost1", "x:1.0", "--boost2", "y:1.0",
                    "--out", str(out)]) == 0
    data = json.loads(out.read_text())
    lam = sl2c.spinor_map(sl2c.sl2c_boost("x", 1.0)
                          @ sl2c.sl2c_boost("y", 1.0))
    # 4x4 polar decomposition oracle
    vals, vecs = np.linalg.eigh(lam.T @ lam)
    b = vecs @ np.diag(np.sqrt(vals)) @ vecs.T
    r = lam @ np.linalg.inv(b)
    angle = np.arccos(np.clip((np.trace(r[1:, 1:]) - 1) / 2, -1, 1))
    assert float(data["rotation"]["angle"]) == pytest.approx(angle, abs=1e-9)


def test_wigner_bad_spec_exits_2():
    assert run_cli(["wigner", "--boost1", "q:1.0", "--boost2", "y:1.0"]) == 2
    assert run_cli(["wigner", "--boost1", "x:abc", "--boost2", "y:1.0"]) == 2


def test_interference_json_summary(tmp_path):
    cfg = write_cfg(tmp_path, REFERENCE_CFG)
    out = tmp_path / "scan.json"
    assert run_cli(["interference", "--config", cfg, "--out", str(out)]) == 0
    data = json.loads(out.read_text())
    assert float(data["fringe_period_fs"]) == pytest.approx(0.9847, abs=1e-3)
    assert data["flat_oscillation"] is False
    feas = data["feasibility"]
    assert float(feas["computed_min_delta_e_ev"]) == pytest.approx(
        0.4388, abs=1e-3)
    assert float(feas["quoted_threshold_ev"]) == 1e-3
    assert float(feas["quoted_linewidth_ev"]) == 1e-6
    assert feas["threshold_discrepancy"] is True


def test_interference_csv(tmp_path):
    cfg = write_cfg(tmp_path, REFERENCE_CFG)
    out = tmp_path / "scan.csv"
    assert run_cli(["interference", "--config", cfg, "--format", "csv",
                    "--out", str(out)]) == 0
    raw = out.read_bytes()
    assert b"\r" not in raw  # LF endings
    lines = raw.decode("utf-8").splitlines()
    assert lines[0] == "delta_t_fs,probability,envelope,interference_term"
    assert len(lines) == 2002
    for line in lines[1:]:
        dt, p, env, osc = (float(v) for v in line.split(","))
        assert p >= -1e-12
        assert p == pytest.approx(env + osc, abs=1e-12)


def test_interference_aliasing_guard(tmp_path):
    cfg = write_cfg(tmp_path, REFERENCE_CFG.replace("samples = 2001",
                                                "samples = 40"))
    assert run_cli(["interference", "--config", cfg]) == 2


def test_interference_equal_energy_flat_flag(tmp_path):
    cfg = write_cfg(tmp_path, REFERENCE_CFG.replace("e2_ev = 39.2",
                                                "e2_ev = 35.0"))
    out = tmp_path / "flat.json"
    assert run_cli(["interference", "--config", cfg, "--out", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["flat_oscillation"] is True
    assert "visibility" in data


def test_determinism_byte_identical(tmp_path):
    cfg = write_cfg(tmp_path, REFERENCE_CFG)
    outs = []
    for name in ("a", "b"):
        v = tmp_path / f"verify_{name}.json"
        s = tmp_path / f"scan_{name}.csv"
        assert run_cli(["verify", "--samples", "30", "--seed", "7",
                        "--out", str(v)]) == 0
        assert run_cli(["interference", "--config", cfg, "--format", "csv",
                        "--out", str(s)]) == 0
        outs.append((v.read_bytes(), s.read_bytes()))
    assert outs[0] == outs[1]


CLASSICAL_CFG = """\
mode = classical
mass_param = 2.0
t0 = 0.0
x0 = 0.0
y0 = 0.0
z0 = 0.0
E0 = 3.0
px0 = 0.4
py0 = -0.2
pz0 = 0.7
dtau = 0.01
steps = 500
"""


def test_evolve_classical_conserves_k(tmp_path):
    cfg = write_cfg(tmp_path, CLASSICAL_CFG)
    out = tmp_path / "traj.csv"
    assert run_cli(["evolve", "--config", cfg, "--format", "csv",
                    "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "tau,t,x,y,z,E,px,py,pz,K"
    ks = [float(line.split(",")[-1]) for line in lines[1:]]
    assert max(ks) - min(ks) < 1e-8 * max(abs(ks[0]), 1.0)


def test_evolve_quantum_norm(tmp_path):
    cfg = write_cfg(tmp_path, """\
mode = quantum
mass_param = 511000.0
e_center = 35.0
e_width = 0.5
pz = 1.0
dtau = 25.0
num = 256
""")
    out = tmp_path / "packet.csv"
    assert run_cli(["evolve", "--config", cfg, "--format", "csv",
                    "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "p0,prob_density,phase"
    rows = np.array([[float(v) for v in line.split(",")]
                     for line in lines[1:]])
    de = rows[1, 0] - rows[0, 0]
    assert np.sum(rows[:, 1]) * de == pytest.approx(1.0, abs=1e-8)


def test_evolve_bad_mode_exits_2(tmp_path):
    cfg = write_cfg(tmp_path, "mode = nonsense\n")
    assert run_cli(["evolve", "--config", cfg]) == 2


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "shpqm.cli", "constants"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["schema_version"] == "1"
