"""Command-line interface: verification suites, induced-rotation queries,
interference scans, evolution demos, and physical constants.

Config files are flat ``key = value`` text with ``#`` comments.  Exit codes:
0 success, 1 verification failure, 2 configuration error.  All numeric output
uses 17 significant digits so identical inputs give byte-identical files.
"""

from __future__ import annotations

import argparse
import io
import json
import sys

import numpy as np

from . import (constants, evolution, interference, little_group, minkowski,
               sl2c, verification)

SCHEMA_VERSION = "1"


class ConfigError(ValueError):
    pass


def fmt(x):
    """17-significant-digit decimal representation."""
    return format(float(x), ".17g")


def load_config(path):
    """Parse a flat key = value config file with # comments."""
    values = {}
    try:
        with open(path, "r", encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected 'key = value'")
        key, _, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not key or not value:
            raise ConfigError(f"{path}:{lineno}: empty key or value")
        if key in values:
            raise ConfigError(f"{path}:{lineno}: duplicate key {key!r}")
        values[key] = value
    return values


def cfg_get(cfg, key, cast=float, default=None):
    if key not in cfg:
        if default is not None:
            return default
        raise ConfigError(f"missing config key {key!r}")
    try:
        return cast(cfg[key])
    except ValueError as exc:
        raise ConfigError(f"config key {key!r}: {exc}") from exc


def _write_text(path, text):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _json_dumps(obj):
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def cmd_constants(args):
    out = {
        "schema_version": SCHEMA_VERSION,
        "hbar_ev_fs": fmt(constants.HBAR_EV_FS),
        "h_ev_fs": fmt(constants.H_EV_FS),
        "electron_mass_ev": fmt(constants.ELECTRON_MASS_EV),
        "examples": {
            "energy_spread_for_0.75_fs_ev":
                fmt(constants.energy_spread_for_time_width(0.75)),
            "fringe_period_for_4.2_ev_fs":
                fmt(constants.fringe_period_fs(4.2)),
        },
    }
    _write_text(args.out, _json_dumps(out))
    return 0


def cmd_verify(args):
    samples = args.samples if args.samples is not None else 1000
    if samples <= 0:
        raise ConfigError("sample count must be positive")
    report = verification.run_all(seed=args.seed, samples=samples)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "seed": args.seed,
        "samples": samples,
        "suites": {
            name: [
                {**r.to_dict(),
                 "max_deviation": fmt(r.max_deviation),
                 "tolerance": fmt(r.tolerance)}
                for r in results
            ]
            for name, results in report.items()
        },
        "all_passed": verification.all_passed(report),
    }
    _write_text(args.out, _json_dumps(payload))
    return 0 if payload["all_passed"] else 1


def _parse_boost(text):
    try:
        axis, _, rap = text.partition(":")
        rapidity = float(rap)
    except ValueError as exc:
        raise ConfigError(f"boost spec {text!r}: expected axis:rapidity") from exc
    if axis not in ("x", "y", "z"):
        raise ConfigError(f"boost axis must be x, y, or z, got {axis!r}")
    return axis, rapidity


def _parse_four_vector(text):
    parts = text.split(",")
    if len(parts) != 4:
        raise ConfigError(f"four-vector {text!r}: expected t,x,y,z")
    try:
        return np.array([float(p) for p in parts])
    except ValueError as exc:
        raise ConfigError(f"four-vector {text!r}: {exc}") from exc


def cmd_wigner(args):
    ax1, w1 = _parse_boost(args.boost1)
    ax2, w2 = _parse_boost(args.boost2)
    if args.n is not None:
        n = _parse_four_vector(args.n)
        try:
            minkowski.check_unit_timelike_future(n)
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc
    else:
        n = minkowski.N0
    a = sl2c.sl2c_boost(ax1, w1) @ sl2c.sl2c_boost(ax2, w2)
    d = little_group.wigner_d(a, _unit(minkowski.apply(sl2c.spinor_map(a), n)))
    angle, axis = little_group.su2_angle_axis(d)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "boost1": {"axis": ax1, "rapidity": fmt(w1)},
        "boost2": {"axis": ax2, "rapidity": fmt(w2)},
        "n": [fmt(v) for v in n],
        "rotation": {
            "matrix_real": [[fmt(v) for v in row] for row in d.real],
            "matrix_imag": [[fmt(v) for v in row] for row in d.imag],
            "angle": fmt(angle),
            "axis": [fmt(v) for v in axis],
        },
    }
    _write_text(args.out, _json_dumps(payload))
    return 0


def _unit(v):
    return v / np.sqrt(-minkowski.dot(v, v))


def _interference_csv(result):
    buf = io.StringIO()
    buf.write("delta_t_fs,probability,envelope,interference_term\n")
    for dt, p, e, i in zip(result.dt_grid_fs, result.probability,
                           result.envelope, result.interference):
        buf.write(f"{fmt(dt)},{fmt(p)},{fmt(e)},{fmt(i)}\n")
    return buf.getvalue()


def cmd_interference(args):
    if args.config is None:
        raise ConfigError("interference requires --config")
    cfg = load_config(args.config)
    emission = interference.EmissionConfig(
        e1_ev=cfg_get(cfg, "e1_ev"),
        e2_ev=cfg_get(cfg, "e2_ev"),
        t_emit1_fs=cfg_get(cfg, "t_emit1_fs"),
        t_emit2_fs=cfg_get(cfg, "t_emit2_fs"),
        sigma_t_fs=cfg_get(cfg, "sigma_t_fs"),
    )
    dt_min = cfg_get(cfg, "dt_min_fs")
    dt_max = cfg_get(cfg, "dt_max_fs")
    samples = args.samples if args.samples is not None else cfg_get(
        cfg, "samples", cast=int, default=4001)
    try:
        result = interference.scan_interference(emission, dt_min, dt_max,
                                                samples)
    except interference.AliasingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    feasibility = interference.feasibility_report(emission)
    if args.format == "csv":
        _write_text(args.out, _interference_csv(result))
    else:
        payload = {
            "schema_version": SCHEMA_VERSION,
            "fringe_period_fs": fmt(result.fringe_period_fs),
            "predicted_period_fs": fmt(result.predicted_period_fs),
            "visibility": fmt(result.visibility),
            "flat_oscillation": result.flat_oscillation,
            "feasibility": {
                k: (fmt(v) if isinstance(v, float) else v)
                for k, v in feasibility.items()
            },
        }
        _write_text(args.out, _json_dumps(payload))
    return 0


def _classical_csv(trajectory, model):
    buf = io.StringIO()
    buf.write("tau,t,x,y,z,E,px,py,pz,K\n")
    for pt in trajectory:
        k = model.hamiltonian(pt.x, pt.p)
        row = [pt.tau, *pt.x, *pt.p, k]
        buf.write(",".join(fmt(v) for v in row) + "\n")
    return buf.getvalue()


def _quantum_csv(packet):
    buf = io.StringIO()
    buf.write("p0,prob_density,phase\n")
    for p, a in zip(packet.momenta, packet.amplitudes):
        buf.write(f"{fmt(p[0])},{fmt(abs(a) ** 2)},{fmt(np.angle(a))}\n")
    return buf.getvalue()


def cmd_evolve(args):
    if args.config is None:
        raise ConfigError("evolve requires --config")
    cfg = load_config(args.config)
    mode = cfg_get(cfg, "mode", cast=str)
    if mode == "classical":
        model = evolution.FreeModel(cfg_get(cfg, "mass_param"))
        x0 = np.array([cfg_get(cfg, k) for k in ("t0", "x0", "y0", "z0")])
        p0 = np.array([cfg_get(cfg, k) for k in ("E0", "px0", "py0", "pz0")])
        dtau = cfg_get(cfg, "dtau")
        steps = cfg_get(cfg, "steps", cast=int)
        try:
            traj = evolution.classical_integrate(
                evolution.PhasePoint(x0, p0), model, dtau, steps)
        except evolution.StepRejectionError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
        _write_text(args.out, _classical_csv(traj, model))
        return 0
    if mode == "quantum":
        packet = evolution.MomentumPacket.gaussian_energy_axis(
            e_center=cfg_get(cfg, "e_center"),
            e_width=cfg_get(cfg, "e_width"),
            spatial_p=[cfg_get(cfg, k, default=0.0)
                       for k in ("px", "py", "pz")],
            mass_param=cfg_get(cfg, "mass_param"),
            num=cfg_get(cfg, "num", cast=int, default=256),
        )
        packet = evolution.free_evolve(packet, cfg_get(cfg, "dtau"))
        _write_text(args.out, _quantum_csv(packet))
        return 0
    raise ConfigError(f"mode must be 'classical' or 'quantum', got {mode!r}")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="shpqm",
        description="Relativistic quantum toolkit: verification suites, "
                    "induced-rotation queries, interference scans, and "
                    "evolution demos.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--config", default=None, help="key=value config file")
        p.add_argument("--seed", type=int, default=42)
        p.add_argument("--samples", type=int, default=None)
        p.add_argument("--out", default=None, help="output path (default stdout)")
        p.add_argument("--format", choices=("csv", "json"), default="json")

    p_verify = sub.add_parser("verify", help="run the identity suites")
    common(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    p_wigner = sub.add_parser("wigner",
                              help="induced rotation of two composed boosts")
    common(p_wigner)
    p_wigner.add_argument("--boost1", required=True, help="axis:rapidity")
    p_wigner.add_argument("--boost2", required=True, help="axis:rapidity")
    p_wigner.add_argument("--n", default=None,
                          help="foliation vector t,x,y,z (default rest)")
    p_wigner.set_defaults(func=cmd_wigner)

    p_itf = sub.add_parser("interference",
                           help="two-electron coincidence scan")
    common(p_itf)
    p_itf.set_defaults(func=cmd_interference)

    p_ev = sub.add_parser("evolve", help="classical or quantum evolution dump")
    common(p_ev)
    p_ev.set_defaults(func=cmd_evolve)

    p_const = sub.add_parser("constants", help="print physical constants")
    common(p_const)
    p_const.set_defaults(func=cmd_constants)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
