"""Command-line interface emitting CSV or JSON envelopes.

Subcommands: measures, potentials, curve, special-points, scan, channel.
Exit codes: 0 ok, 2 usage or parse error, 3 numerical non-convergence
(payload still emitted).  CSV uses a header row, '.' decimals and 12
significant digits, with envelope metadata in leading '#' comment lines;
JSON mirrors the same columns.
"""
from __future__ import annotations

import argparse
import json
import sys
from datetime import datetime, timezone

import numpy as np

from . import boundaries, channels, measures, potentials, scan, states
from .errors import ContainmentViolation, EntPotError

SCHEMA_VERSION = "1"

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NOT_CONVERGED = 3


def _fmt(value) -> str:
    if isinstance(value, (bool, np.bool_)):
        return "1" if value else "0"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return f"{float(value):.12g}"
    return str(value)


class Envelope:
    def __init__(self, command: str, parameters: dict, columns: list[str], rows: list[list], notes: dict | None = None):
        self.command = command
        self.parameters = parameters
        self.columns = columns
        self.rows = rows
        self.notes = notes or {}

    def to_csv(self, timestamp: bool) -> str:
        lines = [f"# schema_version={SCHEMA_VERSION}", f"# command={self.command}"]
        lines.append("# parameters=" + json.dumps(self.parameters, sort_keys=True))
        if timestamp:
            lines.append("# produced_at=" + datetime.now(timezone.utc).isoformat())
        for key, val in sorted(self.notes.items()):
            lines.append(f"# {key}={_fmt(val)}")
        lines.append(",".join(self.columns))
        for row in self.rows:
            lines.append(",".join(_fmt(v) for v in row))
        return "\n".join(lines) + "\n"

    def to_json(self, timestamp: bool) -> str:
        def clean(v):
            if isinstance(v, (bool, np.bool_)):
                return bool(v)
            if isinstance(v, (int, np.integer)):
                return int(v)
            if isinstance(v, (float, np.floating)):
                return float(f"{float(v):.12g}")
            return v

        doc = {
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "parameters": self.parameters,
            "payload": {
                "columns": self.columns,
                "rows": [[clean(v) for v in row] for row in self.rows],
            },
        }
        if timestamp:
            doc["produced_at"] = datetime.now(timezone.utc).isoformat()
        if self.notes:
            doc["notes"] = {k: clean(v) for k, v in sorted(self.notes.items())}
        return json.dumps(doc, indent=2) + "\n"


def _emit(env: Envelope, args) -> None:
    text = env.to_json(not args.no_timestamp) if args.format == "json" else env.to_csv(not args.no_timestamp)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_pair(text: str, name: str) -> tuple[float, float]:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"{name} expects two comma-separated values, got {text!r}")
    return float(parts[0]), float(parts[1])


def _build_state(args) -> np.ndarray:
    fam = args.family
    if fam == "pure":
        return states.pure_output(args.p)
    if fam == "horodecki":
        return states.horodecki_state(args.p)
    if fam == "gh":
        if args.q is None:
            raise ValueError("--family gh needs --q")
        return states.generalized_horodecki(args.p, args.q)
    if fam == "bell":
        if args.lambdas is None:
            raise ValueError("--family bell needs --lambda a,b,c,d")
        lam = [float(v) for v in args.lambdas.split(",")]
        return states.bell_diagonal(lam)
    if fam == "werner":
        if args.n_value is None:
            raise ValueError("--family werner needs --n")
        return states.werner(args.n_value)
    if fam == "bs-output":
        x = args.x * np.exp(1j * args.phi)
        return states.balanced_bs_output(states.single_qubit(args.p, x))
    raise ValueError(f"unknown family {fam!r}")


def cmd_measures(args) -> int:
    rho = _build_state(args)
    res = measures.ree_numerical(rho, tol=args.ree_tol)
    row = [
        measures.negativity(rho),
        measures.concurrence(rho),
        measures.eof(measures.concurrence(rho)),
        res.value,
        res.iterations,
        res.converged,
        res.final_step_norm,
    ]
    env = Envelope(
        "measures",
        _family_params(args),
        ["negativity", "concurrence", "eof", "ree", "ree_iterations", "ree_converged", "ree_step_norm"],
        [row],
    )
    _emit(env, args)
    return EXIT_OK if res.converged else EXIT_NOT_CONVERGED


def _family_params(args) -> dict:
    out = {"family": args.family, "p": args.p}
    for key in ("q", "x", "phi"):
        val = getattr(args, key, None)
        if val is not None:
            out[key] = val
    if args.lambdas is not None:
        out["lambda"] = args.lambdas
    if args.n_value is not None:
        out["n"] = args.n_value
    return out


def _build_pipeline(args) -> potentials.GeneralizedPipeline | None:
    has_theta = args.theta_deg is not None
    has_pdc = args.pdc is not None
    has_adc = args.adc is not None
    if not (has_theta or has_pdc or has_adc):
        return None
    bs = states.BeamSplitterConfig(np.deg2rad(args.theta_deg)) if has_theta else states.BeamSplitterConfig()
    pdc = _parse_pair(args.pdc, "--pdc") if has_pdc else None
    adc = _parse_pair(args.adc, "--adc") if has_adc else None
    return potentials.GeneralizedPipeline(bs=bs, adc=adc, pdc=pdc)


def cmd_potentials(args) -> int:
    sigma = states.single_qubit(args.p, args.x * np.exp(1j * args.phi))
    pipe = _build_pipeline(args)
    params = {"p": args.p, "x": args.x, "phi": args.phi}
    if pipe is None:
        triple = potentials.standard_potentials(sigma, ree_tol=args.ree_tol)
        cols = ["np", "cp", "reep", "converged"]
    else:
        triple = potentials.generalized_potentials(sigma, pipe, ree_tol=args.ree_tol)
        cols = ["gnp", "gcp", "greep", "converged"]
        params.update(
            theta_deg=args.theta_deg if args.theta_deg is not None else 90.0,
            pdc=args.pdc,
            adc=args.adc,
        )
    env = Envelope(
        "potentials", params, cols,
        [[triple.np, triple.cp, triple.reep, triple.converged]],
    )
    _emit(env, args)
    return EXIT_OK if triple.converged else EXIT_NOT_CONVERGED


_KIND_MAP = {
    "pure": "pure",
    "horodecki": "horodecki",
    "bell": "bell_diagonal",
    "rho-a": "rho_A",
    "rho-z": "rho_Z",
    "gh-fixed-p": "gh_fixed_p",
}


def cmd_curve(args) -> int:
    kind = _KIND_MAP[args.kind]
    curve = boundaries.boundary_curve(
        kind, args.n, args.plane, p_fixed=args.p, ree_tol=args.ree_tol
    )
    rows = []
    for i in range(curve.abscissa.size):
        par = list(curve.params[i]) if curve.params.ndim == 2 else [curve.params[i]]
        while len(par) < 2:
            par.append(0.0)
        rows.append([curve.abscissa[i], curve.ordinate[i], par[0], par[1]])
    env = Envelope(
        "curve",
        {"kind": args.kind, "plane": args.plane, "n": args.n, "p": args.p},
        ["abscissa", "ordinate", "param1", "param2"],
        rows,
        notes={"axes": f"{curve.axes[0]}|{curve.axes[1]}", "param_names": "|".join(curve.param_names)},
    )
    _emit(env, args)
    return EXIT_OK


def cmd_special_points(args) -> int:
    sp = boundaries.special_points(ree_tol=args.ree_tol)
    env = Envelope(
        "special-points", {},
        ["n1", "e1", "n2", "e2", "n3", "e3"],
        [[sp.n1, sp.e1, sp.n2, sp.e2, sp.n3, sp.e3]],
    )
    _emit(env, args)
    return EXIT_OK


def cmd_scan(args) -> int:
    cfg = scan.ScanConfig(n_states=args.n, seed=args.seed, ree_tol=args.ree_tol)
    records = scan.run_scan(cfg)
    rows = [
        [r.p, r.x_abs, r.phi, r.potentials.np, r.potentials.cp, r.potentials.reep, r.potentials.converged]
        for r in records
    ]
    notes = {"failures": scan.failure_count(records)}
    curves = []
    if args.rho_z_curve:
        curves.append(_read_curve_csv(args.rho_z_curve))
    planes = ["n-c", "ree-c"] + (["ree-n"] if curves else [])
    for plane in planes:
        try:
            rep = scan.containment_report(records, curves, plane, tol=args.containment_tol)
            notes[f"containment_{plane}_violations"] = rep.n_violations
            notes[f"containment_{plane}_max_excess"] = rep.max_excess
            if rep.min_bell_gap is not None:
                notes[f"containment_{plane}_min_bell_gap"] = rep.min_bell_gap
        except ContainmentViolation as exc:
            notes[f"containment_{plane}_violations"] = len(exc.offenders)
    env = Envelope(
        "scan",
        {"n": args.n, "seed": args.seed, "ree_tol": args.ree_tol},
        ["p", "x_abs", "phi", "np", "cp", "reep", "converged"],
        rows,
        notes=notes,
    )
    _emit(env, args)
    return EXIT_OK if scan.failure_count(records) == 0 else EXIT_NOT_CONVERGED


def _read_curve_csv(path: str) -> boundaries.BoundaryCurve:
    """Read back a curve emitted by the curve subcommand."""
    kind = plane = None
    rows = []
    with open(path, encoding="utf-8") as fh:
        header_seen = False
        for line in fh:
            line = line.strip()
            if not line:
                continue
            if line.startswith("#"):
                if line.startswith("# parameters="):
                    par = json.loads(line.split("=", 1)[1])
                    kind = _KIND_MAP.get(par.get("kind"), par.get("kind"))
                    plane = par.get("plane")
                continue
            if not header_seen:
                header_seen = True
                continue
            rows.append([float(v) for v in line.split(",")])
    data = np.array(rows)
    return boundaries.BoundaryCurve(
        kind=kind or "rho_Z",
        plane=plane or "ree-n",
        axes=boundaries.PLANES.get(plane or "ree-n", ("E_R", "N")),
        abscissa=data[:, 0],
        ordinate=data[:, 1],
        params=data[:, 2:4],
        param_names=("param1", "param2"),
    )


def cmd_channel(args) -> int:
    pars = _parse_pair(args.params, "--params")
    if args.type == "pdc":
        closed = channels.pdc_on_pure(args.q, *pars)
        direct = channels.apply_local_channel(
            channels._psi_q_density(args.q), channels.pdc_kraus(pars[0]), channels.pdc_kraus(pars[1])
        )
        extra = []
        extra_cols = []
    else:
        closed, gh = channels.adc_on_pure(args.q, *pars)
        direct = channels.apply_local_channel(
            channels._psi_q_density(args.q), channels.adc_kraus(pars[0]), channels.adc_kraus(pars[1])
        )
        extra = [gh.p, gh.q]
        extra_cols = ["gh_weight", "gh_balance"]
    mismatch = float(np.abs(closed - direct).max())
    res = measures.ree_numerical(closed, tol=args.ree_tol)
    env = Envelope(
        "channel",
        {"type": args.type, "q": args.q, "params": args.params},
        ["negativity", "concurrence", "ree", "kraus_mismatch"] + extra_cols,
        [[measures.negativity(closed), measures.concurrence(closed), res.value, mismatch] + extra],
    )
    _emit(env, args)
    return EXIT_OK if res.converged else EXIT_NOT_CONVERGED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="entpot",
        description="Entanglement potentials of single-qubit optical states.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--out", default=None, help="output path (default stdout)")
        p.add_argument("--ree-tol", type=float, default=1e-9)
        p.add_argument("--no-timestamp", action="store_true")

    def state_flags(p):
        p.add_argument("--family", choices=("pure", "horodecki", "gh", "bell", "werner", "bs-output"), required=True)
        p.add_argument("--p", type=float, default=0.0)
        p.add_argument("--q", type=float, default=None)
        p.add_argument("--x", type=float, default=0.0)
        p.add_argument("--phi", type=float, default=0.0)
        p.add_argument("--lambda", dest="lambdas", default=None, metavar="A,B,C,D")
        p.add_argument("--n", dest="n_value", type=float, default=None)

    p = sub.add_parser("measures", help="entanglement measures of a two-qubit state")
    common(p)
    state_flags(p)
    p.set_defaults(func=cmd_measures)

    p = sub.add_parser("potentials", help="potentials of a single-qubit state")
    common(p)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--x", type=float, default=0.0)
    p.add_argument("--phi", type=float, default=0.0)
    p.add_argument("--theta-deg", type=float, default=None)
    p.add_argument("--pdc", default=None, metavar="K1,K2")
    p.add_argument("--adc", default=None, metavar="G1,G2")
    p.set_defaults(func=cmd_potentials)

    p = sub.add_parser("curve", help="sample a boundary family")
    common(p)
    p.add_argument("--kind", choices=tuple(_KIND_MAP), required=True)
    p.add_argument("--plane", choices=("n-c", "ree-c", "ree-n"), required=True)
    p.add_argument("--n", type=int, default=101)
    p.add_argument("--p", type=float, default=None, help="fixed weight for gh-fixed-p")
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("special-points", help="the three (REE, N) special points")
    common(p)
    p.set_defaults(func=cmd_special_points)

    p = sub.add_parser("scan", help="Monte-Carlo scan of input qubits")
    common(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--rho-z-curve", default=None, help="rho_Z curve CSV enabling the (REE,N) check")
    p.add_argument("--containment-tol", type=float, default=1e-5,
                   help="envelope tolerance; loosen for coarse rho_Z curves")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("channel", help="damping-channel demonstration")
    common(p)
    p.add_argument("--type", choices=("pdc", "adc"), required=True)
    p.add_argument("--q", type=float, required=True)
    p.add_argument("--params", required=True, metavar="A,B")
    p.set_defaults(func=cmd_channel)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (EntPotError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
