"""Command-line entry point.

Commands
--------
witness             max l1 norm over the reachable set (JSON report)
critical-beta       smallest beta generating magic; optional sweep over c (CSV)
critical-coherence  smallest magic-generating coherence; optional sweep over beta (CSV)
cone-mesh           boundary mesh of the reachable set (CSV)
magic-volume        Monte-Carlo volume of the nonstabiliser part (JSON)
distill-map         beta_dist landscape over Hamiltonian orientations (CSV + JSON)
optimal-h           the optimal Hamiltonian direction and its escape distance (JSON)
catalytic           catalytic critical inverse temperature (JSON)

All commands accept --p --c --nx --ny --nz --beta --gap --out --seed
--verify plus a JSON --config file whose entries act as flag defaults.
Outputs are byte-identical across reruns with identical inputs.  Exit codes:
0 success, 2 invalid input, 3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import __version__
from .extremal import (
    optimal_hamiltonian,
    thermodynamic_radius,
    v_brute_force,
    v_closed_form,
)
from .catalytic import catalytic_critical_beta, free_energy
from .distill import landscape
from .oracle import cone_sample_witness
from .stabiliser import DistillThresholds
from .thermal import (
    EnergyFrameState,
    HamiltonianDirection,
    ThermalContext,
    cone_contains,
    cone_mesh,
)
from .volume import cone_volume, magic_volume
from .witness import (
    critical_beta,
    critical_beta_closed_form,
    critical_coherence,
    witness,
)

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_VERIFY = 3

# --verify tolerances: sampled witness may trail the closed form by the grid
# bias; decisions must agree outside a small margin around the threshold.
VERIFY_WITNESS_GAP = 5e-3
VERIFY_DECISION_MARGIN = 1e-4


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_INVALID):
        super().__init__(message)
        self.code = code


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--p", type=float, default=0.3, help="ground population")
    parser.add_argument("--c", type=float, default=0.0, help="coherence magnitude")
    parser.add_argument("--phase", type=float, default=None, help="coherence phase")
    parser.add_argument("--nx", type=float, default=1.0, help="Hamiltonian x component")
    parser.add_argument("--ny", type=float, default=1.0, help="Hamiltonian y component")
    parser.add_argument("--nz", type=float, default=1.0, help="Hamiltonian z component")
    parser.add_argument("--beta", type=float, default=1.0, help="inverse temperature")
    parser.add_argument("--gap", type=float, default=2.0, help="energy gap")
    parser.add_argument("--out", type=str, default=None, help="output file path")
    parser.add_argument("--seed", type=int, default=0, help="sampler seed")
    parser.add_argument(
        "--verify",
        action="store_true",
        help="cross-check the result against a brute-force oracle",
    )
    parser.add_argument(
        "--config", type=str, default=None, help="JSON file with flag defaults"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="thermomagic",
        description="Magic-state generation under single-qubit thermal operations",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_wit = sub.add_parser("witness", help="evaluate the generation witness")
    _add_common(p_wit)

    p_cb = sub.add_parser("critical-beta", help="critical inverse temperature")
    _add_common(p_cb)
    p_cb.add_argument("--beta-max", type=float, default=10.0)
    p_cb.add_argument(
        "--sweep-c",
        nargs=3,
        type=float,
        metavar=("LO", "HI", "N"),
        default=None,
        help="sweep the coherence and emit CSV c,beta_crt",
    )

    p_cc = sub.add_parser("critical-coherence", help="critical coherence")
    _add_common(p_cc)
    p_cc.add_argument(
        "--sweep-beta",
        nargs=3,
        type=float,
        metavar=("LO", "HI", "N"),
        default=None,
        help="sweep the inverse temperature and emit CSV beta,c_crt",
    )

    p_mesh = sub.add_parser("cone-mesh", help="reachable-set boundary mesh")
    _add_common(p_mesh)
    p_mesh.add_argument("--n-q", type=int, default=64)
    p_mesh.add_argument("--n-phi", type=int, default=96)

    p_vol = sub.add_parser("magic-volume", help="nonstabiliser cone volume")
    _add_common(p_vol)
    p_vol.add_argument("--n-samples", type=int, default=1_000_000)

    p_map = sub.add_parser("distill-map", help="distillability landscape")
    _add_common(p_map)
    p_map.add_argument("--orbit", choices=("T", "H"), default="T")
    p_map.add_argument("--n-lon", type=int, default=181)
    p_map.add_argument("--n-lat", type=int, default=91)
    p_map.add_argument("--beta-max", type=float, default=10.0)
    p_map.add_argument("--f-thr-t", type=float, default=0.91)
    p_map.add_argument("--f-thr-h", type=float, default=0.93)
    p_map.add_argument(
        "--degrees", action="store_true", help="emit CSV angles in degrees"
    )

    p_opt = sub.add_parser("optimal-h", help="optimal Hamiltonian direction")
    _add_common(p_opt)
    p_opt.add_argument(
        "--m",
        type=float,
        default=None,
        help="override the axial radius (default |1 - 2 p exp(-beta*gap)|)",
    )

    p_cat = sub.add_parser("catalytic", help="catalytic critical inverse temperature")
    _add_common(p_cat)
    p_cat.add_argument("--beta-max", type=float, default=10.0)
    return parser


def _apply_config(args: argparse.Namespace, argv: list[str]) -> None:
    if args.config is None:
        return
    try:
        with open(args.config) as fh:
            conf = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise CliError(f"cannot read config file: {exc}")
    if not isinstance(conf, dict):
        raise CliError("config file must contain a JSON object")
    explicit = {tok.split("=", 1)[0] for tok in argv if tok.startswith("--")}
    for key, value in conf.items():
        dest = key.replace("-", "_")
        flag = "--" + key.replace("_", "-")
        if not hasattr(args, dest):
            raise CliError(f"unknown config key {key!r}")
        if flag in explicit:
            continue  # explicit flags override the config
        setattr(args, dest, value)


def _state(args) -> EnergyFrameState:
    try:
        return EnergyFrameState(p=args.p, c=args.c, phase=args.phase)
    except ValueError as exc:
        raise CliError(str(exc))


def _hamiltonian(args) -> HamiltonianDirection:
    try:
        return HamiltonianDirection(n=np.array([args.nx, args.ny, args.nz]), gap=args.gap)
    except ValueError as exc:
        raise CliError(str(exc))


def _context(args, H: HamiltonianDirection) -> ThermalContext:
    try:
        return ThermalContext.create(args.beta, H.gap)
    except ValueError as exc:
        raise CliError(str(exc))


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    try:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise CliError(f"cannot write output file: {exc}")


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _csv_cell(value: float | None) -> str:
    return "" if value is None else "%.17g" % value


def _echo(args, H) -> dict:
    return {
        "p": args.p,
        "c": args.c,
        "direction": [float(x) for x in H.n],
        "beta": args.beta,
        "gap": args.gap,
    }


def _cmd_witness(args) -> int:
    state, H = _state(args), _hamiltonian(args)
    ctx = _context(args, H)
    report = witness(state, H, ctx)
    payload = report.to_json_dict()
    payload["config"] = _echo(args, H)
    code = EXIT_OK
    if args.verify:
        exceeded, sampled = cone_sample_witness(state, H, ctx)
        deviation = report.value - sampled
        ok_value = -1e-9 <= deviation <= VERIFY_WITNESS_GAP
        ok_decision = (
            abs(report.value - 1.0) <= VERIFY_DECISION_MARGIN
            or exceeded == report.magic
        )
        payload["verification"] = {
            "sampled_max": sampled,
            "deviation": deviation,
            "decision_agrees": bool(ok_decision),
        }
        if not (ok_value and ok_decision):
            code = EXIT_VERIFY
    _emit(_json_text(payload), args.out)
    return code


def _cmd_critical_beta(args) -> int:
    state, H = _state(args), _hamiltonian(args)
    if args.beta_max <= 0.0:
        raise CliError("beta-max must be positive")
    if args.sweep_c is not None:
        lo, hi, n = args.sweep_c
        n = int(n)
        if n < 1 or hi < lo or lo < 0.0:
            raise CliError("invalid sweep range")
        rows = ["c,beta_crt"]
        results = []
        for cval in np.linspace(lo, hi, n):
            try:
                st = EnergyFrameState(p=args.p, c=float(cval), phase=args.phase)
            except ValueError as exc:
                raise CliError(str(exc))
            bc = critical_beta(st, H, beta_max=args.beta_max)
            results.append((float(cval), bc))
            rows.append(f"{_csv_cell(float(cval))},{_csv_cell(bc)}")
        text = "\n".join(rows) + "\n"
        code = EXIT_OK
        if args.verify and not _verify_critical_beta(results, args, H):
            code = EXIT_VERIFY
        _emit(text, args.out)
        return code
    bc = critical_beta(state, H, beta_max=args.beta_max)
    payload = {"beta_crt": bc, "beta_max": args.beta_max, "config": _echo(args, H)}
    code = EXIT_OK
    if args.verify and not _verify_critical_beta([(args.c, bc)], args, H):
        payload["verification"] = {"passed": False}
        code = EXIT_VERIFY
    elif args.verify:
        payload["verification"] = {"passed": True}
    _emit(_json_text(payload), args.out)
    return code


def _verify_critical_beta(results, args, H) -> bool:
    """Crossing check: witness <= 1 just below, > 1 just above; closed form
    cross-check on incoherent entries when applicable."""
    picks = results[:: max(1, len(results) // 5)]
    for cval, bc in picks:
        if bc is None:
            continue
        state = EnergyFrameState(p=args.p, c=cval, phase=args.phase)
        above = witness(state, H, ThermalContext.create(bc + 1e-6, H.gap)).value
        if above <= 1.0 - 1e-9:
            return False
        if bc > 1e-6:
            below = witness(
                state, H, ThermalContext.create(max(bc - 1e-4, 0.0), H.gap)
            ).value
            if below > 1.0 + 1e-9:
                return False
        if cval == 0.0 and bc > 1e-6:
            closed = critical_beta_closed_form(args.p, H)
            gamma_at = 1.0 / (1.0 + np.exp(-bc * H.gap))
            if closed is not None and closed > 0.0 and args.p < gamma_at:
                if abs(bc - closed) > 1e-6:
                    return False
    return True


def _cmd_critical_coherence(args) -> int:
    H = _hamiltonian(args)
    if args.sweep_beta is not None:
        lo, hi, n = args.sweep_beta
        n = int(n)
        if n < 1 or hi < lo or lo < 0.0:
            raise CliError("invalid sweep range")
        rows = ["beta,c_crt"]
        results = []
        for bval in np.linspace(lo, hi, n):
            ctx = ThermalContext.create(float(bval), H.gap)
            cc = critical_coherence(args.p, H, ctx)
            results.append((float(bval), cc))
            rows.append(f"{_csv_cell(float(bval))},{_csv_cell(cc)}")
        text = "\n".join(rows) + "\n"
        code = EXIT_OK
        if args.verify and not _verify_critical_coherence(results, args, H):
            code = EXIT_VERIFY
        _emit(text, args.out)
        return code
    ctx = _context(args, H)
    cc = critical_coherence(args.p, H, ctx)
    payload = {"c_crt": cc, "config": _echo(args, H)}
    code = EXIT_OK
    if args.verify and not _verify_critical_coherence([(args.beta, cc)], args, H):
        payload["verification"] = {"passed": False}
        code = EXIT_VERIFY
    elif args.verify:
        payload["verification"] = {"passed": True}
    _emit(_json_text(payload), args.out)
    return code


def _verify_critical_coherence(results, args, H) -> bool:
    picks = results[:: max(1, len(results) // 5)]
    for bval, cc in picks:
        if cc is None:
            continue
        ctx = ThermalContext.create(bval, H.gap)
        cap = float(np.sqrt(max(args.p * (1.0 - args.p), 0.0)))
        above = witness(
            EnergyFrameState(p=args.p, c=min(cc + 1e-6, cap)), H, ctx
        ).value
        if above <= 1.0 - 1e-9 and cc + 1e-6 <= cap:
            return False
        if cc > 1e-9:
            below = witness(
                EnergyFrameState(p=args.p, c=max(cc - 1e-6, 0.0)), H, ctx
            ).value
            if below > 1.0 + 1e-9:
                return False
    return True


def _cmd_cone_mesh(args) -> int:
    state, H = _state(args), _hamiltonian(args)
    ctx = _context(args, H)
    if args.n_q < 2 or args.n_phi < 3:
        raise CliError("need --n-q >= 2 and --n-phi >= 3")
    mesh = cone_mesh(state, H, ctx, n_q=args.n_q, n_phi=args.n_phi)
    code = EXIT_OK
    if args.verify:
        pts = mesh.points.reshape(-1, 3)
        if not bool(np.all(cone_contains(pts, state, H, ctx))):
            code = EXIT_VERIFY
    _emit(mesh.to_csv(), args.out)
    return code


def _cmd_magic_volume(args) -> int:
    state, H = _state(args), _hamiltonian(args)
    ctx = _context(args, H)
    if args.n_samples < 1000:
        raise CliError("need --n-samples >= 1000")
    magic = magic_volume(state, H, ctx, n_samples=args.n_samples, seed=args.seed)
    reachable = cone_volume(state, H, ctx, n_samples=args.n_samples, seed=args.seed)
    payload = magic.to_json_dict()
    payload["reachable_fraction"] = reachable.fraction
    payload["config"] = _echo(args, H)
    code = EXIT_OK
    if args.verify:
        report = witness(state, H, ctx)
        ok = magic.fraction <= reachable.fraction + 1e-15
        if not report.magic and magic.fraction != 0.0:
            ok = False
        payload["verification"] = {"witness": report.value, "passed": bool(ok)}
        if not ok:
            code = EXIT_VERIFY
    _emit(_json_text(payload), args.out)
    return code


def _cmd_distill_map(args) -> int:
    state = _state(args)
    if args.n_lon < 2 or args.n_lat < 2:
        raise CliError("need --n-lon >= 2 and --n-lat >= 2")
    if args.beta_max <= 0.0:
        raise CliError("beta-max must be positive")
    thresholds = DistillThresholds(f_thr_t=args.f_thr_t, f_thr_h=args.f_thr_h)
    grid = landscape(
        args.orbit,
        state,
        n_lon=args.n_lon,
        n_lat=args.n_lat,
        gap=args.gap,
        beta_max=args.beta_max,
        thresholds=thresholds,
    )
    code = EXIT_OK
    if args.verify and not _verify_landscape(grid, state, args):
        code = EXIT_VERIFY
    csv_text = grid.to_csv(degrees=args.degrees)
    if args.out is None:
        sys.stdout.write(csv_text)
        sys.stdout.write(grid.to_json())
    else:
        _emit(csv_text, args.out)
        json_path = (
            args.out[: -len(".csv")] + ".json"
            if args.out.endswith(".csv")
            else args.out + ".json"
        )
        _emit(grid.to_json(), json_path)
    return code


def _verify_landscape(grid, state, args) -> bool:
    """Definition check on a few finite cells: the fidelity is at threshold at
    beta_dist and strictly below it slightly earlier."""
    from .distill import direction_from_angles, orbit_fidelity

    finite = np.argwhere(np.isfinite(grid.values))
    if len(finite) == 0:
        return True
    idx = finite[:: max(1, len(finite) // 5)]
    thr = grid.threshold
    for i, j in idx:
        bd = grid.values[i, j]
        H = HamiltonianDirection(
            n=direction_from_angles(grid.lon[j], grid.lat[i]), gap=args.gap
        )
        if orbit_fidelity(bd + 1e-5, grid.orbit, state, H) < thr - 1e-6:
            return False
        if bd > 1e-5 and orbit_fidelity(bd - 1e-4, grid.orbit, state, H) > thr + 1e-6:
            return False
    return True


def _cmd_optimal_h(args) -> int:
    direction = optimal_hamiltonian()
    if args.m is not None:
        m = args.m
        if m < 0.0:
            raise CliError("m must be nonnegative")
    else:
        if args.beta < 0.0:
            raise CliError("inverse temperature must be nonnegative")
        m = thermodynamic_radius(args.p, args.beta, args.gap)
    value = v_closed_form(m)
    all_dirs = (np.array(np.meshgrid(*[[-1.0, 1.0]] * 3)).T.reshape(-1, 3)) / np.sqrt(3)
    payload = {
        "direction": [float(x) for x in direction],
        "all_optimal_directions": [[float(x) for x in d] for d in all_dirs],
        "m": m,
        "distance_outside_octahedron": value,
        "config": {"p": args.p, "beta": args.beta, "gap": args.gap},
    }
    code = EXIT_OK
    if args.verify:
        brute = v_brute_force(m, n_dirs=4000)
        ok = value - 5e-3 <= brute.value <= value + 1e-12
        if value > 0.0:
            cos_lim = np.cos(np.deg2rad(2.0))
            aligned = np.abs(brute.directions @ all_dirs.T).max(axis=1) >= cos_lim
            ok = ok and bool(np.all(aligned))
        payload["verification"] = {"sampled": brute.value, "passed": bool(ok)}
        if not ok:
            code = EXIT_VERIFY
    _emit(_json_text(payload), args.out)
    return code


def _cmd_catalytic(args) -> int:
    state, H = _state(args), _hamiltonian(args)
    if args.beta_max <= 0.0:
        raise CliError("beta-max must be positive")
    bcat = catalytic_critical_beta(state, H, beta_max=args.beta_max)
    payload = {
        "beta_crt_cat": bcat,
        "beta_max": args.beta_max,
        "entropy_units": "nats",
        "config": _echo(args, H),
    }
    if args.beta > 0.0:
        fe = free_energy(state, H, args.beta)
        payload["free_energy_at_beta"] = {
            "value": fe.value,
            "energy": fe.energy,
            "entropy": fe.entropy,
        }
    code = EXIT_OK
    if args.verify and bcat is not None:
        from .catalytic import _feasible

        ok = _feasible(state, H, bcat + 1e-6, 1024)
        if bcat > 1e-6:
            ok = ok and not _feasible(state, H, max(bcat - 1e-4, 1e-12), 1024)
        payload["verification"] = {"passed": bool(ok)}
        if not ok:
            code = EXIT_VERIFY
    _emit(_json_text(payload), args.out)
    return code


_COMMANDS = {
    "witness": _cmd_witness,
    "critical-beta": _cmd_critical_beta,
    "critical-coherence": _cmd_critical_coherence,
    "cone-mesh": _cmd_cone_mesh,
    "magic-volume": _cmd_magic_volume,
    "distill-map": _cmd_distill_map,
    "optimal-h": _cmd_optimal_h,
    "catalytic": _cmd_catalytic,
}


def run(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code not in (0, None) else 0
    try:
        _apply_config(args, argv)
        return _COMMANDS[args.command](args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
