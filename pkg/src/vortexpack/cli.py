"""Command-line interface.

Subcommands: verify, observables, scan-pperp, mass-excess, field, moment,
boost-check.  Packet parameters accept either natural units (--sigma-ratio,
--pbar) or physical beam units (--sigma-perp-nm, --kinetic-kev), converted
once at parse time.  CSV output carries 17 significant digits; errors are
emitted as JSON on stderr with exit code 2 (config) or 1 (failed
verification).  VORTEXPACK_THREADS caps the scan worker pool.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import json
import math
import os
import sys

import numpy as np

from . import fermion as fm
from . import field as fd
from . import observables as obs
from . import packet as pk
from . import verify
from .errors import VortexpackError
from .kinematics import (Boost, boost_z, pbar_from_kinetic_kev,
                         sigma_ratio_from_waist_nm)

__all__ = ["main", "build_parser"]


class _ConfigError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """Argument parser that reports errors as machine-readable JSON."""

    def error(self, message):
        raise _ConfigError(message)


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _emit_error(message: str) -> None:
    json.dump({"error": message}, sys.stderr)
    sys.stderr.write("\n")


def _max_workers() -> int:
    try:
        n = int(os.environ.get("VORTEXPACK_THREADS", "1"))
    except ValueError:
        raise _ConfigError("VORTEXPACK_THREADS must be an integer")
    return max(1, n)


def _add_packet_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--ell", type=int, default=0, help="OAM quantum number")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--sigma-ratio", type=float,
                   help="invariant width sigma/m (natural units)")
    g.add_argument("--sigma-perp-nm", type=float,
                   help="beam waist in nm (converted via lambda_c)")
    g2 = p.add_mutually_exclusive_group()
    g2.add_argument("--pbar", type=float,
                    help="mean longitudinal momentum in units of m")
    g2.add_argument("--kinetic-kev", type=float,
                    help="kinetic energy in keV (electron mass assumed)")
    p.add_argument("--helicity", type=float, choices=(0.5, -0.5), default=0.5)
    p.add_argument("--rel-tol", type=float, default=1e-9,
                   help="quadrature relative tolerance override")


def _packet_from_args(args) -> pk.PacketParams:
    if args.sigma_ratio is not None:
        sigma = args.sigma_ratio
    elif args.sigma_perp_nm is not None:
        sigma = sigma_ratio_from_waist_nm(args.sigma_perp_nm)
    else:
        raise _ConfigError("one of --sigma-ratio / --sigma-perp-nm is required")
    if args.kinetic_kev is not None:
        pbar = pbar_from_kinetic_kev(args.kinetic_kev)
    else:
        pbar = args.pbar if args.pbar is not None else 0.0
    return pk.PacketParams(args.ell, sigma, pbar)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="vortexpack",
                     description="Relativistic vortex wave packet toolkit")
    parser.add_argument("--config", type=str,
                        help="JSON file of argument overrides "
                             "(keys are long option names)")
    parser.add_argument("--output-format", choices=("json", "csv"),
                        default="json")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("verify", help="run the full verification suite")

    p_obs = sub.add_parser("observables",
                           help="exact/expansion/quadrature observable report")
    _add_packet_args(p_obs)

    p_scan = sub.add_parser("scan-pperp", help="mean-p_perp vs sqrt(ell) scan")
    p_scan.add_argument("--ell-max", type=int, required=True)
    p_scan.add_argument("--sigma-ratio", type=float, required=True)

    p_me = sub.add_parser("mass-excess", help="invariant mass excess over l=0")
    p_me.add_argument("--ell", type=int, required=True)
    g = p_me.add_mutually_exclusive_group(required=True)
    g.add_argument("--sigma-perp-nm", type=float)
    g.add_argument("--sigma-ratio", type=float)

    p_field = sub.add_parser("field", help="field values on a radial grid")
    _add_packet_args(p_field)
    p_field.add_argument("--t", type=float, default=0.0,
                         help="time in units 1/m")
    p_field.add_argument("--z", type=float, default=0.0)
    p_field.add_argument("--phi", type=float, default=0.0)
    p_field.add_argument("--rho-min", type=float, default=0.5)
    p_field.add_argument("--rho-max", type=float, default=5.0)
    p_field.add_argument("--n-rho", type=int, default=10)

    p_mom = sub.add_parser("moment",
                           help="magnetic moment, Delta, dipole moment")
    _add_packet_args(p_mom)
    p_mom.add_argument("--t", type=float, default=0.0)

    p_boost = sub.add_parser("boost-check", help="Lorentz invariance deltas")
    _add_packet_args(p_boost)
    p_boost.add_argument("--rapidity", type=float, required=True)

    return parser


def _apply_config(argv: list, parser: argparse.ArgumentParser) -> list:
    """Splice --config file contents in as defaults (CLI flags win)."""
    if "--config" not in argv:
        return argv
    i = argv.index("--config")
    try:
        path = argv[i + 1]
    except IndexError:
        raise _ConfigError("--config requires a path")
    try:
        with open(path) as f:
            cfg = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise _ConfigError(f"cannot read config {path}: {e}")
    if not isinstance(cfg, dict):
        raise _ConfigError("config must be a JSON object")
    extra = []
    for key, value in cfg.items():
        extra.extend([f"--{key}", str(value)])
    # defaults go right after the subcommand so explicit flags override them
    rest = argv[:i] + argv[i + 2:]
    for j, tok in enumerate(rest):
        if not tok.startswith("-"):
            return rest[:j + 1] + extra + rest[j + 1:]
    return rest + extra


def _cmd_verify(args) -> int:
    failed = 0
    for r in verify.run_all():
        status = "PASS" if r.passed else "FAIL"
        print(f"[{status}] {r.criterion:2d} {r.name}: {r.detail}")
        failed += not r.passed
    print(f"{len(verify.ALL_CHECKS) - failed}/{len(verify.ALL_CHECKS)} passed")
    return 0 if failed == 0 else 1


def _cmd_observables(args) -> int:
    params = _packet_from_args(args)
    spec = pk.default_spec(params, rel_tol=args.rel_tol)
    mom_exact = obs.mean_four_momentum_exact(params)
    mom_exp = obs.mean_four_momentum_expansion(params)
    mom_quad, mom_err = obs.mean_four_momentum_quadrature(params, spec)
    mass_ex, mass_expn = obs.invariant_mass(params)
    excess = obs.mass_excess(params)
    pperp = obs.mean_pperp(params, spec)
    eps_par, theta0 = obs.paraxiality(params)
    report = {
        "params": {"ell": params.ell, "sigma_ratio": params.sigma,
                   "pbar": params.pbar_z},
        "mean_four_momentum": obs.ObservableReport(
            "mean_four_momentum", mom_exact, mom_exp, mom_quad, mom_err,
            params.paraxiality).as_dict(),
        "invariant_mass": {"exact": mass_ex, "expansion": mass_expn},
        "mass_excess": {"delta_m_over_m": excess.delta_m_over_m,
                        "leading_order": excess.leading_order},
        "mean_pperp": pperp.as_dict(),
        "paraxiality": {"epsilon": eps_par, "theta0": theta0},
    }
    json.dump(report, sys.stdout, indent=2)
    print()
    return 0


def _scan_row(job):
    ell, sigma = job
    params = pk.PacketParams(ell, sigma)
    rep = obs.mean_pperp(params)
    return {
        "ell": ell,
        "sqrt_ell": math.sqrt(ell),
        "pperp_over_sigma_exact": rep.exact / params.sigma_abs,
        "pperp_over_sigma_quadrature": rep.quadrature / params.sigma_abs,
    }


def _cmd_scan_pperp(args) -> int:
    jobs = [(ell, args.sigma_ratio) for ell in range(args.ell_max + 1)]
    with concurrent.futures.ThreadPoolExecutor(_max_workers()) as pool:
        rows = list(pool.map(_scan_row, jobs))
    header = "ell,sqrt_ell,pperp_over_sigma_exact,pperp_over_sigma_quadrature"
    print(header)
    for row in rows:
        print(",".join([str(row["ell"]), _fmt(row["sqrt_ell"]),
                        _fmt(row["pperp_over_sigma_exact"]),
                        _fmt(row["pperp_over_sigma_quadrature"])]))
    return 0


def _cmd_mass_excess(args) -> int:
    sigma = (args.sigma_ratio if args.sigma_ratio is not None
             else sigma_ratio_from_waist_nm(args.sigma_perp_nm))
    excess = obs.mass_excess(pk.PacketParams(args.ell, sigma))
    json.dump({"ell": args.ell, "sigma_ratio": sigma,
               "delta_m_over_m": excess.delta_m_over_m,
               "leading_order": excess.leading_order}, sys.stdout, indent=2)
    print()
    return 0


def _field_row(job):
    params, t, rho, phi, z = job
    x = fd.SpacetimePoint(t, rho, phi, z)
    psi = fd.psi_exact(params, x)
    kg = fd.kg_residual(params, x)
    return (t, rho, phi, z, math.exp(psi.log_abs), psi.phase, kg)


def _cmd_field(args) -> int:
    params = _packet_from_args(args)
    if args.n_rho < 1:
        raise _ConfigError("--n-rho must be >= 1")
    rhos = np.linspace(args.rho_min, args.rho_max, args.n_rho)
    jobs = [(params, args.t, float(r), args.phi, args.z) for r in rhos]
    with concurrent.futures.ThreadPoolExecutor(_max_workers()) as pool:
        rows = list(pool.map(_field_row, jobs))
    print("t,rho,phi,z,abs_psi,phase,kg_residual")
    for row in rows:
        print(",".join(_fmt(v) for v in row))
    return 0


def _cmd_moment(args) -> int:
    params = _packet_from_args(args)
    lam = fm.Helicity(args.helicity)
    spec = pk.default_spec(params, rel_tol=args.rel_tol)
    quad, expn = fm.magnetic_moment(params, lam, spec)
    delta = fm.spin_orbit_delta(params, lam)
    dv = fm.dipole_and_velocity(params, lam, args.t, spec)
    report = {
        "params": {"ell": params.ell, "sigma_ratio": params.sigma,
                   "pbar": params.pbar_z, "helicity": lam.lam, "t": args.t},
        "magnetic_moment_quadrature": {
            "orbital": list(quad.orbital), "spin": list(quad.spin),
            "total": list(quad.total)},
        "magnetic_moment_expansion": {
            "orbital": list(expn.orbital), "spin": list(expn.spin),
            "total": list(expn.total)},
        "spin_orbit_delta": {"exact": delta.exact, "paraxial": delta.paraxial,
                             "rest_frame": delta.rest_frame},
        "dipole": list(dv.dipole),
        "mean_velocity": list(dv.mean_velocity),
        "total_jz": fm.total_jz(params.ell, lam),
    }
    json.dump(report, sys.stdout, indent=2)
    print()
    return 0


def _cmd_boost_check(args) -> int:
    params = _packet_from_args(args)
    eta = args.rapidity
    boosted = params.boosted(eta)
    x = fd.SpacetimePoint(2.0, 1.5, 0.8, 1.2)
    v = boost_z(x.four_vector(), Boost(eta))
    xb = fd.SpacetimePoint.from_cartesian(v.t, v.x, v.y, v.z)
    from .observables import invariant_mass
    rows = [
        ("invariant_mass", invariant_mass(params)[0],
         invariant_mass(boosted)[0]),
        ("varsigma_re", fd.varsigma(params, x).value.real,
         fd.varsigma(boosted, xb).value.real),
        ("varsigma_im", fd.varsigma(params, x).value.imag,
         fd.varsigma(boosted, xb).value.imag),
        ("beam_width", fd.beam_width(params, x), fd.beam_width(boosted, xb)),
        ("t_over_td", fd.t_over_diffraction_time(params, x),
         fd.t_over_diffraction_time(boosted, xb)),
        ("comoving_envelope", fd.comoving_envelope(params, x),
         fd.comoving_envelope(boosted, xb)),
    ]
    print("quantity,lab,boosted,delta")
    for name, a, b in rows:
        print(f"{name},{_fmt(a)},{_fmt(b)},{_fmt(b - a)}")
    return 0


_DISPATCH = {
    "verify": _cmd_verify,
    "observables": _cmd_observables,
    "scan-pperp": _cmd_scan_pperp,
    "mass-excess": _cmd_mass_excess,
    "field": _cmd_field,
    "moment": _cmd_moment,
    "boost-check": _cmd_boost_check,
}


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        argv = _apply_config(argv, parser)
        args = parser.parse_args(argv)
        return _DISPATCH[args.command](args)
    except _ConfigError as e:
        _emit_error(str(e))
        return 2
    except VortexpackError as e:
        _emit_error(f"{type(e).__name__}: {e}")
        return 1
    except ValueError as e:
        _emit_error(str(e))
        return 2


if __name__ == "__main__":
    sys.exit(main())
