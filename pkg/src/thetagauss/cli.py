"""Command-line front end.

Subcommands map one-to-one onto the package's user-facing capabilities:

    theta       evaluate theta_t(zeta) or a t-derivative
    multiplier  evaluate the kernel multiplier (or a t-derivative) at xi
    kernel      evaluate the normalized Gaussian kernel at a lattice point
    convolve    apply G_t to a signal file (direct or spectral path)
    seminorm    variation / jump count of a sampled family from a signal file
    frac        evaluate the derived fractional multiplier p_u^alpha
    psi         the scale-change bijection and its inverse
    certify     run the inequality certification suites
    sweep       tabulate an object across a scale grid

Numeric output is printed with 17 significant digits; runs are deterministic
for a fixed seed (default 20260809).  Exit codes: 0 success / all checks
passed, 1 any certification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import math
import sys

import numpy as np

from . import certify as ct
from . import fractional as fr
from . import lattice as lat
from . import multipliers as mul
from . import seminorms as sn
from . import theta as th
from .errors import ThetaGaussError

__all__ = ["main", "build_parser"]


def _fmt(x: float) -> str:
    return f"{float(x):.17g}"


def _parse_xi(text: str) -> np.ndarray:
    try:
        return np.array([float(p) for p in text.split(",") if p.strip() != ""])
    except ValueError as exc:
        raise ThetaGaussError(f"cannot parse frequency list {text!r}") from exc


def _parse_grid(text: str):
    parts = text.split(":")
    if len(parts) not in (3, 4) or (len(parts) == 4 and parts[3] != "log"):
        raise ThetaGaussError(f"grid must be start:stop:count[:log], got {text!r}")
    start, stop, count = float(parts[0]), float(parts[1]), int(parts[2])
    if count < 1:
        raise ThetaGaussError("grid count must be >= 1")
    if len(parts) == 4:
        return np.geomspace(start, stop, count)
    return np.linspace(start, stop, count)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="thetagauss",
        description="Certified discrete-Gaussian / theta-function numerics on Z^d.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_theta = sub.add_parser("theta", help="evaluate theta_t(zeta) or d^n/dt^n theta_t(zeta)")
    p_theta.add_argument("--t", type=float, required=True)
    p_theta.add_argument("--zeta", type=float, default=0.0)
    p_theta.add_argument("--eps", type=float, default=1e-14)
    p_theta.add_argument("--deriv", type=int, default=0)

    p_mult = sub.add_parser("multiplier", help="evaluate the kernel multiplier at xi")
    p_mult.add_argument("--t", type=float, required=True)
    p_mult.add_argument("--xi", type=str, default="0")
    p_mult.add_argument("--dim", type=int, default=None)
    p_mult.add_argument("--eps", type=float, default=1e-14)
    p_mult.add_argument("--deriv", type=int, default=0)

    p_kern = sub.add_parser("kernel", help="evaluate g_t at a lattice point")
    p_kern.add_argument("--t", type=float, required=True)
    p_kern.add_argument("--xi", type=str, default="0", help="integer lattice point a,b,...")
    p_kern.add_argument("--eps", type=float, default=1e-14)

    p_conv = sub.add_parser("convolve", help="apply G_t to a signal file")
    p_conv.add_argument("--signal", type=str, required=True)
    p_conv.add_argument("--t", type=float, required=True)
    p_conv.add_argument("--eps", type=float, default=1e-12)
    p_conv.add_argument("--grid", type=str, default=None,
                        help="embedding grid side; selects the spectral path")
    p_conv.add_argument("--out", type=str, default=None)

    p_semi = sub.add_parser("seminorm", help="variation / jump count of a sampled family")
    p_semi.add_argument("--signal", type=str, required=True,
                        help="1-dim signal file; indices order the family "
                             "(the sparse format drops zero values, so shift "
                             "families that contain exact zeros)")
    p_semi.add_argument("--r", type=float, default=None)
    p_semi.add_argument("--lambda", dest="lam", type=float, default=None)

    p_frac = sub.add_parser("frac", help="evaluate p_u^alpha(xi) for the Gaussian family")
    p_frac.add_argument("--alpha", type=float, required=True)
    p_frac.add_argument("--t", type=float, required=True, help="the scale u")
    p_frac.add_argument("--xi", type=str, default="0.25")

    p_psi = sub.add_parser("psi", help="scale-change bijection")
    p_psi.add_argument("--t", type=float, default=None)
    p_psi.add_argument("--u", type=float, default=None)
    p_psi.add_argument("--inv", action="store_true")

    p_cert = sub.add_parser("certify", help="run the certification suites")
    p_cert.add_argument("--suite", type=str, default=None,
                        choices=["explicit", "empirical", "report", "all"])
    p_cert.add_argument("--check", type=str, default=None)
    p_cert.add_argument("--out", type=str, default=None)
    p_cert.add_argument("--format", type=str, default="json", choices=["json", "csv"])
    p_cert.add_argument("--seed", type=int, default=ct.DEFAULT_SEED)
    p_cert.add_argument("--jobs", type=int, default=1)
    p_cert.add_argument("--list", action="store_true", help="list registry ids and exit")

    p_sweep = sub.add_parser("sweep", help="tabulate an object across a scale grid")
    p_sweep.add_argument("--what", type=str, default="theta",
                         choices=["theta", "multiplier", "heat", "symbol", "psi"])
    p_sweep.add_argument("--grid", type=str, required=True, help="start:stop:count[:log]")
    p_sweep.add_argument("--zeta", type=float, default=0.0)
    p_sweep.add_argument("--xi", type=str, default="0.25")
    p_sweep.add_argument("--eps", type=float, default=1e-14)
    p_sweep.add_argument("--deriv", type=int, default=0)
    p_sweep.add_argument("--format", type=str, default="csv", choices=["json", "csv"])
    p_sweep.add_argument("--out", type=str, default=None)

    return parser


def _cmd_theta(args) -> int:
    pol = th.TruncationPolicy(eps=args.eps)
    if args.deriv:
        cv = th.theta1_time_derivative(args.deriv, args.t, args.zeta, pol)
    else:
        cv = th.theta1(args.t, args.zeta, pol)
    print(_fmt(cv.value))
    return 0


def _cmd_multiplier(args) -> int:
    xi = _parse_xi(args.xi)
    if args.dim is not None:
        if xi.size == 1:
            xi = np.full(args.dim, xi[0])
        elif xi.size != args.dim:
            raise ThetaGaussError("--dim does not match the --xi coordinate count")
    pol = th.TruncationPolicy(eps=args.eps)
    if args.deriv:
        cv = mul.gauss_multiplier_derivative(args.t, xi, pol, deriv_order=args.deriv)
    else:
        cv = mul.gauss_multiplier(args.t, xi, pol)
    print(_fmt(cv.value))
    return 0


def _cmd_kernel(args) -> int:
    point = [int(float(p)) for p in args.xi.split(",")]
    cv = lat.gauss_kernel_value(args.t, point, th.TruncationPolicy(eps=args.eps))
    print(_fmt(cv.value))
    return 0


def _cmd_convolve(args) -> int:
    f = lat.read_signal(args.signal)
    pol = th.TruncationPolicy(eps=args.eps)
    if args.grid is not None:
        grid = lat.EmbeddingGrid(int(args.grid), f.dim)
        plan = lat.ConvolutionPlan.spectral(args.t, grid, pol)
    else:
        plan = lat.ConvolutionPlan.direct(args.t, pol)
    out = lat.convolve_gauss(f, plan)
    print(f"entries {len(out)}")
    for p in (1.0, 2.0, math.inf):
        name = "inf" if p == math.inf else f"{p:g}"
        print(f"l{name} {_fmt(lat.lp_norm(out, p))}")
    if args.out:
        lat.write_signal(out, args.out)
    return 0


def _cmd_seminorm(args) -> int:
    f = lat.read_signal(args.signal)
    if f.dim != 1:
        raise ThetaGaussError("seminorm expects a 1-dim signal file")
    keys = sorted(f.entries)
    vals = [f.entries[k] for k in keys]
    times = [float(i + 1) for i in range(len(keys))]
    fam = sn.SampledFamily(times, vals)
    if args.r is None and args.lam is None:
        raise ThetaGaussError("give --r (variation) and/or --lambda (jump count)")
    if args.r is not None:
        print(_fmt(sn.variation(fam, args.r)))
    if args.lam is not None:
        print(sn.jump_count(fam, args.lam))
    return 0


def _cmd_frac(args) -> int:
    xi = _parse_xi(args.xi)
    family = mul.GaussMultiplierFamily()
    fp = fr.FracParams(args.alpha)
    print(_fmt(fr.p_multiplier(family, fp, args.t, xi)))
    return 0


def _cmd_psi(args) -> int:
    if args.inv:
        u = args.u if args.u is not None else args.t
        if u is None:
            raise ThetaGaussError("psi --inv needs --u")
        print(_fmt(mul.psi_inv(u)))
    else:
        if args.t is None:
            raise ThetaGaussError("psi needs --t")
        print(_fmt(mul.psi(args.t)))
    return 0


def _cmd_certify(args) -> int:
    if args.list:
        for cid in ct.list_checks():
            print(f"{cid.id:16s} {cid.mode:9s} {cid.description}")
        return 0
    if args.check is not None:
        try:
            report = ct.run_check(args.check)
        except KeyError as exc:
            raise ThetaGaussError(str(exc)) from exc
    else:
        suite = args.suite or "all"
        report = ct.run_suite(suite, seed=args.seed, jobs=args.jobs)
    summary = report.summary
    print(f"suite {report.suite}  seed {report.seed}")
    print(f"records {summary['total']}  failures {summary['failures']}  "
          f"worst_margin {_fmt(summary['worst_margin'])}")
    by_check: dict[str, list] = {}
    for r in report.records:
        by_check.setdefault(r.check_id, []).append(r)
    for cid, recs in by_check.items():
        fails = sum(not r.passed for r in recs)
        margins = [r.margin for r in recs if not math.isnan(r.margin)]
        worst = min(margins) if margins else math.inf
        status = "PASS" if fails == 0 else "FAIL"
        print(f"{status} {cid:16s} records {len(recs):4d}  worst_margin {worst:.6e}")
    if args.out:
        payload = report.to_json() if args.format == "json" else report.to_csv()
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(payload)
    return 0 if report.all_passed else 1


def _cmd_sweep(args) -> int:
    grid = _parse_grid(args.grid)
    pol = th.TruncationPolicy(eps=args.eps)
    rows = []
    for t in grid:
        if args.what == "theta":
            val = th.theta1(t, args.zeta, pol).value
        elif args.what == "multiplier":
            xi = _parse_xi(args.xi)
            if args.deriv:
                val = mul.gauss_multiplier_derivative(t, xi, pol, deriv_order=args.deriv).value
            else:
                val = mul.gauss_multiplier(t, xi, pol).value
        elif args.what == "heat":
            val = mul.heat_kernel_torus(t, _parse_xi(args.xi), pol).value
        elif args.what == "symbol":
            val = mul.semigroup_symbol(t, _parse_xi(args.xi))
        else:
            val = mul.psi(t)
        rows.append((float(t), float(val)))
    if args.format == "csv":
        lines = ["t,value"] + [f"{_fmt(t)},{_fmt(v)}" for t, v in rows]
        payload = "\n".join(lines) + "\n"
    else:
        import json

        payload = json.dumps([{"t": t, "value": v} for t, v in rows], indent=1)
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(payload)
    else:
        print(payload, end="" if payload.endswith("\n") else "\n")
    return 0


_DISPATCH = {
    "theta": _cmd_theta,
    "multiplier": _cmd_multiplier,
    "kernel": _cmd_kernel,
    "convolve": _cmd_convolve,
    "seminorm": _cmd_seminorm,
    "frac": _cmd_frac,
    "psi": _cmd_psi,
    "certify": _cmd_certify,
    "sweep": _cmd_sweep,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 0 for --help and 2 for usage errors; pass both through
        return int(exc.code or 0)
    try:
        return _DISPATCH[args.command](args)
    except ThetaGaussError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
