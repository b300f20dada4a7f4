"""Command-line front end.

Exit codes: 0 success, 1 usage or domain error (single-line diagnostic on
stderr), 2 verification failure.
"""

from __future__ import annotations

import argparse
import math
import sys
from typing import Optional, Sequence

from . import export, reference, stability, verify
from .curves import SolitonCase, half_period, make_curve
from .errors import SolstabError
from .numerics import QuadratureConfig
from .stability import CylinderSpec, StabilityMode


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # single-line diagnostics, exit code 1
        sys.stderr.write(f"error: {message}\n")
        sys.exit(1)


def _mode(args) -> StabilityMode:
    return StabilityMode.STRONG if args.strong else StabilityMode.VOLUME_PRESERVING


def _quadrature_config(args) -> QuadratureConfig:
    return QuadratureConfig(
        abs_tol=args.abs_tol,
        rel_tol=args.rel_tol,
        max_subdivisions=args.max_subdivisions,
    )


def _add_quadrature_flags(parser) -> None:
    parser.add_argument("--abs-tol", type=float, default=1e-10,
                        help="absolute quadrature tolerance (default 1e-10)")
    parser.add_argument("--rel-tol", type=float, default=1e-10,
                        help="relative quadrature tolerance (default 1e-10)")
    parser.add_argument("--max-subdivisions", type=int, default=2000,
                        help="quadrature bisection budget (default 2000)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="solstab",
        description=(
            "Profile curves and Plateau-Rayleigh critical lengths of "
            "cylindrical translating lambda-solitons."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("curve", help="sample a profile curve to CSV")
    p.add_argument("--lambda", dest="lam", type=float, required=True,
                   help="soliton constant (> 0, not 0 and not within 1e-9 of 1)")
    p.add_argument("--s-min", type=float, default=-5.0, help="first parameter value")
    p.add_argument("--s-max", type=float, default=5.0, help="last parameter value")
    p.add_argument("--samples", type=int, default=201, help="number of rows (>= 2)")
    p.add_argument("--out", required=True, help="output CSV path")

    p = sub.add_parser("qform", help="evaluate the quadratic form on one piece")
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    p.add_argument("--s0", type=float, help="half-width of the symmetric piece (lambda <= 1)")
    p.add_argument("--sigma", type=float, help="fundamental-piece offset (lambda > 1, default 0)")
    p.add_argument("--length", type=float, required=True, help="axial length L")
    p.add_argument("--strong", action="store_true",
                   help="unconstrained mode g = sin(pi t/L) instead of sin(2 pi t/L)")
    _add_quadrature_flags(p)

    p = sub.add_parser("critical-length", help="critical axial length L0")
    p.add_argument("--lambda", dest="lam", type=float, help="soliton constant")
    p.add_argument("--radius", type=float, help="cylinder radius (instead of --lambda)")
    p.add_argument("--s0", type=float, help="half-width (lambda <= 1)")
    p.add_argument("--sigma", type=float, help="fundamental-piece offset (lambda > 1, default 0)")
    p.add_argument("--uniform", action="store_true",
                   help="lambda > 1: offset-independent bound L0*")
    p.add_argument("--strong", action="store_true", help="unconstrained mode (halves L0)")
    p.add_argument("--l-max", type=float, default=200.0,
                   help="scan limit for the lambda < 1 root search (default 200)")
    _add_quadrature_flags(p)

    p = sub.add_parser("table", help="reduced-integral table for lambda < 1")
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    p.add_argument("--s0", type=float, nargs="+",
                   help="row half-widths (default: golden grid for lambda in {0.25, 0.5, 0.75})")
    p.add_argument("--lengths", type=float, nargs="+",
                   help="column lengths (default: golden grid)")
    p.add_argument("--format", choices=("markdown", "csv"), default="markdown")
    p.add_argument("--out", help="output path (default: stdout)")
    _add_quadrature_flags(p)

    p = sub.add_parser("cylinder", help="cmc and soliton forms of a cylinder piece")
    p.add_argument("--radius", type=float, required=True)
    p.add_argument("--length", type=float, required=True)
    p.add_argument("--strong", action="store_true", help="unconstrained mode")
    _add_quadrature_flags(p)

    p = sub.add_parser("mesh", help="export a surface piece as Wavefront OBJ")
    p.add_argument("--lambda", dest="lam", type=float, help="soliton constant")
    p.add_argument("--radius", type=float, help="cylinder radius (instead of --lambda)")
    p.add_argument("--s0", type=float, help="half-width (lambda <= 1)")
    p.add_argument("--sigma", type=float, help="fundamental-piece offset (lambda > 1, default 0)")
    p.add_argument("--length", type=float, required=True)
    p.add_argument("--ns", type=int, default=64, help="profile samples (>= 2)")
    p.add_argument("--nt", type=int, default=16, help="axial samples (>= 2)")
    p.add_argument("--out", required=True, help="output OBJ path")

    p = sub.add_parser("verify", help="run the verification suites")
    p.add_argument("--suite", action="append", choices=("all",) + verify.SUITE_NAMES,
                   help="suite to run (repeatable; default all)")
    p.add_argument("--lambda", dest="lam", type=float, default=None,
                   help="restrict the tables suite to one lambda")
    _add_quadrature_flags(p)

    return parser


# ---------------------------------------------------------------------------
# subcommand bodies
# ---------------------------------------------------------------------------

def _cmd_curve(args) -> int:
    curve = make_curve(args.lam)
    export.write_curve_csv(curve, args.s_min, args.s_max, args.samples, args.out)
    print(f"wrote {args.samples} samples to {args.out}")
    return 0


def _piece_and_profile(args, cfg):
    curve = make_curve(args.lam)
    if curve.case is SolitonCase.GREATER_THAN_ONE:
        sigma = 0.0 if args.sigma is None else args.sigma
        piece = stability.fundamental_piece(curve, sigma, args.length)
        profile = stability.fundamental_profile(curve, sigma)
    else:
        if args.s0 is None:
            raise SolstabError("--s0 is required for lambda <= 1")
        piece = stability.symmetric_piece(curve, args.s0, args.length)
        if curve.case is SolitonCase.EQUAL_ONE:
            profile = stability.quadratic_profile(curve, args.s0)
        else:
            profile = stability.cosine_profile(curve, args.s0)
    return piece, profile


def _cmd_qform(args) -> int:
    cfg = _quadrature_config(args)
    mode = _mode(args)
    piece, profile = _piece_and_profile(args, cfg)
    bd = stability.qform_profile(piece, profile, mode, cfg)
    residual = stability.zero_weighted_mean_residual(piece, mode, cfg)
    print(f"profile          = {profile.kind}")
    print(f"mode             = {mode.value}")
    print(f"grad term        = {bd.grad_term:.12g}")
    print(f"curvature term   = {bd.curvature_term:.12g}")
    print(f"mass term        = {bd.mass_term:.12g}")
    print(f"Q                = {bd.total:.12g}")
    print(f"reduced I        = {2.0 * bd.total / piece.length:.12g}")
    print(f"zero-mean residual = {residual:.3e}")
    return 0


def _cmd_critical_length(args) -> int:
    if (args.lam is None) == (args.radius is None):
        raise SolstabError("give exactly one of --lambda or --radius")
    mode = _mode(args)
    if args.radius is not None:
        crit = stability.cylinder_soliton_critical_length(args.radius, mode)
    else:
        curve = make_curve(args.lam)
        if curve.case is SolitonCase.GREATER_THAN_ONE:
            if args.uniform:
                crit = stability.critical_length_gt1_uniform(args.lam, mode)
            else:
                sigma = 0.0 if args.sigma is None else args.sigma
                crit = stability.critical_length_gt1(args.lam, sigma, mode)
        elif curve.case is SolitonCase.EQUAL_ONE:
            if args.s0 is None:
                raise SolstabError("--s0 is required for lambda = 1")
            crit = stability.critical_length_eq1(args.s0, mode)
        else:
            if args.s0 is None:
                raise SolstabError("--s0 is required for lambda < 1")
            crit = stability.critical_length_lt1(
                args.lam, args.s0, _quadrature_config(args), mode, args.l_max
            )
    print(f"L0 = {crit.value:.6f}")
    print(f"method = {crit.method.value}")
    print(f"mode = {crit.mode.value}")
    return 0


def _cmd_table(args) -> int:
    cfg = _quadrature_config(args)
    s0_values = args.s0
    length_values = args.lengths
    golden = reference.REFERENCE_TABLES.get(args.lam)
    if s0_values is None:
        if golden is None:
            raise SolstabError(
                "no default grid for this lambda; pass --s0 and --lengths"
            )
        s0_values = golden.s0_values
    if length_values is None:
        if golden is None:
            raise SolstabError(
                "no default grid for this lambda; pass --s0 and --lengths"
            )
        length_values = golden.length_values
    table = stability.instability_table(args.lam, s0_values, length_values, cfg)
    if args.format == "markdown":
        text = export.render_table_markdown(table)
    else:
        text = export.render_table_csv(table)
    if args.out:
        export.write_text(args.out, text)
        print(f"wrote table to {args.out}")
    else:
        sys.stdout.write(text)
    return 0


def _cmd_cylinder(args) -> int:
    cfg = _quadrature_config(args)
    mode = _mode(args)
    spec = CylinderSpec(args.radius, args.length)
    q_cmc = stability.cylinder_cmc_q(spec)
    q_quad = stability.cylinder_soliton_q(spec, cfg, mode)
    q_closed = stability.cylinder_soliton_q_closed(spec, mode)
    print(f"cmc Q                = {q_cmc:.12g}")
    print(f"cmc L0               = {stability.cylinder_cmc_critical_length(args.radius, mode).value:.6f}")
    print(f"soliton Q (quadrature) = {q_quad:.12g}")
    print(f"soliton Q (closed)     = {q_closed:.12g}")
    print(f"sign factor          = {stability.cylinder_sign_factor(args.radius, args.length):.12g}")
    if args.radius < math.sqrt(2.0):
        crit = stability.cylinder_soliton_critical_length(args.radius, mode)
        print(f"soliton L0           = {crit.value:.6f}")
    else:
        print("soliton L0           = none (radius >= sqrt(2))")
    for variant in stability.AltVariant:
        print(f"alt Q [{variant.value}] = {stability.cylinder_alt_q(spec, variant):.12g}")
    return 0


def _cmd_mesh(args) -> int:
    if (args.lam is None) == (args.radius is None):
        raise SolstabError("give exactly one of --lambda or --radius")
    if args.radius is not None:
        text = export.cylinder_mesh_obj_text(args.radius, args.length, args.ns, args.nt)
    else:
        curve = make_curve(args.lam)
        if curve.case is SolitonCase.GREATER_THAN_ONE:
            sigma = 0.0 if args.sigma is None else args.sigma
            s0 = half_period(curve)
            interval = (-s0 + sigma, s0 + sigma)
        else:
            if args.s0 is None:
                raise SolstabError("--s0 is required for lambda <= 1")
            interval = (-args.s0, args.s0)
        text = export.profile_mesh_obj_text(curve, interval, args.length, args.ns, args.nt)
    export.write_text(args.out, text)
    print(f"wrote {args.ns * args.nt} vertices to {args.out}")
    return 0


def _cmd_verify(args) -> int:
    cfg = _quadrature_config(args)
    names = args.suite if args.suite else None
    results = verify.run_suites(names, cfg, args.lam)
    failed = 0
    for result in results:
        if result.informational:
            status = "INFO"
        elif result.passed:
            status = "PASS"
        else:
            status = "FAIL"
            failed += 1
        print(f"{status} {result.name}: {result.detail}")
    required = sum(1 for r in results if not r.informational)
    print(f"{required - failed}/{required} required checks passed")
    return 2 if failed else 0


_COMMANDS = {
    "curve": _cmd_curve,
    "qform": _cmd_qform,
    "critical-length": _cmd_critical_length,
    "table": _cmd_table,
    "cylinder": _cmd_cylinder,
    "mesh": _cmd_mesh,
    "verify": _cmd_verify,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # argparse --help (0) or usage error (1)
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except (SolstabError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
