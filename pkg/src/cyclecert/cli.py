"""cyclecert command line front end.

Subcommands mirror the library operations (disc, ddisc, sturm, descartes,
isolate, certify2d, dulacM, transversal, series, pade, shoot) and the
scenario runner reproduces the full certificate chains.  Polynomials cross
the boundary only as expression text; reports are emitted as JSON (lossless)
or a plain-text summary.  Exit codes: 0 pass, 1 verdict mismatch, 2 input
error, 3 resource/budget.
"""

from __future__ import annotations

import argparse
import sys
import time
from fractions import Fraction

from .exactpoly import MPoly, ParseError, PolyError, parse_poly
from .report import (EXIT_INPUT, EXIT_PASS, EXIT_RESOURCE, EXIT_VERDICT,
                     Report, emit_report)
from . import __version__

_F = Fraction


def _vars(text: str) -> tuple[str, ...]:
    return tuple(v.strip() for v in text.split(",") if v.strip())


def _frac(text: str) -> Fraction:
    return Fraction(text)


def _interval(text: str) -> tuple[Fraction, Fraction]:
    lo, hi = text.split(",")
    return Fraction(lo), Fraction(hi)


def _report_for(args, name: str) -> Report:
    return Report(id=name)


def _finish(args, report: Report) -> int:
    emit_report(report, args.format, args.out)
    return EXIT_PASS if report.passed() else EXIT_VERDICT


def cmd_disc(args) -> int:
    p = parse_poly(args.poly, _vars(args.vars))
    from .resultants import discriminant
    report = _report_for(args, "disc")
    report.inputs = {"poly": str(p), "var": args.var}
    t0 = time.perf_counter()
    d = discriminant(p, args.var)
    report.timings["disc"] = round(time.perf_counter() - t0, 3)
    report.verdicts["computed"] = "pass"
    report.witnesses["discriminant"] = str(d)
    report.expected = {"computed": "pass"}
    return _finish(args, report)


def cmd_ddisc(args) -> int:
    p = parse_poly(args.poly, _vars(args.vars))
    from .resultants import double_discriminant, double_discriminant_ordered
    report = _report_for(args, "ddisc")
    report.inputs = {"poly": str(p), "order": args.order}
    t0 = time.perf_counter()
    if args.order == "gcd":
        d = double_discriminant(p)
    else:
        first, second = args.order[0], args.order[1]
        d = double_discriminant_ordered(p, first, second)
    report.timings["ddisc"] = round(time.perf_counter() - t0, 3)
    report.verdicts["computed"] = "pass"
    report.witnesses["double_discriminant"] = str(d)
    report.witnesses["degree"] = d.degree()
    report.expected = {"computed": "pass"}
    return _finish(args, report)


def cmd_sturm(args) -> int:
    p = parse_poly(args.poly, _vars(args.vars)).as_unipoly()
    from . import rootiso
    report = _report_for(args, "sturm")
    report.inputs = {"poly": str(p), "lo": str(args.lo), "hi": str(args.hi)}
    n = rootiso.sturm_count(p, args.lo, args.hi)
    report.verdicts["computed"] = "pass"
    report.witnesses["distinct_roots"] = n
    report.expected = {"computed": "pass"}
    return _finish(args, report)


def cmd_descartes(args) -> int:
    p = parse_poly(args.poly, _vars(args.vars)).as_unipoly()
    from . import rootiso
    report = _report_for(args, "descartes")
    report.inputs = {"poly": str(p)}
    report.witnesses["sign_changes"] = rootiso.descartes_changes(p.coeffs)
    if args.normalize:
        lo, hi = _interval(args.normalize)
        norm = rootiso.normalize_to_interval(p, lo, hi)
        report.witnesses["normalized_sign_changes"] = \
            rootiso.descartes_changes(norm.coeffs)
    report.verdicts["computed"] = "pass"
    report.expected = {"computed": "pass"}
    return _finish(args, report)


def cmd_isolate(args) -> int:
    p = parse_poly(args.poly, _vars(args.vars)).as_unipoly()
    from . import rootiso
    report = _report_for(args, "isolate")
    report.inputs = {"poly": str(p), "lo": str(args.lo), "hi": str(args.hi)}
    res = rootiso.isolate_roots(p, args.lo, args.hi, max_depth=args.max_depth)
    report.witnesses["intervals"] = [[str(iv.lo), str(iv.hi)] for iv in res.intervals]
    report.witnesses["status"] = res.status
    report.witnesses["undecided"] = [[str(a), str(b)] for a, b in res.undecided]
    report.verdicts["isolation"] = "pass" if res.status == "complete" else "failed"
    report.expected = {"isolation": "pass"}
    return _finish(args, report) if res.status == "complete" else EXIT_RESOURCE


def cmd_certify2d(args) -> int:
    from .signcontrol import RegionSpec, certify_positive_2d
    variables = _vars(args.vars)
    F = parse_poly(args.poly, variables)
    if args.region == "plane":
        region = RegionSpec.whole_plane()
    else:
        region = RegionSpec.semialgebraic(parse_poly(args.region, variables))
    lo, hi = _interval(args.interval)
    samples = [Fraction(s) for s in args.samples.split(",")]
    report = _report_for(args, "certify2d")
    report.inputs = {"family": str(F), "region": args.region,
                     "interval": [str(lo), str(hi)],
                     "samples": [str(s) for s in samples]}
    cert = certify_positive_2d(F, region, (lo, hi), samples,
                               dd_order=tuple(args.dd_order))
    report.verdicts["certificate"] = cert.verdict
    report.witnesses["certificate"] = cert.to_jsonable()
    report.expected = {"certificate": cert.verdict} if cert.passed() else \
        {"certificate": "positive_on_region"}
    return _finish(args, report)


def cmd_dulacM(args) -> int:
    from .dulac import (bendixson_m, dulac_candidate_high, dulac_candidate_low,
                        quintic_system, vanderpol_system, vdp_dulac_candidate)
    from .ratfunc import RationalFunction
    systems = {"quintic": quintic_system, "vdp": vanderpol_system}
    sys_ = systems[args.system]()
    if args.candidate == "low":
        V = dulac_candidate_low()
    elif args.candidate == "high":
        V = dulac_candidate_high()
    elif args.candidate == "vdp":
        V = vdp_dulac_candidate()
    else:
        variables = _vars(args.vars)
        num = parse_poly(args.candidate, variables)
        V = RationalFunction(num, parse_poly(args.den, variables)) \
            if args.den else num
    report = _report_for(args, "dulacM")
    report.inputs = {"system": args.system, "candidate": str(V)}
    M = bendixson_m(V, sys_)
    report.verdicts["computed"] = "pass"
    report.witnesses["M_numerator"] = str(M.num)
    report.witnesses["M_denominator"] = str(M.den)
    report.expected = {"computed": "pass"}
    return _finish(args, report)


def cmd_transversal(args) -> int:
    from .dulac import quintic_system, without_contact
    from .ratfunc import RationalFunction
    variables = _vars(args.vars)
    psi = RationalFunction(parse_poly(args.num, variables),
                           parse_poly(args.den, variables) if args.den else None)
    n = without_contact(psi, quintic_system())
    report = _report_for(args, "transversal")
    report.inputs = {"psi": str(psi)}
    report.verdicts["computed"] = "pass"
    report.witnesses["N_psi_numerator"] = str(n.num)
    report.witnesses["N_psi_denominator"] = str(n.den)
    report.expected = {"computed": "pass"}
    return _finish(args, report)


def cmd_series(args) -> int:
    from .dulac import quintic_u_chart, quintic_vs_chart
    from .ratfunc import RationalFunction
    from .separatrix import invariant_graph_series, jet_transfer
    report = _report_for(args, "series")
    b = RationalFunction.var(("b",), "b")
    if args.target == "vertical":
        jet = invariant_graph_series(quintic_vs_chart(), (0, 1 / b), "v",
                                     seed={1: 0}, order=args.order)
    elif args.target == "horizontal":
        jet = invariant_graph_series(quintic_u_chart(), (0, 0), "u",
                                     seed={1: 0}, order=args.order)
    else:
        jet = jet_transfer(
            invariant_graph_series(quintic_vs_chart(), (0, 1 / b), "v",
                                   seed={1: 0}, order=args.order + 2),
            "vs_to_phi")
    report.inputs = {"target": args.target, "order": args.order}
    report.verdicts["computed"] = "pass"
    report.witnesses["jet"] = str(jet)
    report.witnesses["coefficients"] = [str(c) for c in jet.coeffs]
    report.expected = {"computed": "pass"}
    return _finish(args, report)


def cmd_pade(args) -> int:
    from .separatrix import SeriesJet, pade
    coeffs = [Fraction(c) for c in args.coeffs.split(",")]
    jet = SeriesJet(args.var, Fraction(args.at), coeffs)
    report = _report_for(args, "pade")
    report.inputs = {"coeffs": [str(c) for c in coeffs], "n": args.n, "m": args.m}
    approx = pade(jet, args.n, args.m)
    report.verdicts["computed"] = "pass"
    report.witnesses["numerator"] = str(approx.num)
    report.witnesses["denominator"] = str(approx.den)
    report.expected = {"computed": "pass"}
    return _finish(args, report)


def cmd_shoot(args) -> int:
    import mpmath as mp
    from .shoot import FloatConfig, bisect_parameter, shoot_pi, shoot_pi_hat
    cfg = FloatConfig(precision_bits=args.precision_bits,
                      taylor_order=args.taylor_order)
    report = _report_for(args, "shoot")
    report.inputs = {"what": args.what, "b": args.b,
                     "precision_bits": args.precision_bits}
    with mp.workprec(cfg.precision_bits):
        if args.what == "pi":
            val = shoot_pi(args.b, cfg=cfg)
            report.witnesses["value"] = mp.nstr(val, 15)
        elif args.what == "pihat":
            val = shoot_pi_hat(args.b, cfg=cfg)
            report.witnesses["value"] = mp.nstr(val, 15)
        else:
            f = shoot_pi if args.what == "bisect-pi" else shoot_pi_hat
            root = bisect_parameter(lambda t: f(t, cfg=cfg),
                                    mp.mpf("0.79"), mp.mpf("0.817"), args.tol)
            report.witnesses["value"] = mp.nstr(root, 12)
    report.verdicts["computed"] = "pass"
    report.expected = {"computed": "pass"}
    return _finish(args, report)


def cmd_scenario(args) -> int:
    from .scenarios import ScenarioError, run_scenario
    overrides = {"tier": args.tier, "cache": not args.no_cache,
                 "jet_order": args.jet_order,
                 "precision_bits": args.precision_bits,
                 "max_depth": args.max_depth}
    try:
        report = run_scenario(args.name, overrides)
    except ScenarioError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    emit_report(report, args.format, args.out)
    return EXIT_PASS if report.passed() else EXIT_VERDICT


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="cyclecert",
        description="exact certificates for the quintic limit-cycle family")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--out", default=None, help="write the report to a file")

    p = sub.add_parser("disc", help="discriminant in one variable")
    p.add_argument("poly")
    p.add_argument("--vars", default="x,y,b")
    p.add_argument("--var", default="x")
    common(p)
    p.set_defaults(func=cmd_disc)

    p = sub.add_parser("ddisc", help="double discriminant")
    p.add_argument("poly")
    p.add_argument("--vars", default="x,y,b")
    p.add_argument("--order", choices=("xy", "yx", "gcd"), default="gcd")
    common(p)
    p.set_defaults(func=cmd_ddisc)

    p = sub.add_parser("sturm", help="distinct real roots in an interval")
    p.add_argument("poly")
    p.add_argument("--vars", default="x")
    p.add_argument("--lo", type=_frac, required=True)
    p.add_argument("--hi", type=_frac, required=True)
    common(p)
    p.set_defaults(func=cmd_sturm)

    p = sub.add_parser("descartes", help="sign-change counts")
    p.add_argument("poly")
    p.add_argument("--vars", default="x")
    p.add_argument("--normalize", default=None, metavar="LO,HI",
                   help="also count on the interval-normalized polynomial")
    common(p)
    p.set_defaults(func=cmd_descartes)

    p = sub.add_parser("isolate", help="isolate real roots in an interval")
    p.add_argument("poly")
    p.add_argument("--vars", default="x")
    p.add_argument("--lo", type=_frac, required=True)
    p.add_argument("--hi", type=_frac, required=True)
    p.add_argument("--max-depth", type=int, default=64)
    common(p)
    p.set_defaults(func=cmd_isolate)

    p = sub.add_parser("certify2d", help="two-variable family positivity")
    p.add_argument("poly")
    p.add_argument("--vars", default="x,y,b")
    p.add_argument("--region", default="plane",
                   help='"plane" or a boundary polynomial g for {g > 0}')
    p.add_argument("--interval", required=True, metavar="LO,HI")
    p.add_argument("--samples", required=True, help="comma-separated b samples")
    p.add_argument("--dd-order", choices=("xy", "yx"), default="yx")
    common(p)
    p.set_defaults(func=cmd_certify2d)

    p = sub.add_parser("dulacM", help="rescaled divergence of a Dulac candidate")
    p.add_argument("candidate", help='"low", "high", "vdp", or a polynomial')
    p.add_argument("--den", default=None)
    p.add_argument("--system", choices=("quintic", "vdp"), default="quintic")
    p.add_argument("--vars", default="x,y,b")
    common(p)
    p.set_defaults(func=cmd_dulacM)

    p = sub.add_parser("transversal", help="flow pairing along a graph curve")
    p.add_argument("num")
    p.add_argument("--den", default=None)
    p.add_argument("--vars", default="x,b")
    common(p)
    p.set_defaults(func=cmd_transversal)

    p = sub.add_parser("series", help="separatrix jets")
    p.add_argument("--target", choices=("vertical", "horizontal", "phi"),
                   default="phi")
    p.add_argument("--order", type=int, default=16)
    common(p)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("pade", help="Pade approximant of a jet")
    p.add_argument("coeffs", help="comma-separated rational jet coefficients")
    p.add_argument("--var", default="x")
    p.add_argument("--at", default="0")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_pade)

    p = sub.add_parser("shoot", help="shooting values and bisections")
    p.add_argument("--what", choices=("pi", "pihat", "bisect-pi", "bisect-pihat"),
                   default="pi")
    p.add_argument("--b", default="0.8062901027")
    p.add_argument("--tol", type=float, default=2e-5)
    p.add_argument("--precision-bits", type=int, default=128)
    p.add_argument("--taylor-order", type=int, default=20)
    common(p)
    p.set_defaults(func=cmd_shoot)

    p = sub.add_parser("scenario", help="run a registered certificate scenario")
    p.add_argument("name")
    p.add_argument("--tier", choices=("default", "extended"), default="default")
    p.add_argument("--no-cache", action="store_true")
    p.add_argument("--jet-order", type=int, default=16)
    p.add_argument("--precision-bits", type=int, default=128)
    p.add_argument("--max-depth", type=int, default=64)
    p.add_argument("--jobs", type=int, default=1,
                   help="worker pool for independent steps (determinism kept)")
    common(p)
    p.set_defaults(func=cmd_scenario)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, PolyError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:  # endpoint roots, malformed fractions, brackets
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except MemoryError:
        return EXIT_RESOURCE
    except RuntimeError as exc:  # integrator blowups and step budgets
        print(f"resource error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
