"""Command-line front end: ``cptau analyze|canonical|solve|check FILE``.

Exit codes: 0 success, 1 domain error or failed check, 2 parse error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .canonical import generate, has_derived_singular
from .checks import run_checks
from .diffop import verify_height_index
from .echelon import build_pi1, echelon
from .problemfile import FORMATS, ProblemFileError, load
from .ratpoly import Polynomial, format_rational
from .tau import TauError, residual_report, solve_tau

EXIT_OK, EXIT_DOMAIN, EXIT_PARSE = 0, 1, 2


def _q(value: Fraction) -> str:
    return format_rational(value)


def _t(value: Fraction) -> str:
    return str(value)


def _poly(p: Polynomial) -> list[str]:
    return p.to_strings()


def _approx(p: Polynomial) -> list[float]:
    return [float(c) for c in p.coeffs]


def _fmt_set(values) -> str:
    return "{" + ", ".join(str(v) for v in sorted(values)) + "}" if values else "{}"


def analyze_report(pf) -> dict:
    op = pf.operator
    prof = op.profile
    ech = echelon(op)
    alpha, beta = len(ech.kernel_basis), len(ech.inaccessible)
    return {
        "nu": op.nu,
        "height": prof.height,
        "depth": prof.depth,
        "xi": _poly(prof.xi),
        "omega": sorted(prof.omega),
        "N": prof.cutoff,
        "top_block": [_poly(r) for r in build_pi1(op, prof).rows],
        "reduced": [_poly(r) for r in ech.reduced.rows],
        "standard_basis": [_poly(s) for s in ech.standard_polys],
        "kernel_basis": [_poly(u) for u in ech.kernel_basis],
        "sigma": {str(k): v for k, v in ech.sigma.items()},
        "S": sorted(ech.inaccessible),
        "height_index_check": verify_height_index(op, alpha, beta),
        "derived_singular_present": has_derived_singular(op, ech),
        "_text": (op, prof, ech, alpha, beta),
    }


def _print_analyze(report: dict) -> None:
    op, prof, ech, alpha, beta = report["_text"]
    print(f"operator: {op}")
    print(f"nu = {op.nu}  h = {prof.height}  d = {prof.depth}")
    print(f"xi(n) = {prof.xi.to_string('n')}")
    print(f"Omega = {_fmt_set(prof.omega)}  N = {prof.cutoff}")
    print("top block (rows D(x^n), n = 0..N):")
    for n, row in enumerate(build_pi1(op, prof).rows):
        print(f"  {n}: {row}")
    print("reduced pre-LREF block / standard basis:")
    for pos, (row, s) in enumerate(zip(ech.reduced.rows, ech.standard_polys)):
        sig = f"sigma={ech.sigma[pos]}" if pos in ech.sigma else "zero row"
        print(f"  {pos}: D({s}) = {row}   [{sig}]")
    print(f"kernel basis: [{', '.join(str(u) for u in ech.kernel_basis)}]")
    print(f"S = {_fmt_set(ech.inaccessible)}")
    ok = report["height_index_check"]
    print(f"h = beta - alpha: {prof.height} = {beta} - {alpha}  [{'ok' if ok else 'FAILED'}]")
    print(f"derived-singular present: {'yes' if report['derived_singular_present'] else 'no'}")


def cmd_analyze(pf, fmt: str) -> int:
    report = analyze_report(pf)
    if fmt == "structured":
        report.pop("_text")
        print(json.dumps(report, indent=2))
    else:
        _print_analyze(report)
    return EXIT_OK


def cmd_canonical(pf, bound: int, fmt: str) -> int:
    op = pf.operator
    basis = generate(op, echelon(op), bound)
    if fmt == "structured":
        print(
            json.dumps(
                {
                    "bound": bound,
                    "S": sorted(basis.inaccessible),
                    "null_cps": [_poly(u) for u in basis.null_cps],
                    "entries": [
                        {"m": e.index, "class": str(e.cls), "q": _poly(e.q), "r": _poly(e.r)}
                        for e in basis
                    ],
                },
                indent=2,
            )
        )
        return EXIT_OK
    print(f"null CPs: [{', '.join(str(u) for u in basis.null_cps)}]")
    print("m\tclass\tq_m\tr_m")
    for e in basis:
        print(f"{e.index}\t{e.cls}\t{e.q}\t{e.r}")
    return EXIT_OK


def cmd_solve(pf, order: int, fmt: str) -> int:
    problem = pf.to_problem()
    sol = solve_tau(problem, order)
    points = pf.options.get("points") or (*problem.perturbation.interval, sum(problem.perturbation.interval) / 2)
    rep = residual_report(sol, problem, points)
    if fmt == "structured":
        print(
            json.dumps(
                {
                    "order": sol.n,
                    "y_n": _poly(sol.y_n),
                    "y_n_approx": _approx(sol.y_n),
                    "taus": [_q(t) for t in sol.taus],
                    "taus_approx": [float(t) for t in sol.taus],
                    "free_constants": [_q(c) for c in sol.free_constants],
                    "kernel_basis": [_poly(u) for u in sol.kernel_basis],
                    "H_n": _poly(sol.perturbation_poly),
                    "system": [sol.equations, sol.unknowns],
                    "report": {
                        "H_n_samples": [[_q(x), _q(v)] for x, v in rep.samples],
                        "H_n_samples_approx": [[float(x), float(v)] for x, v in rep.samples],
                        "max_abs_tau": _q(rep.max_tau),
                        "max_abs_tau_approx": rep.max_tau_approx,
                        "condition_residuals": [_q(r) for r in rep.condition_residuals],
                        "identity_residual": _poly(rep.identity_residual),
                    },
                },
                indent=2,
            )
        )
        return EXIT_OK
    print(f"order n = {sol.n}  (system {sol.equations} x {sol.unknowns})")
    print(f"y_n = {sol.y_n}")
    print("coefficients (exact ~ approx):")
    for k, c in enumerate(sol.y_n.coeffs):
        print(f"  x^{k}: {_t(c)} ~ {float(c):.12g}")
    for i, t in enumerate(sol.taus, start=1):
        print(f"tau{i} = {_t(t)} ~ {float(t):.6g}")
    for w, c in enumerate(sol.free_constants):
        print(f"C{w} = {_t(c)}  (kernel element {sol.kernel_basis[w]})")
    print(f"H_n = {sol.perturbation_poly}")
    for line in rep.lines():
        print(line)
    print(f"max |tau| = {_t(rep.max_tau)} ~ {rep.max_tau_approx:.6g}")
    print(f"condition residuals: {[_t(r) for r in rep.condition_residuals]}")
    print(f"D(y_n) - f - H_n = {rep.identity_residual}")
    return EXIT_OK


def cmd_check(pf, bound: int, fmt: str) -> int:
    results = run_checks(pf.operator, bound=bound, oracle_bound=min(bound, 10))
    if fmt == "structured":
        print(json.dumps([{"check": r.name, "ok": r.ok, "detail": r.detail} for r in results], indent=2))
    else:
        for r in results:
            print(f"{'PASS' if r.ok else 'FAIL'}  {r.name}{'  (' + r.detail + ')' if r.detail else ''}")
    return EXIT_OK if all(r.ok for r in results) else EXIT_DOMAIN


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cptau", description="Exact recursive tau method via canonical polynomials.")
    parser.add_argument("--format", choices=FORMATS, default=None, help="output mode (default: file option or text)")
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("analyze", help="operator constants, echelon form, kernel and S")
    p.add_argument("file")
    p = sub.add_parser("canonical", help="table of canonical and residual polynomials")
    p.add_argument("file")
    p.add_argument("--bound", type=int, default=None)
    p = sub.add_parser("solve", help="tau approximation of order n")
    p.add_argument("file")
    p.add_argument("--order", type=int, default=None)
    p = sub.add_parser("check", help="run the invariant suite; nonzero exit on failure")
    p.add_argument("file")
    p.add_argument("--bound", type=int, default=None)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        pf = load(args.file)
    except ProblemFileError as exc:
        print(f"{args.file}: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"{args.file}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    fmt = args.format or pf.options.get("format", "text")
    try:
        if args.command == "analyze":
            return cmd_analyze(pf, fmt)
        if args.command == "canonical":
            bound = args.bound if args.bound is not None else pf.options.get("bound", 10)
            if bound < 0:
                raise ValueError("bound must be nonnegative")
            return cmd_canonical(pf, bound, fmt)
        if args.command == "solve":
            order = args.order if args.order is not None else pf.options.get("order")
            if order is None:
                raise ValueError("no order given; pass --order or set 'order' in [options]")
            return cmd_solve(pf, order, fmt)
        bound = args.bound if args.bound is not None else pf.options.get("bound", 12)
        return cmd_check(pf, bound, fmt)
    except (TauError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
