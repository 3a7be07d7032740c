"""Invariant checks on an operator's echelon form and canonical basis.

The brute-force oracle here never touches the recurrence: it solves the
truncated monomial system D(c) = x^m + (free multiples of x^s, s in S)
by plain exact elimination.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .canonical import CanonicalBasis, generate
from .diffop import DiffOperator, verify_height_index
from .echelon import EchelonResult, echelon
from .linalg import in_span, particular_solution
from .ratpoly import Polynomial


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


def oracle_degree(op: DiffOperator, m: int) -> int:
    """Truncation degree for the brute-force oracle.

    Recurrence outputs have degree <= max(N, m - h), so m - h + 2 alone is
    too small when the finite block reaches higher (typically h > 0).
    """
    prof = op.profile
    return max(m - prof.height + 2, prof.cutoff, 0)


def truncated_canonical(
    op: DiffOperator, m: int, inaccessible, degree: int
) -> Polynomial | None:
    """Some c of degree <= ``degree`` with D(c) - x^m supported on S, or None."""
    images = [op.monomial_image(j) for j in range(degree + 1)]
    slots = sorted(inaccessible)
    top = max([m] + [p.degree for p in images] + slots)
    rows, rhs = [], []
    for k in range(top + 1):
        rows.append([im.coeff(k) for im in images] + [Fraction(-1 if k == s else 0) for s in slots])
        rhs.append(Fraction(1 if k == m else 0))
    x = particular_solution(rows, rhs, len(images) + len(slots))
    if x is None:
        return None
    return Polynomial(x[: degree + 1])


def differs_by_kernel(p: Polynomial, q: Polynomial, kernel) -> bool:
    diff = p - q
    width = max([diff.degree] + [u.degree for u in kernel]) + 1
    vecs = [[u.coeff(k) for k in range(width)] for u in kernel]
    return in_span(vecs, [diff.coeff(k) for k in range(width)])


def _check_identity(op: DiffOperator, basis: CanonicalBasis) -> CheckResult:
    for e in basis:
        if op(e.q) != Polynomial.monomial(e.index) + e.r:
            return CheckResult("defining identity", False, f"D(q_{e.index}) != x^{e.index} + r")
        if not e.r.support() <= basis.inaccessible:
            return CheckResult("defining identity", False, f"r_{e.index} leaves S")
        if e.r.degree >= e.index:
            return CheckResult("defining identity", False, f"deg r_{e.index} >= {e.index}")
    return CheckResult("defining identity", True, f"{len(basis.entries)} canonical polynomials")


def _check_echelon(op: DiffOperator, ech: EchelonResult) -> list[CheckResult]:
    out = []
    rows = ech.reduced.rows
    z = ech.zero_rows
    shape_ok = all(r.is_zero() for r in rows[:z]) and all(r for r in rows[z:])
    sig = [ech.sigma[p] for p in range(z, len(rows))]
    shape_ok = shape_ok and all(a < b for a, b in zip(sig, sig[1:]))
    out.append(CheckResult("pre-LREF shape", shape_ok))
    commute = all(op(s) == r for s, r in zip(ech.standard_polys, rows))
    out.append(CheckResult("row operations commute with D", commute))
    kernel_ok = all(op(u).is_zero() for u in ech.kernel_basis)
    out.append(CheckResult("kernel exactness", kernel_ok, f"dim Ker = {len(ech.kernel_basis)}"))
    return out


def run_checks(op: DiffOperator, bound: int = 12, oracle_bound: int = 10) -> list[CheckResult]:
    ech = echelon(op)
    basis = generate(op, ech, bound)
    prof = op.profile
    results = _check_echelon(op, ech)
    results.append(_check_identity(op, basis))

    expected = set(range(bound + 1)) - ech.inaccessible
    results.append(CheckResult("completeness", set(basis.entries) == expected))

    alpha, beta = len(ech.kernel_basis), len(ech.inaccessible)
    results.append(
        CheckResult(
            "height = -index",
            verify_height_index(op, alpha, beta),
            f"h={prof.height}, beta={beta}, alpha={alpha}",
        )
    )

    bad = []
    for m in basis.indices():
        if m > oracle_bound:
            break
        qh = truncated_canonical(op, m, ech.inaccessible, oracle_degree(op, m))
        if qh is None or not differs_by_kernel(qh, basis.q(m), ech.kernel_basis):
            bad.append(m)
    results.append(
        CheckResult("oracle equivalence", not bad, f"failing indices {bad}" if bad else "")
    )
    return results
