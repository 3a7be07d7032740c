"""Linear differential operators with polynomial coefficients.

An operator is ``D = sum_i p_i(x) d^i/dx^i`` acting on polynomials. Its
structural constants (height, depth, the super-diagonal polynomial and the
cutoff N) decide where the matrix of D stops being echelon by itself.
"""
from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .ratpoly import Polynomial, falling_factorial, natural_roots


@dataclass(frozen=True)
class OperatorProfile:
    height: int
    depth: int
    xi: Polynomial
    omega: frozenset[int]
    cutoff: int

    @property
    def top_rows(self) -> int:
        """Number of domain monomials x^0..x^N in the finite block."""
        return self.cutoff + 1

    @property
    def codomain_size(self) -> int:
        """Size of the initial segment {0, ..., N + h} holding the inaccessible set."""
        return max(self.cutoff + self.height + 1, 0)


@dataclass(frozen=True)
class DiffOperator:
    """``coeffs[i]`` is the polynomial multiplying the i-th derivative."""

    coeffs: tuple[Polynomial, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        if not coeffs or coeffs[-1].is_zero():
            raise ValueError("the leading coefficient p_nu must be nonzero")

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[int, Polynomial]]) -> DiffOperator:
        """Build from (derivative order, coefficient) pairs; repeated orders add up."""
        acc: dict[int, Polynomial] = {}
        for order, poly in terms:
            if order < 0:
                raise ValueError("derivative order must be nonnegative")
            acc[order] = acc.get(order, Polynomial()) + poly
        nonzero = [i for i, p in acc.items() if p]
        if not nonzero:
            raise ValueError("zero operator")
        nu = max(nonzero)
        return cls(tuple(acc.get(i, Polynomial()) for i in range(nu + 1)))

    @property
    def nu(self) -> int:
        return len(self.coeffs) - 1

    def terms(self) -> list[tuple[int, Polynomial]]:
        return [(i, p) for i, p in enumerate(self.coeffs) if p]

    def __call__(self, p: Polynomial) -> Polynomial:
        return apply(self, p)

    def monomial_image(self, n: int) -> Polynomial:
        return monomial_image(self, n)

    @cached_property
    def profile(self) -> OperatorProfile:
        return profile(self)

    def __str__(self) -> str:
        parts = []
        for i, p in reversed(self.terms()):
            d = "" if i == 0 else ("d/dx" if i == 1 else f"d^{i}/dx^{i}")
            coef = f"({p})"
            parts.append(f"{coef}{'·' + d if d else ''}")
        return " + ".join(parts)


def apply(op: DiffOperator, p: Polynomial) -> Polynomial:
    out = Polynomial()
    for i, coeff in op.terms():
        out = out + coeff * p.derivative(i)
    return out


def monomial_image(op: DiffOperator, n: int) -> Polynomial:
    """D(x^n) assembled term by term from n!/(n-i)! x^(n-i+j)."""
    if n < 0:
        raise ValueError("monomial power must be nonnegative")
    out: dict[int, Fraction] = {}
    for i, coeff in op.terms():
        if i > n:
            continue
        ff = falling_factorial(i)(n)
        for j, c in enumerate(coeff.coeffs):
            if c:
                out[n - i + j] = out.get(n - i + j, Fraction(0)) + c * ff
    if not out:
        return Polynomial()
    return Polynomial(out.get(k, 0) for k in range(max(out) + 1))


def profile(op: DiffOperator) -> OperatorProfile:
    terms = op.terms()
    height = max(p.degree - i for i, p in terms)
    depth = min(p.low - i for i, p in terms)
    xi = Polynomial()
    for i, p in terms:
        if p.degree - i == height:
            xi = xi + falling_factorial(i) * p.leading
    omega = natural_roots(xi)
    cutoff = max(omega) if omega else -1
    return OperatorProfile(height=height, depth=depth, xi=xi, omega=omega, cutoff=cutoff)


def verify_height_index(op: DiffOperator, kernel_dim: int, deficiency: int) -> bool:
    """Check h = beta(D) - alpha(D), i.e. h = -index(D)."""
    return op.profile.height == deficiency - kernel_dim


def operator_from_lists(terms: Sequence[tuple[int, Sequence]]) -> DiffOperator:
    """Convenience constructor: ``[(order, [c0, c1, ...]), ...]``."""
    return DiffOperator.from_terms((order, Polynomial(cs)) for order, cs in terms)
