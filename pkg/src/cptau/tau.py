"""Tau approximation through a basis of canonical polynomials.

The perturbed equation D y_n = f + H_n, with H_n a combination of the
M = nu + h highest Chebyshev (or Legendre) polynomials up to degree n, is
solved exactly. The unknowns are one free constant per kernel polynomial
and the M tau parameters; the equations are the matching conditions that
push f + H_n into the range of D, plus the nu supplementary conditions.
"""
from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from .canonical import CanonicalBasis, generate
from .diffop import DiffOperator
from .echelon import echelon
from .linalg import SingularSystemError, solve_square
from .ratpoly import CHEBYSHEV_FIRST, CLASSICAL_KINDS, Polynomial, classical_poly, format_rational, rational


class TauError(ValueError):
    """Domain error raised by the tau solver."""


class OrderError(TauError):
    pass


class NotInRangeError(TauError):
    pass


class InconsistentSystemError(TauError):
    pass


@dataclass(frozen=True)
class AffineForm:
    """constant + sum(coeffs[k] * unknown_k)."""

    constant: Fraction
    coeffs: tuple[Fraction, ...]
    names: tuple[str, ...]

    def __str__(self) -> str:
        parts = [f"{format_rational(c)}*{n}" for c, n in zip(self.coeffs, self.names) if c]
        if self.constant or not parts:
            parts.append(format_rational(self.constant))
        return " + ".join(parts) + " = 0"

    def coefficient(self, name: str) -> Fraction:
        return self.coeffs[self.names.index(name)]

    def evaluate(self, values: Sequence[Fraction]) -> Fraction:
        return self.constant + sum((c * v for c, v in zip(self.coeffs, values)), Fraction(0))


@dataclass(frozen=True)
class AffinePolynomial:
    """Polynomial whose coefficients are affine in named unknowns.

    Stored as ``constant + sum(unknown_k * parts[k])``.
    """

    constant: Polynomial
    parts: tuple[Polynomial, ...]
    names: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(self.parts))
        object.__setattr__(self, "names", tuple(self.names))
        if len(self.parts) != len(self.names):
            raise ValueError("one part per unknown is required")

    @classmethod
    def generic(cls, degree: int, prefix: str = "g") -> AffinePolynomial:
        """g_0 + g_1 x + ... + g_degree x^degree with every coefficient unknown."""
        return cls(
            Polynomial(),
            tuple(Polynomial.monomial(k) for k in range(degree + 1)),
            tuple(f"{prefix}{k}" for k in range(degree + 1)),
        )

    @property
    def degree(self) -> int:
        return max([self.constant.degree] + [p.degree for p in self.parts])

    def coefficient(self, k: int) -> AffineForm:
        return AffineForm(self.constant.coeff(k), tuple(p.coeff(k) for p in self.parts), self.names)

    def map(self, fn) -> AffinePolynomial:
        """Apply a linear map Polynomial -> Polynomial componentwise."""
        return AffinePolynomial(fn(self.constant), tuple(fn(p) for p in self.parts), self.names)

    def substitute(self, values: Sequence[Fraction]) -> Polynomial:
        out = self.constant
        for v, p in zip(values, self.parts):
            out = out + p.scale(v)
        return out


def _as_affine(g: Polynomial | AffinePolynomial) -> AffinePolynomial:
    if isinstance(g, AffinePolynomial):
        return g
    return AffinePolynomial(g, (), ())


@dataclass(frozen=True)
class Condition:
    """sum(weight * y^(order)(point)) = rhs."""

    terms: tuple[tuple[Fraction, int, Fraction], ...]
    rhs: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        terms = tuple((rational(p), int(k), rational(w)) for p, k, w in self.terms)
        if not terms:
            raise ValueError("a condition needs at least one term")
        if any(k < 0 for _, k, _ in terms):
            raise ValueError("derivative orders must be nonnegative")
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "rhs", rational(self.rhs))

    @classmethod
    def value(cls, point, rhs, order: int = 0) -> Condition:
        """y^(order)(point) = rhs."""
        return cls(((point, order, 1),), rhs)

    def functional(self, p: Polynomial) -> Fraction:
        return sum((w * p.derivative(k)(x0) for x0, k, w in self.terms), Fraction(0))

    def residual(self, p: Polynomial) -> Fraction:
        return self.functional(p) - self.rhs

    def form(self, y: AffinePolynomial) -> AffineForm:
        return AffineForm(
            self.functional(y.constant) - self.rhs,
            tuple(self.functional(p) for p in y.parts),
            y.names,
        )


@dataclass(frozen=True)
class Perturbation:
    kind: str = CHEBYSHEV_FIRST
    interval: tuple[Fraction, Fraction] = (Fraction(-1), Fraction(1))

    def __post_init__(self) -> None:
        if self.kind not in CLASSICAL_KINDS:
            raise ValueError(f"unknown perturbation kind {self.kind!r}")
        a, b = (rational(v) for v in self.interval)
        if a >= b:
            raise ValueError(f"perturbation interval must satisfy a < b, got [{a}, {b}]")
        object.__setattr__(self, "interval", (a, b))

    def term(self, k: int) -> Polynomial:
        return classical_poly(self.kind, k, self.interval)


@dataclass(frozen=True)
class TauProblem:
    operator: DiffOperator
    rhs: Polynomial
    conditions: tuple[Condition, ...]
    perturbation: Perturbation = field(default_factory=Perturbation)

    def __post_init__(self) -> None:
        object.__setattr__(self, "conditions", tuple(self.conditions))
        if len(self.conditions) != self.operator.nu:
            raise ValueError(
                f"an order-{self.operator.nu} operator needs {self.operator.nu} conditions, "
                f"got {len(self.conditions)}"
            )


@dataclass(frozen=True)
class TauSolution:
    n: int
    y_n: Polynomial
    taus: tuple[Fraction, ...]
    free_constants: tuple[Fraction, ...]
    perturbation_poly: Polynomial
    kernel_basis: tuple[Polynomial, ...] = ()
    equations: int = 0
    unknowns: int = 0


def lift(basis: CanonicalBasis, p: Polynomial) -> Polynomial:
    """sum of p_i q_i over accessible i: a preimage of p when p is in Im(D)."""
    if p.degree > basis.bound:
        raise ValueError(
            f"degree {p.degree} exceeds the canonical basis bound {basis.bound}; "
            "regenerate the basis with a larger bound"
        )
    out = Polynomial()
    for i, c in enumerate(p.coeffs):
        if c and i not in basis.inaccessible:
            out = out + basis.q(i).scale(c)
    return out


def _matching_defect(basis: CanonicalBasis, p: Polynomial, s: int) -> Fraction:
    """p_s - sum_i p_i r_{i,s}; zero for every s in S iff p is in Im(D)."""
    acc = p.coeff(s)
    for i, c in enumerate(p.coeffs):
        if c and i not in basis.inaccessible:
            acc -= c * basis.r(i).coeff(s)
    return acc


def stmc(basis: CanonicalBasis, g: Polynomial | AffinePolynomial) -> list[AffineForm]:
    """Matching conditions, one per inaccessible index s, each meaning ``form == 0``."""
    g = _as_affine(g)
    if g.degree > basis.bound:
        raise ValueError(
            f"degree {g.degree} exceeds the canonical basis bound {basis.bound}; "
            "regenerate the basis with a larger bound"
        )
    out = []
    for s in sorted(basis.inaccessible):
        out.append(
            AffineForm(
                _matching_defect(basis, g.constant, s),
                tuple(_matching_defect(basis, p, s) for p in g.parts),
                g.names,
            )
        )
    return out


def _basis_for(op: DiffOperator, degree: int, basis: CanonicalBasis | None) -> CanonicalBasis:
    if basis is not None and basis.bound >= degree:
        return basis
    return generate(op, echelon(op), max(degree, 0))


def exact_solve(
    op: DiffOperator, g: Polynomial, basis: CanonicalBasis | None = None
) -> AffinePolynomial:
    """General polynomial solution of D y = g with one free constant C_w per kernel element."""
    basis = _basis_for(op, g.degree, basis)
    if any(eq.constant for eq in stmc(basis, g)):
        raise NotInRangeError("g not in range of D: matching conditions violated")
    kernel = basis.null_cps
    return AffinePolynomial(lift(basis, g), kernel, tuple(f"C{w}" for w in range(len(kernel))))


def solve_tau(problem: TauProblem, n: int, basis: CanonicalBasis | None = None) -> TauSolution:
    op = problem.operator
    prof = op.profile
    if n <= prof.cutoff:
        raise OrderError(f"order must exceed N={prof.cutoff} (got n={n})")
    m_taus = op.nu + prof.height
    if n - m_taus + 1 < 0:
        raise OrderError(f"order n={n} is too small for {m_taus} perturbation terms")

    rhos = tuple(problem.perturbation.term(n - i + 1) for i in range(1, m_taus + 1))
    basis = _basis_for(op, max(n, problem.rhs.degree), basis)
    kernel = basis.null_cps
    names = tuple(f"C{w}" for w in range(len(kernel))) + tuple(
        f"tau{i}" for i in range(1, m_taus + 1)
    )

    g = AffinePolynomial(problem.rhs, (Polynomial(),) * len(kernel) + rhos, names)
    y = AffinePolynomial(
        lift(basis, problem.rhs),
        kernel + tuple(lift(basis, rho) for rho in rhos),
        names,
    )
    eqs = stmc(basis, g) + [c.form(y) for c in problem.conditions]
    if len(eqs) != len(names):
        raise InconsistentSystemError(
            f"tau system is {len(eqs)} x {len(names)}; expected a square system"
        )
    try:
        z = solve_square([list(e.coeffs) for e in eqs], [-e.constant for e in eqs])
    except SingularSystemError:
        raise InconsistentSystemError(
            "conditions and STMC are linearly dependent or inconsistent"
        ) from None

    alpha = len(kernel)
    taus = tuple(z[alpha:])
    perturbation_poly = Polynomial()
    for t, rho in zip(taus, rhos):
        perturbation_poly = perturbation_poly + rho.scale(t)
    return TauSolution(
        n=n,
        y_n=y.substitute(z),
        taus=taus,
        free_constants=tuple(z[:alpha]),
        perturbation_poly=perturbation_poly,
        kernel_basis=kernel,
        equations=len(eqs),
        unknowns=len(names),
    )


@dataclass(frozen=True)
class ResidualReport:
    samples: tuple[tuple[Fraction, Fraction], ...]
    max_tau: Fraction
    condition_residuals: tuple[Fraction, ...]
    identity_residual: Polynomial

    @property
    def max_tau_approx(self) -> float:
        return float(self.max_tau)

    def lines(self) -> list[str]:
        out = ["x\tH_n(x) (exact)\tH_n(x) (approx)"]
        for x, v in self.samples:
            out.append(f"{x}\t{v}\t~{float(v):.6g}")
        return out


def residual_report(
    sol: TauSolution, problem: TauProblem, sample_points: Sequence = ()
) -> ResidualReport:
    points = [rational(p) for p in sample_points]
    return ResidualReport(
        samples=tuple((x, sol.perturbation_poly(x)) for x in points),
        max_tau=max((abs(t) for t in sol.taus), default=Fraction(0)),
        condition_residuals=tuple(c.residual(sol.y_n) for c in problem.conditions),
        identity_residual=problem.operator(sol.y_n) - problem.rhs - sol.perturbation_poly,
    )
