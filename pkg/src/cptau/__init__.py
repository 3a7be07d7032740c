"""Exact recursive tau method for linear ODEs with polynomial coefficients.

Pipeline: operator constants (``diffop``), echelon transformation of the
finite block (``echelon``), canonical polynomials (``canonical``) and the
tau solver (``tau``). All arithmetic is exact over ``fractions.Fraction``.
"""
from .canonical import CanonicalBasis, CanonicalEntry, CPClass, classify, classify_index, generate, has_derived_singular, residuals
from .diffop import DiffOperator, OperatorProfile, apply, monomial_image, operator_from_lists, profile, verify_height_index
from .echelon import EchelonResult, FiniteMatrix, build_pi1, echelon, reduce_pre_lref
from .ratpoly import Polynomial, classical_poly, falling_factorial, natural_roots
from .tau import (
    AffineForm,
    AffinePolynomial,
    Condition,
    InconsistentSystemError,
    NotInRangeError,
    OrderError,
    Perturbation,
    TauError,
    TauProblem,
    TauSolution,
    exact_solve,
    residual_report,
    solve_tau,
    stmc,
)

__all__ = [
    "AffineForm",
    "AffinePolynomial",
    "CPClass",
    "CanonicalBasis",
    "CanonicalEntry",
    "Condition",
    "DiffOperator",
    "EchelonResult",
    "FiniteMatrix",
    "InconsistentSystemError",
    "NotInRangeError",
    "OperatorProfile",
    "OrderError",
    "Perturbation",
    "Polynomial",
    "TauError",
    "TauProblem",
    "TauSolution",
    "apply",
    "build_pi1",
    "classical_poly",
    "classify",
    "classify_index",
    "echelon",
    "exact_solve",
    "falling_factorial",
    "generate",
    "has_derived_singular",
    "monomial_image",
    "natural_roots",
    "operator_from_lists",
    "profile",
    "reduce_pre_lref",
    "residual_report",
    "residuals",
    "solve_tau",
    "stmc",
    "verify_height_index",
]
