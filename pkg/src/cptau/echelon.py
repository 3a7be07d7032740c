"""Echelon transformation of the finite block of an operator matrix.

Row n of the finite block is the coefficient vector of D(x^n) for
0 <= n <= N. Elementary row operations bring it to pre-LREF (zero rows on
top, strictly increasing last-nonzero column, pivots left unnormalized).
Replaying the same operations on x^0..x^N yields a standard basis whose
zero-row members span the polynomial kernel.
"""
from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from .diffop import DiffOperator, OperatorProfile
from .ratpoly import Polynomial


@dataclass(frozen=True)
class FiniteMatrix:
    """Rows stored as coefficient polynomials; ``columns`` is N + h + 1."""

    rows: tuple[Polynomial, ...]
    columns: int

    @property
    def width(self) -> int:
        return max([self.columns] + [r.degree + 1 for r in self.rows])

    def as_lists(self, width: int | None = None) -> list[list[Fraction]]:
        w = self.width if width is None else width
        return [[r.coeff(k) for k in range(w)] for r in self.rows]


@dataclass(frozen=True)
class EchelonResult:
    reduced: FiniteMatrix
    standard_polys: tuple[Polynomial, ...]
    sigma: dict[int, int]
    inaccessible: frozenset[int]
    pivots: dict[int, tuple[int, Fraction]] = field(default_factory=dict)

    @property
    def zero_rows(self) -> int:
        return sum(1 for r in self.reduced.rows if r.is_zero())

    @property
    def kernel_basis(self) -> tuple[Polynomial, ...]:
        return self.standard_polys[: self.zero_rows]

    @property
    def S(self) -> frozenset[int]:
        return self.inaccessible


def build_pi1(op: DiffOperator, prof: OperatorProfile | None = None) -> FiniteMatrix:
    prof = op.profile if prof is None else prof
    rows = tuple(op.monomial_image(n) for n in range(prof.cutoff + 1))
    return FiniteMatrix(rows=rows, columns=prof.codomain_size)


def reduce_pre_lref(m: FiniteMatrix, domain_basis: Sequence[Polynomial]) -> EchelonResult:
    """Reduce to pre-LREF, applying every row operation to ``domain_basis`` too.

    Columns are swept right to left. Among the rows whose last nonzero entry
    sits in the current column, the one with the smallest original index is
    kept as pivot and the others have that entry eliminated.
    """
    if len(domain_basis) != len(m.rows):
        raise ValueError("domain_basis needs exactly one polynomial per matrix row")
    rows = list(m.rows)
    basis = list(domain_basis)
    owner: dict[int, int] = {}
    top = max((r.degree for r in rows), default=-1)
    for col in range(top, -1, -1):
        hits = [i for i, r in enumerate(rows) if r.degree == col]
        if not hits:
            continue
        p = hits[0]
        lead = rows[p].coeff(col)
        for i in hits[1:]:
            f = rows[i].coeff(col) / lead
            rows[i] = rows[i] - rows[p].scale(f)
            basis[i] = basis[i] - basis[p].scale(f)
        owner[col] = p

    zero = [i for i, r in enumerate(rows) if r.is_zero()]
    nonzero = sorted((i for i, r in enumerate(rows) if r), key=lambda i: rows[i].degree)
    order = zero + nonzero
    reduced = tuple(rows[i] for i in order)
    standard = tuple(basis[i] for i in order)
    sigma = {pos: reduced[pos].degree for pos in range(len(zero), len(order))}
    pivots = {col: (pos, reduced[pos].coeff(col)) for pos, col in sigma.items()}
    inaccessible = frozenset(range(m.columns)) - set(sigma.values())
    return EchelonResult(
        reduced=FiniteMatrix(rows=reduced, columns=m.columns),
        standard_polys=standard,
        sigma=sigma,
        inaccessible=inaccessible,
        pivots=pivots,
    )


def echelon(op: DiffOperator) -> EchelonResult:
    """Finite block of ``op`` reduced against the monomials x^0..x^N.

    With N = -1 the block is empty, and S is whatever part of {0..h-1} the
    bottom block cannot reach, i.e. all of it.
    """
    prof = op.profile
    pi1 = build_pi1(op, prof)
    domain = [Polynomial.monomial(n) for n in range(prof.cutoff + 1)]
    return reduce_pre_lref(pi1, domain)
