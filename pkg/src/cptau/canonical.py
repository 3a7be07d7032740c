"""Canonical polynomials generated from a standard basis.

For each nonzero row j of the pre-LREF matrix (finite block first, then the
untouched monomials x^n with n > N) the recurrence

    q[sigma_j] = (s_j - sum_{i < sigma_j, i not in S} a_ji q_i) / a_j,sigma_j

gives D(q_m) = x^m + r_m with r_m supported on the inaccessible set S.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .diffop import DiffOperator
from .echelon import EchelonResult, echelon
from .ratpoly import Polynomial


class CPClass(str, Enum):
    NULL = "null"
    PRIMARY_GENERIC = "primary_generic"
    PRIMARY_SINGULAR = "primary_singular"
    DERIVED_SINGULAR = "derived_singular"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class CanonicalEntry:
    index: int
    q: Polynomial
    r: Polynomial
    cls: CPClass


@dataclass(frozen=True)
class CanonicalBasis:
    null_cps: tuple[Polynomial, ...]
    entries: dict[int, CanonicalEntry]
    sigma_table: dict[int, int]
    inaccessible: frozenset[int]
    bound: int

    @property
    def S(self) -> frozenset[int]:
        return self.inaccessible

    def q(self, m: int) -> Polynomial:
        return self.entries[m].q

    def r(self, m: int) -> Polynomial:
        return self.entries[m].r

    def indices(self) -> list[int]:
        return sorted(self.entries)

    def __iter__(self):
        return (self.entries[m] for m in self.indices())


def _standard_rows(op: DiffOperator, ech: EchelonResult, bound: int):
    """Yield (standard position, image row, standard polynomial) in ascending sigma."""
    prof = op.profile
    for pos in sorted(ech.sigma, key=ech.sigma.get):
        if ech.sigma[pos] <= bound:
            yield pos, ech.reduced.rows[pos], ech.standard_polys[pos]
    n = prof.cutoff + 1
    while n + prof.height <= bound:
        yield n, op.monomial_image(n), Polynomial.monomial(n)
        n += 1


def generate(op: DiffOperator, ech: EchelonResult | None = None, degree_bound: int = 10) -> CanonicalBasis:
    if degree_bound < 0:
        raise ValueError("degree_bound must be nonnegative")
    ech = echelon(op) if ech is None else ech
    S = ech.inaccessible
    qs: dict[int, Polynomial] = {}
    table: dict[int, int] = {}
    for pos, row, s in _standard_rows(op, ech, degree_bound):
        sigma = row.degree
        table[pos] = sigma
        acc = s
        for i in range(sigma):
            a = row.coeff(i)
            if a and i not in S:
                acc = acc - qs[i].scale(a)
        qs[sigma] = acc / row.coeff(sigma)

    classes = classify_indices(op, qs)
    entries = {
        m: CanonicalEntry(index=m, q=q, r=op(q) - Polynomial.monomial(m), cls=classes[m])
        for m, q in qs.items()
    }
    return CanonicalBasis(
        null_cps=ech.kernel_basis,
        entries=entries,
        sigma_table=table,
        inaccessible=S,
        bound=degree_bound,
    )


def residuals(basis: CanonicalBasis) -> dict[int, Polynomial]:
    return {m: e.r for m, e in basis.entries.items()}


def monomial_sigma(op: DiffOperator) -> dict[int, int]:
    """sigma_n = deg D(x^n) for the finite-block monomials with nonzero image.

    Every n > N has sigma_n = n + h and is left implicit.
    """
    out = {}
    for n in range(op.profile.cutoff + 1):
        img = op.monomial_image(n)
        if img:
            out[n] = img.degree
    return out


def classify_index(op: DiffOperator, m: int, source: int | None = None) -> CPClass:
    """Class of the canonical polynomial of index m.

    With ``source`` = n the CP is taken to come from the standard element x^n,
    which decides generic against singular for that particular choice.
    Without it, index m is primary-generic as soon as some n has
    sigma_n = m = n + h.
    """
    prof = op.profile
    h = prof.height
    if source is not None:
        img = op.monomial_image(source)
        if not img or img.degree != m:
            raise ValueError(f"deg D(x^{source}) != {m}; x^{source} cannot generate index {m}")
        return CPClass.PRIMARY_GENERIC if m == source + h else CPClass.PRIMARY_SINGULAR
    if m > prof.cutoff + h:
        return CPClass.PRIMARY_GENERIC
    sources = [n for n, s in monomial_sigma(op).items() if s == m]
    if not sources:
        return CPClass.DERIVED_SINGULAR
    if any(m == n + h for n in sources):
        return CPClass.PRIMARY_GENERIC
    return CPClass.PRIMARY_SINGULAR


def classify_indices(op: DiffOperator, indices) -> dict[int, CPClass]:
    return {m: classify_index(op, m) for m in indices}


def classify(op: DiffOperator, basis: CanonicalBasis) -> dict[int, CPClass]:
    return classify_indices(op, basis.entries)


def has_derived_singular(op: DiffOperator, ech: EchelonResult | None = None) -> bool:
    """True iff deg D(x^n) misses some accessible index, so no complete sequence is all primary."""
    ech = echelon(op) if ech is None else ech
    prof = op.profile
    accessible_low = set(range(prof.codomain_size)) - ech.inaccessible
    return bool(accessible_low - set(monomial_sigma(op).values()))
