from __future__ import annotations

import pytest
import sympy
from hypothesis import given, settings

from corpus import operators
from cptau import FiniteMatrix, Polynomial, build_pi1, echelon, operator_from_lists, reduce_pre_lref
from cptau.linalg import rank

P = Polynomial


def span_rank(polys, width):
    return rank([[p.coeff(k) for k in range(width)] for p in polys], width)


def same_span(a, b):
    width = max([p.degree for p in (*a, *b)] + [0]) + 1
    ra = span_rank(a, width)
    return ra == span_rank(b, width) == span_rank((*a, *b), width)


def sympy_kernel(op):
    """Left null space of the finite block, as polynomials, via sympy."""
    pi1 = build_pi1(op)
    if not pi1.rows:
        return []
    rows = pi1.as_lists()
    mat = sympy.Matrix([[sympy.Rational(c.numerator, c.denominator) for c in r] for r in rows])
    return [P([str(v) for v in vec]) for vec in mat.T.nullspace()]


def test_top_blocks(ex1, ex2):
    assert build_pi1(ex1).rows == (P(), P(), P([-6]), P([0, -12]), P([24, 0, -12]), P([0, 120]))
    assert build_pi1(ex2).rows == (P(), P(), P([6]), P([6]), P([24, 24, -12]), P([0, 120, 60]))
    assert build_pi1(ex1).columns == 4


def test_second_derivative_block():
    op = operator_from_lists([(2, [1])])
    pi1 = build_pi1(op)
    assert len(pi1.rows) == 2 and all(r.is_zero() for r in pi1.rows)
    ech = echelon(op)
    assert ech.kernel_basis == (P([1]), P([0, 1]))
    assert ech.inaccessible == frozenset()


def test_example1_reduction(ex1):
    ech = echelon(ex1)
    assert ech.reduced.rows == (P(), P(), P(), P([-6]), P([0, -12]), P([24, 0, -12]))
    x = P.monomial
    assert ech.standard_polys == (x(0), x(1), x(5) + x(3, 10), x(2), x(3), x(4))
    assert ech.S == {3}
    assert same_span(ech.kernel_basis, (x(0), x(1), x(5) + x(3, 10)))
    assert ech.sigma == {3: 0, 4: 1, 5: 2}
    assert ech.pivots == {0: (3, -6), 1: (4, -12), 2: (5, -12)}


def test_example2_reduction(ex2):
    ech = echelon(ex2)
    x = P.monomial
    assert ech.reduced.rows == (P(), P(), P(), P([6]), P([120, 240]), P([24, 24, -12]))
    assert ech.standard_polys[:2] == (x(0), x(1))
    assert ech.standard_polys[2] in (x(2) - x(3), x(3) - x(2))
    assert ech.standard_polys[3:] == (x(2), x(4, 5) + x(5), x(4))
    assert ech.S == {3}
    assert same_span(ech.kernel_basis, (x(0), x(1), x(2) - x(3)))


def test_all_zero_matrix():
    m = FiniteMatrix(rows=(P(), P()), columns=1)
    ech = reduce_pre_lref(m, (P([1]), P([0, 1])))
    assert ech.kernel_basis == (P([1]), P([0, 1]))
    assert ech.sigma == {}
    assert ech.S == {0}


def test_empty_block_identity_and_positive_height():
    assert echelon(operator_from_lists([(0, [1])])).S == frozenset()
    ech = echelon(operator_from_lists([(0, [0, 0, 1])]))  # multiplication by x^2
    assert ech.S == {0, 1}
    assert ech.kernel_basis == ()


def test_mismatched_basis_rejected(ex1):
    with pytest.raises(ValueError):
        reduce_pre_lref(build_pi1(ex1), [P([1])])


# properties

@settings(max_examples=100, deadline=None)
@given(operators())
def test_pre_lref_shape(op):
    ech = echelon(op)
    rows = ech.reduced.rows
    z = ech.zero_rows
    assert all(r.is_zero() for r in rows[:z]) and all(rows[z:])
    sig = [ech.sigma[p] for p in range(z, len(rows))]
    assert sig == sorted(set(sig))
    assert all(rows[p].degree == s for p, s in ech.sigma.items())


@settings(max_examples=100, deadline=None)
@given(operators())
def test_commutation_and_kernel(op):
    ech = echelon(op)
    for s, r in zip(ech.standard_polys, ech.reduced.rows):
        assert op(s) == r
    assert all(op(u).is_zero() for u in ech.kernel_basis)


@settings(max_examples=100, deadline=None)
@given(operators())
def test_span_preservation(op):
    pi1 = build_pi1(op)
    ech = echelon(op)
    assert same_span(pi1.rows, ech.reduced.rows)
    n = len(pi1.rows)
    assert same_span([P.monomial(k) for k in range(n)], ech.standard_polys)


@settings(max_examples=100, deadline=None)
@given(operators())
def test_kernel_matches_sympy_nullspace(op):
    ech = echelon(op)
    ref = sympy_kernel(op)
    assert len(ref) == len(ech.kernel_basis)
    assert same_span(ref, ech.kernel_basis)


@settings(max_examples=100, deadline=None)
@given(operators())
def test_sigma_and_s_partition(op):
    ech = echelon(op)
    prof = op.profile
    top = set(range(prof.codomain_size))
    image = set(ech.sigma.values())
    assert image <= top
    assert image.isdisjoint(ech.S) and image | ech.S == top
    assert len(ech.S) - len(ech.kernel_basis) == prof.height
