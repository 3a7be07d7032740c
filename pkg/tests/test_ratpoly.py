from __future__ import annotations

import math
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from corpus import polynomials
from cptau.ratpoly import (
    CHEBYSHEV_FIRST,
    LEGENDRE,
    X,
    Polynomial,
    cauchy_bound,
    classical_poly,
    falling_factorial,
    format_rational,
    natural_roots,
    rational,
)

P = Polynomial


def test_normalization_strips_trailing_zeros():
    p = P([1, 2, 0, 0])
    assert p.coeffs == (1, 2)
    assert p.degree == 1
    assert P([0, 0]).is_zero() and P().degree == -1


def test_rational_parsing():
    assert rational("3/6") == Fraction(1, 2)
    assert rational("-4") == -4
    assert rational(Fraction(2, 4)).denominator == 2
    with pytest.raises(TypeError):
        rational(0.5)
    with pytest.raises(ValueError):
        rational("x")
    assert format_rational(Fraction(3)) == "3/1"
    assert format_rational(Fraction(-1, 3)) == "-1/3"


@pytest.mark.parametrize(
    "a, b, expected",
    [
        (P([1, 0, 1]), P([1, -3]), P([1, -3, 1, -3])),
        (P([-1, 1]), P([1, 1]), P([-1, 0, 1])),
    ],
)
def test_multiplication_examples(a, b, expected):
    assert a * b == expected


def test_add_zero_and_scale():
    p = P([1, "2/3", 5])
    assert p + P() == p
    assert p.scale(0).is_zero()
    assert p.scale(3) == P([3, 2, 15])
    assert p / 2 == P(["1/2", "1/3", "5/2"])
    assert p - p == P()


def test_derivative_examples():
    assert P.monomial(4).derivative(4) == P([24])
    assert P.monomial(2).derivative(3).is_zero()
    assert (P.monomial(5) + P.monomial(3, 10)).derivative(2) == P([0, 60, 0, 20])


def test_falling_factorial_examples():
    assert falling_factorial(0) == P([1])
    assert falling_factorial(2) == P([0, -1, 1])
    assert falling_factorial(4) == P([0, -6, 11, -6, 1])


def test_natural_roots_examples():
    n = X
    assert natural_roots(n * (n - 1) * (n - 5)) == {0, 1, 5}
    assert natural_roots(P([1])) == frozenset()
    assert natural_roots(n * (n - 1) * (n - 3) * (n - 5)) == {0, 1, 3, 5}
    with pytest.raises(ValueError):
        natural_roots(P())


def test_natural_roots_ignores_negative_and_rational_roots():
    n = X
    assert natural_roots((n + 2) * (2 * n - 1) * (n - 7)) == {7}


def test_classical_examples():
    assert classical_poly(CHEBYSHEV_FIRST, 0) == P([1])
    assert classical_poly(CHEBYSHEV_FIRST, 4) == P([1, 0, -8, 0, 8])
    assert classical_poly(LEGENDRE, 2) == P(["-1/2", 0, "3/2"])
    with pytest.raises(ValueError):
        classical_poly(CHEBYSHEV_FIRST, 2, (1, 1))
    with pytest.raises(ValueError):
        classical_poly("hermite", 2)


def test_shifted_chebyshev_matches_sympy():
    x = sympy.Symbol("x")
    for k in range(8):
        ours = classical_poly(CHEBYSHEV_FIRST, k, (0, 1))
        ref = sympy.Poly(sympy.chebyshevt(k, 2 * x - 1), x).all_coeffs()[::-1]
        assert ours == P([Fraction(int(c.p), int(c.q)) for c in ref])


def _sympy_coeffs(expr, x):
    return P([Fraction(int(c.p), int(c.q)) for c in sympy.Poly(expr, x).all_coeffs()[::-1]])


@pytest.mark.parametrize("interval", [(-1, 1), (0, 1), (Fraction(-3, 2), 2)])
def test_classical_against_sympy(interval):
    x = sympy.Symbol("x")
    a, b = (sympy.Rational(str(v)) for v in interval)
    t = (2 * x - a - b) / (b - a)
    for k in range(10):
        assert classical_poly(CHEBYSHEV_FIRST, k, interval) == _sympy_coeffs(sympy.chebyshevt(k, t), x)
        assert classical_poly(LEGENDRE, k, interval) == _sympy_coeffs(sympy.legendre(k, t), x)


def test_serialization_roundtrip():
    p = P([0, 1, "-3"])
    assert p.to_strings() == ["0/1", "1/1", "-3/1"]
    assert P.from_strings(p.to_strings()) == p
    assert P().to_strings() == []


# properties

@given(polynomials(6).filter(bool), polynomials(6).filter(bool))
def test_degree_of_product(p, q):
    assert (p * q).degree == p.degree + q.degree


@given(polynomials(5), polynomials(5), polynomials(5))
def test_ring_laws(p, q, r):
    assert (p + q) * r == p * r + q * r
    assert p * q == q * p


@given(st.integers(0, 8), st.integers(0, 30))
def test_falling_factorial_values(i, n):
    expected = math.factorial(n) // math.factorial(n - i) if n >= i else 0
    assert falling_factorial(i)(n) == expected


@given(polynomials(5, elements=st.integers(-30, 30)).filter(bool))
def test_natural_roots_brute_force(p):
    bound = math.ceil(cauchy_bound(p))
    brute = {n for n in range(bound + 1) if p(n) == 0}
    assert natural_roots(p) == brute


@given(st.lists(st.integers(0, 12), min_size=1, max_size=4), st.integers(1, 5))
def test_natural_roots_of_products(roots, lead):
    p = P([lead])
    for r in roots:
        p = p * (X - r)
    assert natural_roots(p) == set(roots)


@settings(max_examples=10, deadline=None)
@given(st.sampled_from([(-1, 1), (0, 1), (Fraction(-1, 3), 5)]))
def test_three_term_recurrences_up_to_50(interval):
    a, b = (Fraction(v) for v in interval)
    t = P([-(a + b) / (b - a), 2 / (b - a)])
    T = [classical_poly(CHEBYSHEV_FIRST, k, interval) for k in range(51)]
    L = [classical_poly(LEGENDRE, k, interval) for k in range(51)]
    for k in range(1, 50):
        assert T[k + 1] == 2 * t * T[k] - T[k - 1]
        assert (k + 1) * L[k + 1] == (2 * k + 1) * t * L[k] - k * L[k - 1]
