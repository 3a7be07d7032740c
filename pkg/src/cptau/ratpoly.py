"""Exact rational scalars and dense univariate polynomials.

``fractions.Fraction`` is the scalar type throughout the package; it is
always reduced with a positive denominator, which is all we need.
"""
from __future__ import annotations

import itertools
import math
from collections.abc import Iterable, Sequence
from fractions import Fraction
from typing import Union

Scalar = Union[Fraction, int]

CHEBYSHEV_FIRST = "chebyshev_first"
LEGENDRE = "legendre"
CLASSICAL_KINDS = (CHEBYSHEV_FIRST, LEGENDRE)


def rational(value: Scalar | str) -> Fraction:
    """Parse an int, Fraction or a ``"p/q"`` / ``"p"`` string."""
    if isinstance(value, str):
        text = value.strip()
        if not text:
            raise ValueError("empty rational literal")
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"invalid rational literal {value!r}") from exc
    if isinstance(value, float):
        raise TypeError("floats are not accepted; use Fraction or a 'p/q' string")
    return Fraction(value)


def format_rational(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


class Polynomial:
    """Dense polynomial over the rationals, coefficients in ascending powers.

    Instances are immutable. Trailing zeros are stripped, so the zero
    polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coeffs: Iterable[Scalar | str] = ()) -> None:
        values = [rational(c) for c in coeffs]
        while values and values[-1] == 0:
            values.pop()
        self._coeffs: tuple[Fraction, ...] = tuple(values)
        self._hash: int | None = None

    @classmethod
    def monomial(cls, n: int, coeff: Scalar = 1) -> Polynomial:
        if n < 0:
            raise ValueError("monomial power must be nonnegative")
        return cls([0] * n + [coeff])

    @classmethod
    def constant(cls, c: Scalar) -> Polynomial:
        return cls([c])

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Index of the highest nonzero coefficient; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    @property
    def low(self) -> int:
        """Lowest power with a nonzero coefficient; -1 for the zero polynomial."""
        for k, c in enumerate(self._coeffs):
            if c:
                return k
        return -1

    @property
    def leading(self) -> Fraction:
        return self._coeffs[-1] if self._coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def coeff(self, k: int) -> Fraction:
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return Fraction(0)

    def support(self) -> set[int]:
        return {k for k, c in enumerate(self._coeffs) if c}

    def __len__(self) -> int:
        return len(self._coeffs)

    def __iter__(self):
        return iter(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self._coeffs == Polynomial([other])._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._coeffs)
        return self._hash

    def __repr__(self) -> str:
        return f"Polynomial([{', '.join(format_rational(c) for c in self._coeffs)}])"

    def __str__(self) -> str:
        return self.to_string()

    def to_string(self, var: str = "x") -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self._coeffs):
            if not c:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                power = var if k == 1 else f"{var}^{k}"
                body = power if mag == 1 else f"{mag}*{power}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    # arithmetic

    @staticmethod
    def _coerce(other: object) -> Polynomial | None:
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial([other])
        return None

    def __add__(self, other: object) -> Polynomial:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return Polynomial(
            a + b for a, b in itertools.zip_longest(self._coeffs, rhs._coeffs, fillvalue=0)
        )

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(-c for c in self._coeffs)

    def __sub__(self, other: object) -> Polynomial:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return Polynomial(
            a - b for a, b in itertools.zip_longest(self._coeffs, rhs._coeffs, fillvalue=0)
        )

    def __rsub__(self, other: object) -> Polynomial:
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def __mul__(self, other: object) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if not self._coeffs or not other._coeffs:
            return Polynomial()
        out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if not a:
                continue
            for j, b in enumerate(other._coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def scale(self, c: Scalar) -> Polynomial:
        c = Fraction(c)
        if not c:
            return Polynomial()
        return Polynomial(a * c for a in self._coeffs)

    def __truediv__(self, c: Scalar) -> Polynomial:
        if not isinstance(c, (int, Fraction)):
            return NotImplemented
        return self.scale(1 / Fraction(c))

    def shift(self, k: int) -> Polynomial:
        """Multiply by x**k."""
        if not self._coeffs:
            return self
        return Polynomial([0] * k + list(self._coeffs))

    def __call__(self, x: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def derivative(self, order: int = 1) -> Polynomial:
        if order < 0:
            raise ValueError("derivative order must be nonnegative")
        if order == 0:
            return self
        return Polynomial(
            c * math.perm(k, order) for k, c in enumerate(self._coeffs) if k >= order
        )

    def compose(self, inner: Polynomial) -> Polynomial:
        """Return self(inner(x)) by Horner's scheme."""
        acc = Polynomial()
        for c in reversed(self._coeffs):
            acc = acc * inner + c
        return acc

    def to_strings(self) -> list[str]:
        return [format_rational(c) for c in self._coeffs]

    @classmethod
    def from_strings(cls, items: Sequence[str]) -> Polynomial:
        return cls(rational(s) for s in items)


X = Polynomial([0, 1])


def falling_factorial(i: int) -> Polynomial:
    """n(n-1)...(n-i+1) as a polynomial in n; the empty product 1 for i = 0."""
    if i < 0:
        raise ValueError("falling factorial order must be nonnegative")
    out = Polynomial([1])
    for k in range(i):
        out = out * Polynomial([-k, 1])
    return out


def cauchy_bound(p: Polynomial) -> Fraction:
    """1 + max|a_i|/|a_d|: every complex root lies strictly inside this radius."""
    if p.is_zero():
        raise ValueError("the zero polynomial has no root bound")
    lead = abs(p.leading)
    rest = [abs(c) for c in p.coeffs[:-1]]
    return 1 + (max(rest) / lead if rest else Fraction(0))


def natural_roots(p: Polynomial) -> frozenset[int]:
    """All roots of ``p`` in {0, 1, 2, ...}, found by exhaustive exact search."""
    if p.is_zero():
        raise ValueError("the zero polynomial vanishes at every natural number")
    scale = math.lcm(*(c.denominator for c in p.coeffs))
    ints = [int(c * scale) for c in p.coeffs]
    bound = math.ceil(cauchy_bound(p))

    def value(n: int) -> int:
        acc = 0
        for c in reversed(ints):
            acc = acc * n + c
        return acc

    return frozenset(n for n in range(bound + 1) if value(n) == 0)


def classical_poly(
    kind: str,
    k: int,
    interval: tuple[Scalar, Scalar] = (-1, 1),
) -> Polynomial:
    """Chebyshev T_k or Legendre P_k mapped from [-1, 1] onto ``interval``.

    The affine substitution is t = (2x - a - b) / (b - a).
    """
    if kind not in CLASSICAL_KINDS:
        raise ValueError(f"unknown polynomial kind {kind!r}; expected one of {CLASSICAL_KINDS}")
    if k < 0:
        raise ValueError("polynomial degree must be nonnegative")
    a, b = (rational(v) for v in interval)
    if a >= b:
        raise ValueError(f"interval must satisfy a < b, got [{a}, {b}]")

    t = Polynomial([-(a + b) / (b - a), Fraction(2) / (b - a)])
    prev, cur = Polynomial([1]), t
    if k == 0:
        return prev
    for j in range(1, k):
        if kind == CHEBYSHEV_FIRST:
            nxt = 2 * t * cur - prev
        else:
            nxt = (Fraction(2 * j + 1) * t * cur - j * prev) / (j + 1)
        prev, cur = cur, nxt
    return cur
