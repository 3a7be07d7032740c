"""Small dense exact linear algebra over Fraction."""
from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction

Matrix = list[list[Fraction]]


class SingularSystemError(ArithmeticError):
    pass


def rref(rows: Sequence[Sequence[Fraction]], ncols: int | None = None) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form (upper, normalized) and the pivot columns."""
    if ncols is None:
        ncols = max((len(r) for r in rows), default=0)
    m = [[Fraction(v) for v in r] + [Fraction(0)] * (ncols - len(r)) for r in rows]
    pivots: list[int] = []
    top = 0
    for col in range(ncols):
        pivot = next((i for i in range(top, len(m)) if m[i][col]), None)
        if pivot is None:
            continue
        m[top], m[pivot] = m[pivot], m[top]
        inv = 1 / m[top][col]
        m[top] = [v * inv for v in m[top]]
        for i in range(len(m)):
            if i != top and m[i][col]:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[top])]
        pivots.append(col)
        top += 1
        if top == len(m):
            break
    return m, pivots


def rank(rows: Sequence[Sequence[Fraction]], ncols: int | None = None) -> int:
    return len(rref(rows, ncols)[1])


def particular_solution(
    a: Sequence[Sequence[Fraction]], b: Sequence[Fraction], ncols: int
) -> list[Fraction] | None:
    """Some solution of a·x = b with free variables set to zero, or None."""
    aug = [list(row) + [Fraction(0)] * (ncols - len(row)) + [Fraction(v)] for row, v in zip(a, b)]
    red, pivots = rref(aug, ncols + 1)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for r, col in enumerate(pivots):
        x[col] = red[r][ncols]
    return x


def solve_square(a: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> list[Fraction]:
    n = len(a)
    if any(len(row) != n for row in a) or len(b) != n:
        raise ValueError("solve_square needs an n x n matrix and n right-hand sides")
    if n == 0:
        return []
    x = particular_solution(a, b, n)
    if x is None or rank(a, n) < n:
        raise SingularSystemError("singular linear system")
    return x


def in_span(vectors: Sequence[Sequence[Fraction]], v: Sequence[Fraction]) -> bool:
    width = max([len(v)] + [len(u) for u in vectors])
    base = rank(vectors, width)
    return rank(list(vectors) + [v], width) == base
