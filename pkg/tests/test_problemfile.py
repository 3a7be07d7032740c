from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from corpus import operators, polynomials
from cptau import Condition, Perturbation, Polynomial
from cptau.problemfile import ProblemFile, ProblemFileError, dumps, loads

EXAMPLE = """\
# comment line
[operator]
4 = 1, 0, 1   # (x^2 + 1)
3 = 1, -3
2 = 3

[rhs]
f = 1, 0, 0, 0, 1/2

[conditions]
y(0) = 0
2*y^(1)(0) - 1/2*y(1) = 3
y^(2)(1) = -1/4
y(1) + y(-1) = 0

[perturbation]
kind = legendre
interval = -1/2, 2

[options]
bound = 9
order = 7
format = structured
points = 0, 1/3
"""


def test_parse_example(ex2):
    pf = loads(EXAMPLE)
    assert pf.operator == ex2
    assert pf.rhs == Polynomial([1, 0, 0, 0, "1/2"])
    assert pf.conditions[1] == Condition(((0, 1, 2), (1, 0, Fraction(-1, 2))), 3)
    assert pf.perturbation == Perturbation("legendre", (Fraction(-1, 2), 2))
    assert pf.options == {"bound": 9, "order": 7, "format": "structured", "points": (0, Fraction(1, 3))}


def test_roundtrip_example():
    pf = loads(EXAMPLE)
    again = loads(dumps(pf))
    assert again == pf
    assert again.to_problem() == pf.to_problem()


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("[operator]\n2 = 1, x\n", 2, 8),
        ("[operatr]\n", 1, 1),
        ("2 = 1\n", 1, 1),
        ("[operator]\n2 = 1\n[conditions]\ny(0) 0\n", 4, 1),
        ("[operator]\n2 = 1\n[conditions]\ny(0) + z(1) = 0\n", 4, 6),
        ("[operator]\n2 = 1\n2 = 3\n", 3, 1),
        ("[operator]\n2 = 0\n", 1, 1),
        ("[operator]\n1 = 1\n[perturbation]\ninterval = 1, 0\n", 4, 12),
        ("[operator]\n1 = 1\n[options]\nbound = ten\n", 4, 9),
        ("[operator]\n1 = 1\n[options]\ncolour = red\n", 4, 1),
    ],
)
def test_parse_errors_carry_position(text, line, column):
    with pytest.raises(ProblemFileError) as info:
        loads(text)
    assert (info.value.line, info.value.column) == (line, column)
    assert f"line {line}, column {column}" in str(info.value)


def test_missing_operator():
    with pytest.raises(ProblemFileError):
        loads("[rhs]\nf = 1\n")


condition_terms = st.lists(
    st.tuples(
        st.fractions(min_value=-5, max_value=5, max_denominator=7),
        st.integers(0, 3),
        st.fractions(min_value=-5, max_value=5, max_denominator=7).filter(bool),
    ),
    min_size=1,
    max_size=3,
)


@st.composite
def problem_files(draw):
    op = draw(operators())
    conds = tuple(
        Condition(tuple(draw(condition_terms)), draw(st.fractions(max_denominator=9, min_value=-9, max_value=9)))
        for _ in range(op.nu)
    )
    a = draw(st.fractions(min_value=-3, max_value=3, max_denominator=5))
    width = draw(st.fractions(min_value=Fraction(1, 5), max_value=4, max_denominator=5))
    pert = Perturbation(draw(st.sampled_from(["chebyshev_first", "legendre"])), (a, a + width))
    options = draw(
        st.fixed_dictionaries({}, optional={"bound": st.integers(0, 20), "order": st.integers(0, 20)})
    )
    return ProblemFile(op, draw(polynomials(5)), conds, pert, options)


@settings(max_examples=150, deadline=None)
@given(problem_files())
def test_roundtrip_property(pf):
    again = loads(dumps(pf))
    assert again == pf
    assert again.to_problem() == pf.to_problem()
