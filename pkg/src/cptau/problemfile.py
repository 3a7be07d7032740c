"""Line-oriented problem files.

Example::

    [operator]
    # order = ascending coefficients of p_order(x)
    4 = 1, 0, 1
    3 = 1, -3
    2 = 3

    [rhs]
    f = 0, 0, 1/2

    [conditions]
    y(0) = 0
    1*y^(1)(0) - 1/2*y^(0)(1) = 3

    [perturbation]
    kind = chebyshev_first
    interval = -1, 1

    [options]
    bound = 12
    order = 7

Numbers are integers or ``p/q`` rationals; ``#`` starts a comment.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .diffop import DiffOperator
from .ratpoly import CLASSICAL_KINDS, Polynomial, format_rational, rational
from .tau import Condition, Perturbation, TauProblem

SECTIONS = ("operator", "rhs", "conditions", "perturbation", "options")
OPTION_KEYS = {"bound": int, "order": int, "format": str, "points": list}
FORMATS = ("text", "structured")

_NUM = r"[0-9]+(?:/[0-9]+)?"
_TERM = re.compile(
    rf"\s*(?P<sign>[+-])?\s*(?:(?P<w>{_NUM})\s*\*\s*)?y(?:\^\(\s*(?P<k>[0-9]+)\s*\))?"
    rf"\(\s*(?P<p>[+-]?{_NUM})\s*\)\s*"
)


class ProblemFileError(ValueError):
    def __init__(self, message: str, line: int, column: int = 1) -> None:
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class ProblemFile:
    operator: DiffOperator
    rhs: Polynomial = field(default_factory=Polynomial)
    conditions: tuple[Condition, ...] = ()
    perturbation: Perturbation = field(default_factory=Perturbation)
    options: dict = field(default_factory=dict)

    def to_problem(self) -> TauProblem:
        return TauProblem(self.operator, self.rhs, self.conditions, self.perturbation)


def _fmt(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else format_rational(value)


def _parse_list(text: str, line: int, col: int) -> list[Fraction]:
    out = []
    offset = 0
    for item in text.split(","):
        stripped = item.strip()
        pos = col + offset + (len(item) - len(item.lstrip()))
        try:
            out.append(rational(stripped))
        except ValueError:
            raise ProblemFileError(f"expected a rational number, got {stripped!r}", line, pos) from None
        offset += len(item) + 1
    return out


def _parse_condition(text: str, line: int, col: int) -> Condition:
    if text.count("=") != 1:
        raise ProblemFileError("a condition needs exactly one '='", line, col)
    lhs, rhs = text.split("=")
    rhs_col = col + len(lhs) + 1
    pos = 0
    terms = []
    while pos < len(lhs):
        if not lhs[pos:].strip():
            break
        match = _TERM.match(lhs, pos)
        if match is None or (terms and match.group("sign") is None):
            raise ProblemFileError("expected a term like '2*y^(1)(0)'", line, col + pos)
        weight = rational(match.group("w") or "1")
        if match.group("sign") == "-":
            weight = -weight
        order = int(match.group("k") or 0)
        terms.append((rational(match.group("p")), order, weight))
        pos = match.end()
    if not terms:
        raise ProblemFileError("condition has no terms", line, col)
    (value,) = _parse_list(rhs, line, rhs_col)
    return Condition(tuple(terms), value)


def loads(text: str) -> ProblemFile:
    section = None
    op_terms: list[tuple[int, Polynomial]] = []
    seen_orders: set[int] = set()
    rhs = Polynomial()
    conditions: list[Condition] = []
    kind, interval = "chebyshev_first", (Fraction(-1), Fraction(1))
    options: dict = {}

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        indent = len(line) - len(line.lstrip())
        body = line.strip()
        if body.startswith("["):
            if not body.endswith("]") or body[1:-1].strip() not in SECTIONS:
                raise ProblemFileError(f"unknown section header {body!r}", lineno, indent + 1)
            section = body[1:-1].strip()
            continue
        if section is None:
            raise ProblemFileError("content before the first section header", lineno, indent + 1)

        if section == "conditions":
            conditions.append(_parse_condition(line, lineno, 1))
            continue

        if "=" not in line:
            raise ProblemFileError("expected 'key = value'", lineno, indent + 1)
        key, value = line.split("=", 1)
        key = key.strip()
        vcol = len(line.split("=", 1)[0]) + 2
        first = vcol + len(value) - len(value.lstrip())

        if section == "operator":
            if not key.isdigit():
                raise ProblemFileError(f"derivative order must be a natural number, got {key!r}", lineno, indent + 1)
            order = int(key)
            if order in seen_orders:
                raise ProblemFileError(f"derivative order {order} given twice", lineno, indent + 1)
            seen_orders.add(order)
            op_terms.append((order, Polynomial(_parse_list(value, lineno, vcol))))
        elif section == "rhs":
            if key != "f":
                raise ProblemFileError(f"unknown rhs key {key!r}; expected 'f'", lineno, indent + 1)
            rhs = Polynomial(_parse_list(value, lineno, vcol))
        elif section == "perturbation":
            if key == "kind":
                kind = value.strip()
                if kind not in CLASSICAL_KINDS:
                    raise ProblemFileError(f"unknown kind {kind!r}", lineno, first)
            elif key == "interval":
                bounds = _parse_list(value, lineno, vcol)
                if len(bounds) != 2 or bounds[0] >= bounds[1]:
                    raise ProblemFileError("interval needs two numbers a < b", lineno, first)
                interval = (bounds[0], bounds[1])
            else:
                raise ProblemFileError(f"unknown perturbation key {key!r}", lineno, indent + 1)
        elif section == "options":
            if key not in OPTION_KEYS:
                raise ProblemFileError(f"unknown option {key!r}", lineno, indent + 1)
            kind_of = OPTION_KEYS[key]
            if kind_of is int:
                try:
                    options[key] = int(value.strip())
                except ValueError:
                    raise ProblemFileError(f"option {key} needs an integer", lineno, first) from None
            elif kind_of is list:
                options[key] = tuple(_parse_list(value, lineno, vcol))
            else:
                options[key] = value.strip()
                if key == "format" and options[key] not in FORMATS:
                    raise ProblemFileError(f"format must be one of {FORMATS}", lineno, first)

    if not op_terms:
        raise ProblemFileError("missing [operator] section or terms", max(len(text.splitlines()), 1))
    try:
        op = DiffOperator.from_terms(op_terms)
    except ValueError as exc:
        raise ProblemFileError(str(exc), 1) from None
    return ProblemFile(op, rhs, tuple(conditions), Perturbation(kind, interval), options)


def load(path: str | Path) -> ProblemFile:
    return loads(Path(path).read_text())


def _fmt_term(index: int, point: Fraction, order: int, weight: Fraction) -> str:
    sign = "-" if weight < 0 else "+"
    body = f"{_fmt(abs(weight))}*y^({order})({_fmt(point)})"
    if index == 0:
        return ("-" if sign == "-" else "") + body
    return f" {sign} {body}"


def dumps(pf: ProblemFile) -> str:
    def coeffs(p: Polynomial) -> str:
        return ", ".join(_fmt(c) for c in p.coeffs) if p else "0"

    out = ["[operator]"]
    out += [f"{i} = {coeffs(p)}" for i, p in pf.operator.terms()]
    out += ["", "[rhs]", f"f = {coeffs(pf.rhs)}"]
    if pf.conditions:
        out += ["", "[conditions]"]
        for c in pf.conditions:
            lhs = "".join(_fmt_term(i, *t) for i, t in enumerate(c.terms))
            out.append(f"{lhs} = {_fmt(c.rhs)}")
    a, b = pf.perturbation.interval
    out += ["", "[perturbation]", f"kind = {pf.perturbation.kind}", f"interval = {_fmt(a)}, {_fmt(b)}"]
    if pf.options:
        out += ["", "[options]"]
        for key, value in pf.options.items():
            if isinstance(value, tuple):
                value = ", ".join(_fmt(v) for v in value)
            out.append(f"{key} = {value}")
    return "\n".join(out) + "\n"
