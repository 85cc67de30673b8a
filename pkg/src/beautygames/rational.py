"""Exact rational literals.

All numbers are :class:`fractions.Fraction`.  On the wire they are strings of
the form ``"p/q"`` or ``"n"``; decimal and exponent notation is refused so
that nothing inexact can slip in.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ModelError

_LITERAL = re.compile(r"([+-]?\d+)(?:/(\d+))?")


def parse_rational(text) -> Fraction:
    """Parse ``"p/q"`` or ``"n"`` into a Fraction.

    >>> parse_rational("-6/4")
    Fraction(-3, 2)
    """
    if not isinstance(text, str):
        raise ModelError("BAD_RATIONAL", f"expected a 'p/q' string, got {text!r}")
    m = _LITERAL.fullmatch(text.strip())
    if m is None:
        raise ModelError("BAD_RATIONAL", f"malformed rational literal {text!r}")
    num, den = m.group(1), m.group(2)
    if den is not None and int(den) == 0:
        raise ModelError("BAD_RATIONAL", f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def format_rational(value) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def as_fraction(value) -> Fraction:
    """Coerce ints, Fractions and rational strings; refuse floats."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ModelError("BAD_RATIONAL", f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise ModelError("BAD_RATIONAL", f"not an exact rational: {value!r}")


def decimal(value, places: int = 4) -> str:
    """Display-only decimal rendering."""
    return f"{float(Fraction(value)):.{places}f}"
