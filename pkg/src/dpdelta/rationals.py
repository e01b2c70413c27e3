"""Parsing and formatting of exact rationals.

Every file format and CLI surface in this package writes rationals as
strings "p/q" (or just "p" when the denominator is 1), so the two helpers
here are the single serialization point.
"""
from __future__ import annotations

from fractions import Fraction

from .errors import SchemaError

RatLike = Fraction | int | str


def parse_rational(value: RatLike) -> Fraction:
    """Turn "p/q" / "p" / int / Fraction into a canonical Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise SchemaError(f"not a rational: {value!r}") from exc
    raise SchemaError(f"not a rational: {value!r} (type {type(value).__name__})")


def format_rational(value: Fraction) -> str:
    """Canonical string form: "p/q", or "p" when the denominator is 1."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
