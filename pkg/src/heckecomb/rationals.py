"""Exact rational helpers and the canonical ``"a/b"`` text encoding."""

import re
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

_RATIONAL = re.compile(r"^\s*([+-]?\d{1,200})(?:\s*/\s*(\d{1,200}))?\s*$")


def parse_rational(text) -> Fraction:
    """Parse ``"a"`` or ``"a/b"`` (also accepts an int or a Fraction).

    Raises ValueError on anything else, including zero denominators,
    decimals, booleans and floats.
    """
    if isinstance(text, bool):
        raise ValueError(f"not a rational: {text!r}")
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    if not isinstance(text, str):
        raise ValueError(f"not a rational: {text!r}")
    m = _RATIONAL.match(text)
    if m is None:
        raise ValueError(f"not a rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(num, den)


def format_rational(x) -> str:
    """Canonical text: ``"a"`` for integers, otherwise ``"a/b"`` with b > 0 and gcd 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_vector(text: str) -> tuple:
    """Parse a comma separated list such as ``"3/2,1/2"``."""
    if not isinstance(text, str) or not text.strip():
        raise ValueError("empty vector")
    return tuple(parse_rational(part) for part in text.split(","))


def parse_int_vector(text: str) -> tuple:
    vec = parse_vector(text)
    if any(x.denominator != 1 for x in vec):
        raise ValueError(f"expected integers: {text!r}")
    return tuple(int(x) for x in vec)


def fractions(xs: Iterable) -> tuple:
    return tuple(Fraction(x) for x in xs)


def format_vector(xs: Sequence) -> list:
    return [format_rational(x) for x in xs]


def lcm_upto(n: int) -> int:
    """lcm(1, ..., n)."""
    out = 1
    for k in range(2, n + 1):
        out = out * k // gcd(out, k)
    return out
