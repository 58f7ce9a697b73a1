"""Rational scalars and vectors.

Scalars are plain :class:`fractions.Fraction` objects, which are always kept in
lowest terms with a positive denominator.  Vectors are tuples of fractions.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Vector = tuple  # tuple[Fraction, ...]


def Q(value) -> Fraction:
    """Coerce ``value`` to a Fraction.

    Accepts ints, Fractions and strings such as ``"3"``, ``"-1/4"``.  Floats are
    refused so that no binary rounding can sneak into a decision path.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def fmt(q: Fraction) -> str:
    """Serialize as ``"p/q"`` or ``"p"``."""
    q = Q(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def vec(values: Iterable) -> Vector:
    return tuple(Q(v) for v in values)


def fmt_vec(v: Sequence[Fraction]) -> list[str]:
    return [fmt(x) for x in v]


def dot(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    if len(a) != len(b):
        raise ValueError(f"dimension mismatch: {len(a)} vs {len(b)}")
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def add(a, b) -> Vector:
    return tuple(x + y for x, y in zip(a, b))


def sub(a, b) -> Vector:
    return tuple(x - y for x, y in zip(a, b))


def scale(c, a) -> Vector:
    c = Q(c)
    return tuple(c * x for x in a)


def neg(a) -> Vector:
    return tuple(-x for x in a)


def zero(n: int) -> Vector:
    return (Fraction(0),) * n


def unit(n: int, j: int) -> Vector:
    return tuple(Fraction(1) if k == j else Fraction(0) for k in range(n))


def is_zero(a) -> bool:
    return all(x == 0 for x in a)


def support(a) -> frozenset[int]:
    return frozenset(k for k, x in enumerate(a) if x != 0)


def matvec(M: Sequence[Sequence[Fraction]], x: Sequence[Fraction]) -> Vector:
    return tuple(dot(row, x) for row in M)


def primitive(a: Sequence[Fraction]) -> Vector:
    """Positive rescaling of ``a`` to coprime integer coordinates.

    The direction is kept (a ray and its negative are different rays), so the
    sign of the first nonzero entry is not touched.
    """
    a = vec(a)
    if is_zero(a):
        return a
    den = 1
    for x in a:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in a]
    g = 0
    for k in ints:
        g = gcd(g, abs(k))
    return tuple(Fraction(k // g) for k in ints)


def sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)
