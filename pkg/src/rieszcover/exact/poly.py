"""Univariate polynomials with rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from typing import Iterable

from .rational import Q, fmt


class Poly:
    """Immutable polynomial, coefficients stored lowest degree first.

    Trailing zeros are stripped so the zero polynomial has no coefficients and
    every other polynomial has a nonzero leading coefficient.
    """

    def __init__(self, coeffs: Iterable = ()):
        cs = [Q(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    # construction helpers
    @classmethod
    def const(cls, c) -> "Poly":
        return cls([c])

    @classmethod
    def t(cls) -> "Poly":
        return cls([0, 1])

    @classmethod
    def from_roots(cls, roots, lead=1) -> "Poly":
        p = cls([lead])
        for r in roots:
            p = p * cls([-Q(r), 1])
        return p

    # basic queries
    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __call__(self, x) -> Fraction:
        x = Q(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # arithmetic
    def __add__(self, other) -> "Poly":
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.coeff(k) + other.coeff(k) for k in range(n))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other) -> "Poly":
        return self + (-_as_poly(other))

    def __rsub__(self, other) -> "Poly":
        return _as_poly(other) - self

    def __mul__(self, other) -> "Poly":
        other = _as_poly(other)
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly([other])
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def derivative(self) -> "Poly":
        return Poly(k * c for k, c in enumerate(self.coeffs) if k > 0)

    def compose_affine(self, a, b) -> "Poly":
        """Return p(a + b*t)."""
        out = Poly()
        lin = Poly([a, b])
        for c in reversed(self.coeffs):
            out = out * lin + Poly([c])
        return out

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.lead
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] / lead
            if c == 0:
                continue
            quot[k - dq] = c
            for j, b in enumerate(other.coeffs):
                rem[k - dq + j] -= c * b
        return Poly(quot), Poly(rem[:dq] if dq > 0 else [])

    def __mod__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[1]

    def __floordiv__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[0]

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return Poly(c / self.lead for c in self.coeffs)

    def gcd(self, other: "Poly") -> "Poly":
        """Monic gcd (zero if both are zero)."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    @cached_property
    def squarefree(self) -> "Poly":
        """Square-free part, monic.  Same distinct roots as ``self``."""
        if self.degree <= 1:
            return self.monic()
        g = self.gcd(self.derivative())
        return (self // g).monic()

    @cached_property
    def sturm(self) -> tuple["Poly", ...]:
        """Sturm sequence of the square-free part."""
        p0 = self.squarefree
        if p0.degree <= 0:
            return (p0,)
        seq = [p0, p0.derivative()]
        while seq[-1].degree > 0:
            r = seq[-2] % seq[-1]
            if r.is_zero():
                break
            seq.append(-r)
        return tuple(seq)

    def sign_variations(self, x) -> int:
        x = Q(x)
        signs = [s for s in (_sgn(p(x)) for p in self.sturm) if s != 0]
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    def count_roots(self, lo, hi) -> int:
        """Number of distinct real roots in the closed interval [lo, hi]."""
        lo, hi = Q(lo), Q(hi)
        if self.is_zero():
            raise ValueError("the zero polynomial has infinitely many roots")
        if lo > hi:
            return 0
        at_lo = 1 if self(lo) == 0 else 0
        if lo == hi:
            return at_lo
        return self.sign_variations(lo) - self.sign_variations(hi) + at_lo

    def __repr__(self) -> str:
        return f"Poly([{', '.join(fmt(c) for c in self.coeffs)}])"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(fmt(c))
            else:
                mono = "t" if k == 1 else f"t^{k}"
                terms.append(mono if c == 1 else f"{fmt(c)}*{mono}")
        return " + ".join(terms)


def _sgn(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def _as_poly(x) -> Poly:
    if isinstance(x, Poly):
        return x
    return Poly([x])
