"""Real algebraic numbers, root isolation and exact sign classification."""

from __future__ import annotations

import enum
from fractions import Fraction
from math import gcd as _gcd, isqrt
from typing import Union

from .poly import Poly
from .rational import Q, fmt

Number = Union[Fraction, int, "AlgebraicNumber"]


class AlgebraicNumber:
    """A real root of ``defining`` isolated by the closed interval [lo, hi].

    Rationals are stored with a degree-1 defining polynomial and a degenerate
    interval, so ``is_rational`` is structural.  Instances are immutable;
    :meth:`refine` returns a new, narrower isolator for the same number.
    """

    def __init__(self, defining: Poly, lo, hi):
        lo, hi = Q(lo), Q(hi)
        if lo > hi:
            raise ValueError("empty isolating interval")
        if lo == hi:
            self._set_rational(lo)
            return
        d = Poly(defining.coeffs).squarefree
        if d.degree < 1:
            raise ValueError("defining polynomial must have positive degree")
        if d(lo) == 0 and d.count_roots(lo, hi) == 1:
            self._set_rational(lo)
            return
        if d(hi) == 0 and d.count_roots(lo, hi) == 1:
            self._set_rational(hi)
            return
        if d.count_roots(lo, hi) != 1:
            raise ValueError(f"{d} does not have exactly one root in [{fmt(lo)}, {fmt(hi)}]")
        if d.degree == 1:
            self._set_rational(-d.coeffs[0] / d.coeffs[1])
            return
        if d.degree == 2:
            r = _rational_quadratic_root(d, lo, hi)
            if r is not None:
                self._set_rational(r)
                return
        self.defining = d
        self.lo = lo
        self.hi = hi

    def _set_rational(self, r: Fraction) -> None:
        self.defining = Poly([-r, 1])
        self.lo = r
        self.hi = r

    @classmethod
    def rational(cls, r) -> "AlgebraicNumber":
        r = Q(r)
        return cls(Poly([-r, 1]), r, r)

    @property
    def is_rational(self) -> bool:
        return self.lo == self.hi

    @property
    def value(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self!r} is irrational")
        return self.lo

    def width(self) -> Fraction:
        return self.hi - self.lo

    def refine(self) -> "AlgebraicNumber":
        """Halve the isolating interval."""
        if self.is_rational:
            return self
        mid = (self.lo + self.hi) / 2
        if self.defining(mid) == 0:
            return AlgebraicNumber.rational(mid)
        if self.defining.count_roots(self.lo, mid) == 1:
            return _raw(self.defining, self.lo, mid)
        return _raw(self.defining, mid, self.hi)

    def refined_to(self, width) -> "AlgebraicNumber":
        a = self
        width = Q(width)
        while a.width() > width:
            a = a.refine()
        return a

    def sign_of(self, p: Poly) -> int:
        """Exact sign of p at this number."""
        if p.is_zero():
            return 0
        if self.is_rational:
            return _sgn(p(self.lo))
        g = p.gcd(self.defining)
        if g.degree >= 1 and g.count_roots(self.lo, self.hi) >= 1:
            return 0
        a = self
        while p.count_roots(a.lo, a.hi) > 0:
            a = a.refine()
            if a.is_rational:
                return _sgn(p(a.lo))
        return _sgn(p(a.lo))

    def compare(self, other: Number) -> int:
        return alg_compare(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, (AlgebraicNumber, int, Fraction)):
            return NotImplemented
        return alg_compare(self, other) == 0

    def __lt__(self, other) -> bool:
        return alg_compare(self, other) < 0

    def __le__(self, other) -> bool:
        return alg_compare(self, other) <= 0

    def __gt__(self, other) -> bool:
        return alg_compare(self, other) > 0

    def __ge__(self, other) -> bool:
        return alg_compare(self, other) >= 0

    __hash__ = None  # equality is semantic; isolators are not canonical

    def approx(self) -> float:
        """Float approximation, for display only."""
        a = self.refined_to(Fraction(1, 10 ** 12))
        return float((a.lo + a.hi) / 2)

    def to_json(self):
        if self.is_rational:
            return fmt(self.lo)
        return {"poly": [fmt(c) for c in self.defining.coeffs], "lo": fmt(self.lo), "hi": fmt(self.hi)}

    @classmethod
    def from_json(cls, obj) -> "AlgebraicNumber":
        if isinstance(obj, (str, int)):
            return cls.rational(obj)
        return cls(Poly(obj["poly"]), obj["lo"], obj["hi"])

    def __repr__(self) -> str:
        if self.is_rational:
            return f"Alg({fmt(self.lo)})"
        return f"Alg(root of {self.defining} in [{fmt(self.lo)}, {fmt(self.hi)}])"


def _raw(defining: Poly, lo: Fraction, hi: Fraction) -> AlgebraicNumber:
    # Skip validation: callers already know the interval isolates a root.
    a = AlgebraicNumber.__new__(AlgebraicNumber)
    a.defining, a.lo, a.hi = defining, lo, hi
    return a


def _sgn(x) -> int:
    return (x > 0) - (x < 0)


def as_alg(x: Number) -> AlgebraicNumber:
    if isinstance(x, AlgebraicNumber):
        return x
    return AlgebraicNumber.rational(x)


def alg_compare(a: Number, b: Number) -> int:
    """Exact three-way comparison; returns -1, 0 or 1."""
    a, b = as_alg(a), as_alg(b)
    if a.is_rational and b.is_rational:
        return _sgn(a.lo - b.lo)
    if a.is_rational:
        return -_compare_rational(b, a.lo)
    if b.is_rational:
        return _compare_rational(a, b.lo)
    while True:
        if a.hi < b.lo:
            return -1
        if b.hi < a.lo:
            return 1
        lo, hi = max(a.lo, b.lo), min(a.hi, b.hi)
        g = a.defining.gcd(b.defining)
        if g.degree >= 1 and g.count_roots(lo, hi) >= 1:
            return 0
        if a.width() >= b.width():
            a = a.refine()
            if a.is_rational:
                return -_compare_rational(b, a.lo)
        else:
            b = b.refine()
            if b.is_rational:
                return _compare_rational(a, b.lo)


def _compare_rational(a: AlgebraicNumber, r: Fraction) -> int:
    """Compare irrational-isolated ``a`` with rational ``r``."""
    while True:
        if a.is_rational:
            return _sgn(a.lo - r)
        if r < a.lo:
            return 1
        if r > a.hi:
            return -1
        if a.defining(r) == 0:
            return 0
        a = a.refine()


def rational_between(x: Number, y: Number) -> Fraction:
    """A rational strictly between x < y."""
    x, y = as_alg(x), as_alg(y)
    if alg_compare(x, y) >= 0:
        raise ValueError("rational_between needs x < y")
    while not x.hi < y.lo:
        if x.width() >= y.width():
            x = x.refine()
        else:
            y = y.refine()
    return (x.hi + y.lo) / 2


def rational_below(x: Number) -> Fraction:
    x = as_alg(x)
    return x.lo - 1 if x.is_rational else x.lo


def rational_above(x: Number) -> Fraction:
    x = as_alg(x)
    return x.hi + 1 if x.is_rational else x.hi


# ---------------------------------------------------------------------------
# root isolation

def _sqrt_bounds(D: Fraction, bits: int) -> tuple[Fraction, Fraction]:
    """Rationals l < sqrt(D) < u for non-square positive D."""
    scale = 4 ** bits
    num = D.numerator * D.denominator * scale
    r = isqrt(num)
    den = D.denominator * 2 ** bits
    return Fraction(r, den), Fraction(r + 1, den)


def _rational_sqrt(D: Fraction):
    if D < 0:
        return None
    n, d = isqrt(D.numerator), isqrt(D.denominator)
    if n * n == D.numerator and d * d == D.denominator:
        return Fraction(n, d)
    return None


def _rational_quadratic_root(d: Poly, lo: Fraction, hi: Fraction):
    c, b, a = d.coeffs
    s = _rational_sqrt(b * b - 4 * a * c)
    if s is None:
        return None
    for r in ((-b - s) / (2 * a), (-b + s) / (2 * a)):
        if lo <= r <= hi:
            return r
    return None


def _quadratic_roots(d: Poly) -> list[AlgebraicNumber]:
    c, b, a = d.coeffs
    D = b * b - 4 * a * c
    if D < 0:
        return []
    s = _rational_sqrt(D)
    if s is not None:
        roots = sorted({(-b - s) / (2 * a), (-b + s) / (2 * a)})
        return [AlgebraicNumber.rational(r) for r in roots]
    bits = 4
    while True:
        l, u = _sqrt_bounds(D, bits)
        if l > 0:
            break
        bits += 4
    # roots of a*t^2 + b*t + c are (-b +- sqrt(D)) / (2a)
    ends = sorted([(-b - u) / (2 * a), (-b - l) / (2 * a)]), sorted([(-b + l) / (2 * a), (-b + u) / (2 * a)])
    out = [_raw(d.monic(), e[0], e[1]) for e in ends]
    out.sort(key=lambda r: r.lo)
    return out


def _isolate_open(s: Poly, lo: Fraction, hi: Fraction, out: list) -> None:
    n = s.count_roots(lo, hi) - (s(lo) == 0) - (s(hi) == 0)
    if n <= 0:
        return
    mid = (lo + hi) / 2
    if n == 1 and s(mid) != 0 and s(lo) != 0 and s(hi) != 0:
        out.append(_raw(s, lo, hi))
        return
    _isolate_open(s, lo, mid, out)
    if s(mid) == 0:
        out.append(AlgebraicNumber.rational(mid))
    _isolate_open(s, mid, hi, out)


def _isolate_closed(p: Poly, lo: Fraction, hi: Fraction) -> list[AlgebraicNumber]:
    if p.is_zero():
        raise ValueError("cannot isolate roots of the zero polynomial")
    s = p.squarefree
    cands: list[AlgebraicNumber] = []
    if s.degree >= 3:
        rats = _rational_roots(s)
        for r in rats:
            cands.append(AlgebraicNumber.rational(r))
            s = s // Poly([-r, 1])
    if s.degree == 1:
        cands.append(AlgebraicNumber.rational(-s.coeffs[0] / s.coeffs[1]))
    elif s.degree == 2:
        cands.extend(_quadratic_roots(s))
    elif s.degree >= 3:
        inner: list[AlgebraicNumber] = []
        if s(lo) == 0:
            inner.append(AlgebraicNumber.rational(lo))
        _isolate_open(s, lo, hi, inner)
        if lo != hi and s(hi) == 0:
            inner.append(AlgebraicNumber.rational(hi))
        cands.extend(_validated(c) for c in inner)
    out = [c for c in cands if alg_compare(c, lo) >= 0 and alg_compare(c, hi) <= 0]
    out.sort(key=lambda r: (r.lo, r.hi))
    return out


def _divisors(k: int) -> list[int]:
    k = abs(k)
    out = []
    d = 1
    while d * d <= k:
        if k % d == 0:
            out.extend((d, k // d))
        d += 1
    return out


def _rational_roots(s: Poly, limit: int = 10 ** 8) -> list[Fraction]:
    """Rational roots by the rational root theorem (skipped for huge coefficients)."""
    den = 1
    for c in s.coeffs:
        den = den * c.denominator // _gcd(den, c.denominator)
    ints = [int(c * den) for c in s.coeffs]
    k = 0
    roots = []
    while ints and ints[0] == 0:
        roots.append(Fraction(0))
        ints.pop(0)
        k += 1
    if len(ints) <= 1:
        return roots
    a0, an = ints[0], ints[-1]
    if abs(a0) > limit or abs(an) > limit:
        return roots
    seen = set()
    for p_ in _divisors(a0):
        for q_ in _divisors(an):
            for r in (Fraction(p_, q_), Fraction(-p_, q_)):
                if r not in seen:
                    seen.add(r)
                    if s(r) == 0:
                        roots.append(r)
    return sorted(set(roots))


def _validated(a: AlgebraicNumber) -> AlgebraicNumber:
    if a.is_rational:
        return a
    return AlgebraicNumber(a.defining, a.lo, a.hi)


def isolate_roots(p: Poly, lo: Number, hi: Number) -> list[AlgebraicNumber]:
    """All distinct real roots of p in the closed interval [lo, hi], ascending.

    Endpoints may be algebraic.  Isolating intervals of the returned numbers
    are pairwise disjoint.
    """
    lo_a, hi_a = as_alg(lo), as_alg(hi)
    if alg_compare(lo_a, hi_a) > 0:
        return []
    roots = _isolate_closed(p, lo_a.lo, hi_a.hi)
    if not (lo_a.is_rational and hi_a.is_rational):
        roots = [r for r in roots if alg_compare(r, lo_a) >= 0 and alg_compare(r, hi_a) <= 0]
    return _separate(roots)


def _separate(roots: list[AlgebraicNumber]) -> list[AlgebraicNumber]:
    roots = list(roots)
    changed = True
    while changed:
        changed = False
        for k in range(len(roots) - 1):
            if not roots[k].hi < roots[k + 1].lo:
                roots[k] = roots[k].refine()
                roots[k + 1] = roots[k + 1].refine()
                changed = True
    return roots


# ---------------------------------------------------------------------------
# sign classification

class SignClass(enum.Enum):
    AllPositive = "AllPositive"
    AllNegative = "AllNegative"
    IdenticallyZero = "IdenticallyZero"
    AllNonnegWithZeros = "AllNonnegWithZeros"
    AllNonposWithZeros = "AllNonposWithZeros"
    Mixed = "Mixed"

    @property
    def nonneg(self) -> bool:
        return self in (SignClass.AllPositive, SignClass.AllNonnegWithZeros, SignClass.IdenticallyZero)

    @property
    def nonpos(self) -> bool:
        return self in (SignClass.AllNegative, SignClass.AllNonposWithZeros, SignClass.IdenticallyZero)


def sturm_sign(p: Poly, lo: Number, hi: Number) -> SignClass:
    """Classify the sign of p on the closed interval [lo, hi]."""
    if p.is_zero():
        return SignClass.IdenticallyZero
    lo_a, hi_a = as_alg(lo), as_alg(hi)
    c = alg_compare(lo_a, hi_a)
    if c > 0:
        raise ValueError("empty interval")
    if c == 0:
        s = lo_a.sign_of(p)
        return {1: SignClass.AllPositive, -1: SignClass.AllNegative, 0: SignClass.AllNonnegWithZeros}[s]
    roots = isolate_roots(p, lo_a, hi_a)
    marks = [lo_a] + roots + [hi_a]
    signs = set()
    for x, y in zip(marks, marks[1:]):
        if alg_compare(x, y) == 0:
            continue
        signs.add(_sgn(p(rational_between(x, y))))
    if signs == {1}:
        return SignClass.AllNonnegWithZeros if roots else SignClass.AllPositive
    if signs == {-1}:
        return SignClass.AllNonposWithZeros if roots else SignClass.AllNegative
    return SignClass.Mixed
