"""Finite unions of closed intervals with algebraic endpoints."""

from __future__ import annotations

from typing import Iterable

from ..exact.algebraic import AlgebraicNumber, alg_compare, as_alg


class IntervalSet:
    """A finite union of closed intervals ``[lo, hi]`` (points when lo == hi).

    Components are kept sorted and merged, so overlapping or touching
    intervals collapse and two sets describing the same points are equal.
    """

    def __init__(self, parts: Iterable[tuple] = ()):
        items = []
        for lo, hi in parts:
            lo, hi = as_alg(lo), as_alg(hi)
            if alg_compare(lo, hi) > 0:
                raise ValueError("interval with lo > hi")
            items.append((lo, hi))
        items.sort(key=lambda p: _SortKey(p[0]))
        merged: list[tuple] = []
        for lo, hi in items:
            if merged and alg_compare(lo, merged[-1][1]) <= 0:
                if alg_compare(hi, merged[-1][1]) > 0:
                    merged[-1] = (merged[-1][0], hi)
            else:
                merged.append((lo, hi))
        self.parts: tuple = tuple(merged)

    @classmethod
    def point(cls, p) -> "IntervalSet":
        return cls([(p, p)])

    def is_empty(self) -> bool:
        return not self.parts

    def __iter__(self):
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def union(self, other: "IntervalSet") -> "IntervalSet":
        return IntervalSet(self.parts + other.parts)

    __or__ = union

    def intersect(self, other: "IntervalSet") -> "IntervalSet":
        out = []
        for a, b in self.parts:
            for c, d in other.parts:
                lo = a if alg_compare(a, c) >= 0 else c
                hi = b if alg_compare(b, d) <= 0 else d
                if alg_compare(lo, hi) <= 0:
                    out.append((lo, hi))
        return IntervalSet(out)

    __and__ = intersect

    def contains(self, t) -> bool:
        return any(alg_compare(lo, t) <= 0 <= alg_compare(hi, t) for lo, hi in self.parts)

    __contains__ = contains

    def interior_contains(self, t, domain: tuple | None = None) -> bool:
        """Is t interior to the set, relative to ``domain`` when given?"""
        for lo, hi in self.parts:
            left = alg_compare(lo, t) < 0 or (domain is not None and alg_compare(lo, domain[0]) == 0 and alg_compare(t, lo) == 0)
            right = alg_compare(t, hi) < 0 or (domain is not None and alg_compare(hi, domain[1]) == 0 and alg_compare(t, hi) == 0)
            if left and right and alg_compare(lo, hi) < 0:
                return True
        return False

    def covers(self, other: "IntervalSet") -> bool:
        """other is a subset of self."""
        return all(any(alg_compare(a, c) <= 0 and alg_compare(d, b) <= 0 for a, b in self.parts) for c, d in other.parts)

    def has_interior(self) -> bool:
        return any(alg_compare(lo, hi) < 0 for lo, hi in self.parts)

    def closure_of_complement(self, a, b) -> "IntervalSet":
        """Closure of [a, b] minus this set."""
        a, b = as_alg(a), as_alg(b)
        out = []
        cur = a
        for lo, hi in self.parts:
            if alg_compare(hi, a) < 0 or alg_compare(lo, b) > 0:
                continue
            if alg_compare(cur, lo) < 0:
                out.append((cur, lo))
            if alg_compare(hi, cur) > 0:
                cur = hi
        if alg_compare(cur, b) < 0:
            out.append((cur, b))
        return IntervalSet(out)

    def gaps(self, a, b) -> list[tuple]:
        """Components of [a, b] minus this set.

        Each is ``(lo, hi, lo_closed, hi_closed)``; an end is closed when it is
        a domain end outside the set.  Isolated points split components.
        """
        a, b = as_alg(a), as_alg(b)
        out = []
        cur, closed = a, not self.contains(a)
        for lo, hi in self.parts:
            if alg_compare(hi, a) < 0 or alg_compare(lo, b) > 0:
                continue
            if alg_compare(cur, lo) < 0:
                out.append((cur, lo, closed, False))
            if alg_compare(hi, cur) >= 0:
                cur, closed = hi, False
        if alg_compare(cur, b) < 0:
            out.append((cur, b, closed, not self.contains(b)))
        return out

    def endpoints(self) -> list[AlgebraicNumber]:
        out = []
        for lo, hi in self.parts:
            out.append(lo)
            if alg_compare(lo, hi) != 0:
                out.append(hi)
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntervalSet):
            return NotImplemented
        return len(self.parts) == len(other.parts) and all(
            alg_compare(a, c) == 0 and alg_compare(b, d) == 0 for (a, b), (c, d) in zip(self.parts, other.parts)
        )

    __hash__ = None

    def to_json(self) -> list:
        return [[lo.to_json(), hi.to_json()] for lo, hi in self.parts]

    @classmethod
    def from_json(cls, obj) -> "IntervalSet":
        return cls((AlgebraicNumber.from_json(lo), AlgebraicNumber.from_json(hi)) for lo, hi in obj)

    def __repr__(self) -> str:
        def show(x):
            return str(x.to_json()) if x.is_rational else f"~{x.approx():.6g}"

        body = " u ".join(f"{{{show(lo)}}}" if alg_compare(lo, hi) == 0 else f"[{show(lo)}, {show(hi)}]" for lo, hi in self.parts)
        return f"IntervalSet({body or 'empty'})"


class _SortKey:
    __slots__ = ("x",)

    def __init__(self, x):
        self.x = x

    def __lt__(self, other: "_SortKey") -> bool:
        return alg_compare(self.x, other.x) < 0
