"""Function carriers: linear subspaces of PP2 cut out by simple constraints."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..exact.poly import Poly
from ..exact.rational import Q, fmt
from .ppoly import PPoly


class UnsupportedCarrier(ValueError):
    """No rule covers this combination of carrier constraints."""


@dataclass(frozen=True, eq=True)
class GermConstantAt:
    """Members are constant on a neighbourhood of each point."""

    points: tuple

    def holds(self, f: PPoly) -> bool:
        return all(f.germ_constant_at(p) for p in self.points)

    def to_json(self) -> dict:
        return {"type": "GermConstantAt", "points": [fmt(p) for p in self.points]}


@dataclass(frozen=True)
class MaxDegree:
    d: int

    def holds(self, f: PPoly) -> bool:
        return f.degree <= self.d

    def to_json(self) -> dict:
        return {"type": "MaxDegree", "d": self.d}


@dataclass(frozen=True)
class C1:
    """Continuously differentiable across every breakpoint."""

    def holds(self, f: PPoly) -> bool:
        return f.is_c1()

    def to_json(self) -> dict:
        return {"type": "C1"}


@dataclass(frozen=True)
class PointRelation:
    """sum_k coeffs[k] * f(points[k]) == 0."""

    points: tuple
    coeffs: tuple

    def holds(self, f: PPoly) -> bool:
        return sum((c * f(t) for t, c in zip(self.points, self.coeffs)), Fraction(0)) == 0

    def to_json(self) -> dict:
        return {"type": "PointRelation", "points": [fmt(p) for p in self.points], "coeffs": [fmt(c) for c in self.coeffs]}


@dataclass(frozen=True)
class SpanX0PlusQ:
    """span(X0 + {extra}): f - lam * extra is piecewise affine and constant near ``point``."""

    extra: PPoly
    point: Fraction

    def coefficient(self, f: PPoly):
        """The lam with f - lam * extra piecewise affine, or None."""
        lam = None
        for _, _, p, e in f.refine(self.extra):
            fp, ep = p.coeff(2), e.coeff(2)
            if ep == 0:
                if fp != 0:
                    return None
                continue
            r = fp / ep
            if lam is None:
                lam = r
            elif lam != r:
                return None
        return Fraction(0) if lam is None else lam

    def holds(self, f: PPoly) -> bool:
        lam = self.coefficient(f)
        if lam is None:
            return False
        h = f - self.extra * lam
        return h.is_piecewise_affine() and h.germ_constant_at(self.point)

    def to_json(self) -> dict:
        return {"type": "SpanX0PlusQ", "point": fmt(self.point), "extra": self.extra.to_json()}


def _constraint_from_json(obj: dict):
    kind = obj["type"]
    if kind == "GermConstantAt":
        return GermConstantAt(tuple(Q(p) for p in obj["points"]))
    if kind == "MaxDegree":
        return MaxDegree(int(obj["d"]))
    if kind == "C1":
        return C1()
    if kind == "PointRelation":
        return PointRelation(tuple(Q(p) for p in obj["points"]), tuple(Q(c) for c in obj["coeffs"]))
    if kind == "SpanX0PlusQ":
        return SpanX0PlusQ(PPoly.from_json(obj["extra"]), Q(obj["point"]))
    raise ValueError(f"unknown constraint type {kind!r}")


class Carrier:
    """A subspace of PP2 (or PA) on ``domain`` given by constraints."""

    def __init__(self, domain, base: str = "PP2", constraints=(), name: str | None = None):
        if base not in ("PP2", "PA"):
            raise ValueError("base must be 'PP2' or 'PA'")
        self.domain = (Q(domain[0]), Q(domain[1]))
        self.base = base
        self.constraints = tuple(constraints)
        self.name = name or base

    def contains(self, f: PPoly) -> bool:
        if f.domain != self.domain:
            return False
        if self.base == "PA" and not f.is_piecewise_affine():
            return False
        return all(c.holds(f) for c in self.constraints)

    __contains__ = contains

    def of_type(self, cls) -> list:
        return [c for c in self.constraints if isinstance(c, cls)]

    @property
    def max_degree(self) -> int:
        d = 1 if self.base == "PA" else 2
        for c in self.of_type(MaxDegree):
            d = min(d, c.d)
        return d

    @property
    def is_c1(self) -> bool:
        return bool(self.of_type(C1))

    def germ_points(self) -> list[Fraction]:
        """Points where every member is locally constant."""
        pts = [p for c in self.of_type(GermConstantAt) for p in c.points]
        pts += [c.point for c in self.of_type(SpanX0PlusQ)]
        return sorted(set(pts))

    def relation_points(self) -> list[Fraction]:
        return sorted({p for c in self.of_type(PointRelation) for p in c.points})

    def special_points(self) -> list[Fraction]:
        return sorted(set(self.germ_points()) | set(self.relation_points()))

    def contains_constants(self) -> bool:
        return self.contains(PPoly.constant(1, self.domain))

    def check_supported(self) -> None:
        """Raise UnsupportedCarrier if members cannot realise small bumps."""
        d = self.max_degree
        if d < 1:
            raise UnsupportedCarrier("degree-0 carriers hold only constants")
        if self.is_c1 and d < 2:
            raise UnsupportedCarrier("C1 functions of degree 1 are globally affine")
        if self.is_c1 and self.of_type(SpanX0PlusQ):
            raise UnsupportedCarrier("no rule combines C1 with span(X0 + q)")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Carrier):
            return NotImplemented
        return (self.domain, self.base, self.constraints) == (other.domain, other.base, other.constraints)

    __hash__ = None

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "domain": [fmt(self.domain[0]), fmt(self.domain[1])],
            "base": self.base,
            "constraints": [c.to_json() for c in self.constraints],
        }

    @classmethod
    def from_json(cls, obj) -> "Carrier":
        if isinstance(obj, str):
            return named_carrier(obj)
        if "constraints" not in obj and "base" not in obj and "name" in obj:
            return named_carrier(obj["name"], obj.get("domain"))
        return cls(obj["domain"], obj.get("base", "PP2"), [_constraint_from_json(c) for c in obj.get("constraints", [])], obj.get("name"))

    def __repr__(self) -> str:
        return f"Carrier({self.name} on [{fmt(self.domain[0])}, {fmt(self.domain[1])}])"


def q_function(domain=(-1, 1)) -> PPoly:
    """t^2 - 1/4 outside ]-1/2, 1/2[ and 0 inside."""
    t = Poly.t()
    p = t * t - Poly.const(Fraction(1, 4))
    h = Fraction(1, 2)
    return PPoly(domain, [domain[0], -h, h, domain[1]], [p, Poly(), p])


def named_carrier(name: str, domain=None) -> Carrier:
    """Carriers used by the worked examples.

    PP2, PA, C1PP2 (C^1 piecewise quadratics), X0 (piecewise affine and
    constant near 0), Xrho (piecewise quadratic and constant near 0),
    X (span of X0 and q) and Namioka (f(0) = (f(-1) + f(1)) / 2).
    """
    if domain is None:
        domain = (0, 1) if name == "C1PP2" else (-1, 1)
    zero = Fraction(0)
    table = {
        "PP2": ("PP2", ()),
        "PA": ("PA", ()),
        "C1PP2": ("PP2", (C1(),)),
        "X0": ("PA", (GermConstantAt((zero,)),)),
        "Xrho": ("PP2", (GermConstantAt((zero,)),)),
        "X": ("PP2", (SpanX0PlusQ(q_function(domain), zero),)) if name == "X" else None,
        "Namioka": ("PP2", (PointRelation((Fraction(-1), zero, Fraction(1)), (Fraction(1), Fraction(-2), Fraction(1))),)),
    }
    if name not in table:
        raise ValueError(f"unknown carrier {name!r}; known: {', '.join(sorted(table))}")
    base, cons = table[name]
    return Carrier(domain, base, cons, name)
