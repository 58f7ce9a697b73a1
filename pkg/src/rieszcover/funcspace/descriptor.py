"""Subspaces of a carrier given by a vanishing set and germ-zero flags."""

from __future__ import annotations

from typing import Iterable

from ..exact.algebraic import AlgebraicNumber, alg_compare, as_alg
from .carrier import Carrier
from .intervals import IntervalSet, _SortKey
from .ppoly import PPoly


class SubspaceDescriptor:
    """{f in carrier : f = 0 on zero_set, f = 0 near every germ_zero point}.

    Stored canonically: every flagged point belongs to ``zero_set``, flags
    interior to ``zero_set`` are dropped as redundant, and carrier points where
    members are locally constant get a flag whenever they lie in ``zero_set``
    (there f(p) = 0 already forces f = 0 nearby).
    """

    def __init__(self, zero_set: IntervalSet | Iterable = (), germ_zero: Iterable = (), carrier: Carrier | None = None):
        if carrier is None:
            raise ValueError("a descriptor needs a carrier")
        if not isinstance(zero_set, IntervalSet):
            zero_set = IntervalSet(zero_set)
        a, b = carrier.domain
        zero_set = zero_set & IntervalSet([(a, b)])
        flags = [as_alg(p) for p in germ_zero]
        zero_set = zero_set | IntervalSet((p, p) for p in flags)
        flags += [as_alg(p) for p in carrier.germ_points() if zero_set.contains(p)]
        keep: list[AlgebraicNumber] = []
        for p in sorted(flags, key=_SortKey):
            if zero_set.interior_contains(p, carrier.domain):
                continue
            if keep and alg_compare(keep[-1], p) == 0:
                continue
            keep.append(p)
        self.zero_set = zero_set
        self.germ_zero: tuple = tuple(keep)
        self.carrier = carrier

    @classmethod
    def full(cls, carrier: Carrier) -> "SubspaceDescriptor":
        return cls(IntervalSet(), (), carrier)

    @classmethod
    def zero(cls, carrier: Carrier) -> "SubspaceDescriptor":
        return cls(IntervalSet([carrier.domain]), (), carrier)

    def with_carrier(self, carrier: Carrier) -> "SubspaceDescriptor":
        return SubspaceDescriptor(self.zero_set, self.germ_zero, carrier)

    def is_zero(self) -> bool:
        return self.zero_set == IntervalSet([self.carrier.domain])

    def contains(self, f: PPoly) -> bool:
        return self.carrier.contains(f) and f.vanishes_on(self.zero_set) and all(f.germ_zero_at(p) for p in self.germ_zero)

    __contains__ = contains

    def forces_germ_zero(self, p) -> bool:
        """Does membership force f = 0 on a neighbourhood of p?"""
        return self.zero_set.interior_contains(p, self.carrier.domain) or any(alg_compare(p, g) == 0 for g in self.germ_zero)

    def issubset(self, other: "SubspaceDescriptor") -> bool:
        """Inclusion read off the descriptor data (same carrier)."""
        if self.carrier != other.carrier:
            raise ValueError("inclusion is only decided within one carrier")
        return self.zero_set.covers(other.zero_set) and all(self.forces_germ_zero(p) for p in other.germ_zero)

    __le__ = issubset

    def __lt__(self, other: "SubspaceDescriptor") -> bool:
        return self.issubset(other) and self != other

    def __eq__(self, other) -> bool:
        if not isinstance(other, SubspaceDescriptor):
            return NotImplemented
        return (
            self.carrier == other.carrier
            and self.zero_set == other.zero_set
            and len(self.germ_zero) == len(other.germ_zero)
            and all(alg_compare(x, y) == 0 for x, y in zip(self.germ_zero, other.germ_zero))
        )

    __hash__ = None

    def to_json(self) -> dict:
        return {
            "zero_set": self.zero_set.to_json(),
            "germ_zero": [p.to_json() for p in self.germ_zero],
            "carrier": self.carrier.to_json(),
        }

    @classmethod
    def from_json(cls, obj: dict, carrier: Carrier | None = None) -> "SubspaceDescriptor":
        if carrier is None:
            carrier = Carrier.from_json(obj["carrier"])
        return cls(IntervalSet.from_json(obj.get("zero_set", [])), [AlgebraicNumber.from_json(p) for p in obj.get("germ_zero", [])], carrier)

    def __repr__(self) -> str:
        flags = ", ".join(repr(p) for p in self.germ_zero)
        return f"SubspaceDescriptor(zero_set={self.zero_set!r}, germ_zero=[{flags}], carrier={self.carrier.name})"


def dcomp(source, carrier: Carrier | None = None) -> SubspaceDescriptor:
    """Disjoint complement inside ``carrier``.

    ``source`` is either a descriptor or a finite list of generators.  Members
    of the complement must vanish on the closure of the union of the supports
    that members of ``source`` can realise.
    """
    if isinstance(source, SubspaceDescriptor):
        carrier = carrier or source.carrier
        if carrier != source.carrier:
            raise ValueError("descriptor lives in a different carrier")
        carrier.check_supported()
        a, b = carrier.domain
        Z1 = source.zero_set.closure_of_complement(a, b)
    else:
        if carrier is None:
            raise ValueError("generators need a carrier")
        carrier.check_supported()
        Z1 = IntervalSet()
        for f in source:
            if f.domain != carrier.domain:
                raise ValueError("generator and carrier domains differ")
            Z1 = Z1 | f.support()
    return SubspaceDescriptor(Z1, (), carrier)


def band_generated_descriptor(source, carrier: Carrier | None = None) -> SubspaceDescriptor:
    return dcomp(dcomp(source, carrier))

