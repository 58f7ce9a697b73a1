"""Certificate-producing deciders on function carriers.

None of these decide the underlying infinite-dimensional question outright.
A negative answer always comes with a certificate that can be re-checked on
its own, and positive answers come with an explicit witness function.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from ..exact.algebraic import AlgebraicNumber, alg_compare, as_alg, isolate_roots, rational_between
from ..exact.linalg import kernel_basis
from ..exact.lp import FarkasCertificate, LPResult, solve_lp
from ..exact.poly import Poly
from ..exact.rational import Q, fmt
from .carrier import Carrier, PointRelation, SpanX0PlusQ, UnsupportedCarrier
from .descriptor import SubspaceDescriptor, band_generated_descriptor
from .intervals import IntervalSet
from .ppoly import PPoly, c1_bump, c1_plateau, disjoint, hat, sup
from .sampling import _clearance, _plateau


class NotDirectedEvidence(ValueError):
    def __init__(self, message: str, certificate: "NotDirected"):
        super().__init__(message)
        self.certificate = certificate


class InconclusiveProbe(ValueError):
    """The probe LP is feasible; that proves nothing about directedness."""


class NoWitness(ValueError):
    pass


def _show(x) -> str:
    x = as_alg(x)
    return fmt(x.value) if x.is_rational else repr(x)


# ---------------------------------------------------------------------------
# majorization inside a descriptor


@dataclass(frozen=True)
class Dominator:
    f: PPoly


@dataclass(frozen=True)
class LocalCertificate:
    """Why no member of D can lie above g.

    kind "value":     g(point) > 0 at a point of the zero set.
    kind "germ":      members vanish near a flagged point, but g > 0 on the
                      given side arbitrarily close to it.
    kind "expansion": C^1 members vanish on one side of ``point`` so f(p) =
                      f'(p) = 0 and f = c (t - p)^2 just outside; g(p) = 0 with
                      outward slope ``slope`` > 0, so g > f close to p.
    """

    kind: str
    point: AlgebraicNumber
    side: str | None = None
    slope: Fraction | None = None

    def verify(self, g: PPoly, D: SubspaceDescriptor) -> bool:
        p = self.point
        if self.kind == "value":
            return D.zero_set.contains(p) and g.sign_at(p) > 0
        if self.kind == "germ":
            return D.forces_germ_zero(p) and g.side_sign(p, self.side) > 0
        if self.kind == "expansion":
            if not D.carrier.is_c1 or g.sign_at(p) != 0:
                return False
            inner = "left" if self.side == "right" else "right"
            if not _vanishes_on_side(D, p, inner):
                return False
            return _outward_slope(g, p, self.side) > 0
        return False

    def to_json(self) -> dict:
        out = {"kind": self.kind, "point": self.point.to_json()}
        if self.side:
            out["side"] = self.side
        if self.slope is not None:
            out["slope"] = fmt(self.slope)
        return out


@dataclass(frozen=True)
class Infeasible:
    certificate: LocalCertificate


def _vanishes_on_side(D: SubspaceDescriptor, p, side: str) -> bool:
    """Does the zero set contain a nondegenerate interval ending at p on ``side``?"""
    for lo, hi in D.zero_set:
        if alg_compare(lo, hi) == 0:
            continue
        if side == "left" and alg_compare(lo, p) < 0 <= alg_compare(hi, p):
            return True
        if side == "right" and alg_compare(lo, p) <= 0 < alg_compare(hi, p):
            return True
    return False


def _piece_on(g: PPoly, p, side: str) -> Poly:
    for s, piece in g.pieces_at(p):
        if s == "inside" or s == side:
            return piece
    raise ValueError("no piece on that side")


def _outward_slope(g: PPoly, p, side: str):
    """d/ds g(p + s) for side "right", d/ds g(p - s) for "left", at s = 0+.

    Returned exactly when p is rational, else as a sign (+1, -1, 0).
    """
    d = _piece_on(g, p, side).derivative()
    if side == "left":
        d = -d
    p = as_alg(p)
    if p.is_rational:
        return d(p.value)
    return p.sign_of(d)


def _positive_point(piece: Poly, lo, hi):
    """A rational t in [lo, hi] with piece(t) > 0, or None."""
    if piece.is_zero():
        return None
    lo, hi = as_alg(lo), as_alg(hi)
    marks = [lo] + [r for r in isolate_roots(piece, lo, hi)] + [hi]
    for x, y in zip(marks, marks[1:]):
        if alg_compare(x, y) < 0:
            t = rational_between(x, y)
            if piece(t) > 0:
                return t
    for x in (lo, hi):
        if x.is_rational and piece(x.value) > 0:
            return x.value
    return None


def _obstruction(g: PPoly, D: SubspaceDescriptor) -> LocalCertificate | None:
    a, b = D.carrier.domain
    for lo, hi in D.zero_set:
        if alg_compare(lo, hi) == 0:
            if g.sign_at(lo) > 0:
                return LocalCertificate("value", lo)
            continue
        for plo, phi, piece in g.intervals():
            x = plo if alg_compare(plo, lo) >= 0 else lo
            y = phi if alg_compare(phi, hi) <= 0 else hi
            if alg_compare(x, y) < 0:
                t = _positive_point(piece, x, y)
                if t is not None:
                    return LocalCertificate("value", as_alg(t))
    for p in D.germ_zero:
        for side in ("left", "right"):
            if (side == "left" and alg_compare(p, a) == 0) or (side == "right" and alg_compare(p, b) == 0):
                continue
            if g.side_sign(p, side) > 0:
                return LocalCertificate("germ", p, side)
    if D.carrier.is_c1:
        for lo, hi in D.zero_set:
            if alg_compare(lo, hi) == 0:
                continue
            for p, side in ((hi, "right"), (lo, "left")):
                if (side == "right" and alg_compare(p, b) == 0) or (side == "left" and alg_compare(p, a) == 0):
                    continue
                if D.zero_set.interior_contains(p, D.carrier.domain):
                    continue
                if g.sign_at(p) == 0:
                    s = _outward_slope(g, p, side)
                    if s > 0:
                        return LocalCertificate("expansion", p, side, s if as_alg(p).is_rational else None)
    return None


def _sup_bound(g: PPoly) -> Fraction:
    """A rational upper bound for |g| on its domain."""
    M = max(abs(g.domain[0]), abs(g.domain[1]), Fraction(1))
    return max(sum((abs(c) * M ** k for k, c in enumerate(p.coeffs)), Fraction(0)) for p in g.pieces)


def _c1_dominator(g: PPoly, D: SubspaceDescriptor) -> PPoly | None:
    """Search C^1 plateaus K * (ramp up, flat, ramp down) on each gap of the zero set."""
    C = D.carrier
    a, b = C.domain
    K = _sup_bound(g) + 1
    gaps = D.zero_set.gaps(a, b)
    for i in range(1, 14):
        f = PPoly.zero(C.domain)
        for lo, hi, lo_closed, hi_closed in gaps:
            u = Fraction(a) if lo_closed else _approach(lo, hi, i)
            v = Fraction(b) if hi_closed else _approach(hi, lo, i)
            w = (v - u) / 2 ** (i + 2)
            f = f + c1_plateau(u, v, w, K, C.domain, rise_left=not lo_closed, fall_right=not hi_closed)
        if D.contains(f) and g.leq(f):
            return f
    return None


def _approach(end, other, i: int) -> Fraction:
    """A rational strictly between ``end`` and ``other``, closer to end as i grows."""
    end, other = as_alg(end), as_alg(other)
    x = rational_between(end, other) if alg_compare(end, other) < 0 else rational_between(other, end)
    for _ in range(i):
        x = rational_between(end, x) if alg_compare(end, x) < 0 else rational_between(x, end)
    return x


def membership_witness_majorized(g: PPoly, D: SubspaceDescriptor):
    """Is some f in D above g?  Returns Dominator(f) or Infeasible(certificate)."""
    C = D.carrier
    if g.domain != C.domain:
        raise ValueError("g and the carrier live on different domains")
    C.check_supported()
    zero = PPoly.zero(C.domain)
    if g.leq(zero):
        return Dominator(zero)
    if D.contains(g):
        return Dominator(g)
    cert = _obstruction(g, D)
    if cert is not None:
        assert cert.verify(g, D)
        return Infeasible(cert)
    if not C.is_c1:
        f = g.pos()
        if D.contains(f):
            return Dominator(f)
        raise UnsupportedCarrier(f"g+ is not in {C.name}; no dominator rule for this carrier")
    f = _c1_dominator(g, D)
    if f is None:
        raise UnsupportedCarrier("no C1 dominator found in the constructive family")
    return Dominator(f)


# ---------------------------------------------------------------------------
# directedness


@dataclass(frozen=True)
class DirectedWitnessRule:
    """Every f in D lies below |f|, which stays in D; |f| + |g| bounds f and g."""

    name: str = "f -> |f|"

    def apply(self, f: PPoly) -> PPoly:
        return abs(f)

    def upper_bound(self, f: PPoly, g: PPoly) -> PPoly:
        return abs(f) + abs(g)


@dataclass(frozen=True)
class NotDirected:
    """f in D with no g in D satisfying g >= f and g >= 0, proved by an LP at probes.

    LP variables are the values g(t_k) at ``probes``.
    """

    f: PPoly
    probes: tuple
    A_ub: tuple
    b_ub: tuple
    A_eq: tuple
    b_eq: tuple
    certificate: FarkasCertificate = field(compare=False)

    def verify(self, D: SubspaceDescriptor) -> bool:
        """Rebuild the probe LP from D and f, then check the Farkas multipliers."""
        if not D.contains(self.f):
            return False
        A_ub, b_ub = _dominance_rows(self.f, self.probes)
        A_eq, b_eq = _probe_system(D, list(self.probes))
        if (A_ub, b_ub, A_eq, b_eq) != (self.A_ub, self.b_ub, self.A_eq, self.b_eq):
            return False
        return self.certificate.verify(A_ub, b_ub, A_eq, b_eq, (), len(self.probes))

    def to_json(self) -> dict:
        return {
            "f": self.f.to_json(),
            "probes": [fmt(t) for t in self.probes],
            "f_at_probes": [fmt(self.f(t)) for t in self.probes],
            "certificate": self.certificate.to_json(),
        }


def _rule_applies(D: SubspaceDescriptor) -> bool:
    C = D.carrier
    if C.is_c1 or C.of_type(SpanX0PlusQ):
        return False
    return all(D.zero_set.contains(p) for p in C.relation_points())


def _probe_system(D: SubspaceDescriptor, probes: Sequence[Fraction]):
    """Linear conditions on (g(t_k)) implied by membership of g in D."""
    n = len(probes)
    A_eq: list[tuple] = []
    b_eq: list[Fraction] = []
    for k, t in enumerate(probes):
        if D.zero_set.contains(t):
            A_eq.append(tuple(Fraction(int(j == k)) for j in range(n)))
            b_eq.append(Fraction(0))
    for c in D.carrier.of_type(PointRelation):
        row = [Fraction(0)] * n
        for t, w in zip(c.points, c.coeffs):
            if t not in probes:
                raise ValueError(f"relation point {fmt(t)} is not among the probe points")
            row[probes.index(t)] += w
        A_eq.append(tuple(row))
        b_eq.append(Fraction(0))
    return tuple(A_eq), tuple(b_eq)


def _dominance_rows(f: PPoly, probes) -> tuple[tuple, tuple]:
    """g_k >= max(f(t_k), 0) written as -g_k <= -max(f(t_k), 0)."""
    n = len(probes)
    A_ub = tuple(tuple(Fraction(-int(j == k)) for j in range(n)) for k in range(n))
    b_ub = tuple(-max(f(t), Fraction(0)) for t in probes)
    return A_ub, b_ub


def _realise(D: SubspaceDescriptor, probes: Sequence[Fraction], values: Sequence[Fraction]) -> PPoly | None:
    """A member of D with the given values at the probes, built from plateaus."""
    C = D.carrier
    obstacles = list(D.zero_set.endpoints()) + [as_alg(x) for x in C.special_points()] + [as_alg(t) for t in probes]
    obstacles += [as_alg(C.domain[0]), as_alg(C.domain[1])]
    f = PPoly.zero(C.domain)
    for t, v in zip(probes, values):
        if v == 0:
            continue
        r = _clearance(t, [o for o in obstacles if alg_compare(o, t) != 0], C.domain)
        f = f + _plateau(C, t, r, v)
    return f if D.contains(f) else None


def directedness_certificate(D: SubspaceDescriptor, probe_points: Sequence):
    """DirectedWitnessRule, or a NotDirected proof; InconclusiveProbe otherwise."""
    if _rule_applies(D):
        return DirectedWitnessRule()
    probes = sorted({Q(t) for t in probe_points})
    n = len(probes)
    A_eq, b_eq = _probe_system(D, probes)
    fixed = {k for k, t in enumerate(probes) if D.zero_set.contains(t)}
    free = [k for k in range(n) if k not in fixed]
    # admissible value patterns for f: relations restricted to the free probes
    rel = [tuple(row[k] for k in free) for row in A_eq if any(row[k] for k in free)]
    basis = kernel_basis(rel, len(free)).basis if free else ()
    candidates = []
    for v in basis:
        # list the sign with f > 0 at the rightmost free probe first
        if [x for x in v if x][-1] < 0:
            v = tuple(-x for x in v)
        candidates += [v, tuple(-x for x in v)]
    if len(basis) > 1:
        s = tuple(sum(col) for col in zip(*basis))
        candidates += [s, tuple(-x for x in s)]
    for v in candidates:
        values = [Fraction(0)] * n
        for k, x in zip(free, v):
            values[k] = x
        f = _realise(D, probes, values)
        if f is None:
            continue
        A_ub, b_ub = _dominance_rows(f, probes)
        res = solve_lp([0] * n, A_ub, b_ub, A_eq, b_eq)
        if res.feasible:
            continue
        cert = NotDirected(f, tuple(probes), A_ub, b_ub, A_eq, b_eq, res.certificate)
        if cert.verify(D):
            return cert
    raise InconclusiveProbe("probe LP feasible for every candidate; directedness not decided")


# ---------------------------------------------------------------------------
# extension ideals


def default_probes(D: SubspaceDescriptor) -> list[Fraction]:
    C = D.carrier
    pts = set(C.special_points()) | {C.domain[0], C.domain[1]}
    pts |= {x.value for x in D.zero_set.endpoints() if x.is_rational}
    return sorted(pts)


def ideal_extension_descriptor(B: SubspaceDescriptor, cover: Carrier, probe_points: Sequence | None = None) -> SubspaceDescriptor:
    """Smallest extension ideal of a directed descriptor subspace in ``cover``.

    The vanishing data carry over unchanged; only the carrier is swapped.
    """
    if cover.domain != B.carrier.domain:
        raise ValueError("cover carrier lives on a different domain")
    probes = default_probes(B) if probe_points is None else probe_points
    try:
        cert = directedness_certificate(B, probes)
    except InconclusiveProbe:
        cert = None
    if isinstance(cert, NotDirected):
        raise NotDirectedEvidence("the subspace is certified not directed", cert)
    return SubspaceDescriptor(B.zero_set, B.germ_zero, cover)


# ---------------------------------------------------------------------------
# pervasiveness


def pervasive_witness(carrier: Carrier, f: PPoly) -> PPoly:
    """Some g in ``carrier`` with 0 < g <= f, for f >= 0, f != 0."""
    zero = PPoly.zero(carrier.domain)
    if f.domain != carrier.domain:
        raise ValueError("f and the carrier live on different domains")
    if f.is_zero() or not zero.leq(f):
        raise NoWitness("f must be nonnegative and nonzero")
    carrier.check_supported()
    mu = f.rational_min()
    if mu is not None and mu > 0 and carrier.contains_constants():
        g = PPoly.constant(mu / 2, carrier.domain)
        if carrier.contains(g):
            return g
    for lo, hi, p in reversed(list(f.intervals())):
        if p.is_zero():
            continue
        marks = [lo] + [r for r in isolate_roots(p, lo, hi) if alg_compare(lo, r) < 0 and alg_compare(r, hi) < 0] + [hi]
        x, y = marks[-2], marks[-1]
        c, d = _middle_half(x, y)
        special = [s for s in carrier.special_points() if c < s < d]
        if special:
            cuts = [c] + special + [d]
            k = max(range(len(cuts) - 1), key=lambda j: cuts[j + 1] - cuts[j])
            c, d = _middle_half(cuts[k], cuts[k + 1])
        cands = [c, d]
        if p.degree == 2:
            v = -p.coeff(1) / (2 * p.coeff(2))
            if c < v < d:
                cands.append(v)
        mu = min(p(t) for t in cands)
        if carrier.is_c1:
            g = c1_bump(c, d, mu / 2, carrier.domain)
        else:
            g = hat(c, d, mu / 2, carrier.domain)
        if carrier.contains(g) and zero.leq(g) and g.leq(f) and not g.is_zero():
            return g
    raise NoWitness("no bump found")  # pragma: no cover - every nonzero piece has a root-free gap


def _middle_half(x, y) -> tuple[Fraction, Fraction]:
    x, y = as_alg(x), as_alg(y)
    if x.is_rational and y.is_rational:
        q = (y.value - x.value) / 4
        return x.value + q, y.value - q
    m = rational_between(x, y)
    return rational_between(x, m), rational_between(m, y)


# ---------------------------------------------------------------------------
# suprema and disjointness


@dataclass(frozen=True)
class SupCheck:
    a_perp_S: bool
    sup_exists: bool
    a_perp_sup: bool | None
    sup_in_band: bool | None
    sup: PPoly | None = field(default=None, compare=False)

    def __iter__(self):
        return iter((self.a_perp_S, self.sup_exists, self.a_perp_sup))

    def to_json(self) -> dict:
        return {
            "a_perp_S": self.a_perp_S,
            "sup_exists": self.sup_exists,
            "a_perp_sup": self.a_perp_sup,
            "sup_in_band": self.sup_in_band,
        }


def sup_disjoint_check(a: PPoly, S: Sequence[PPoly], carrier: Carrier) -> SupCheck:
    """Report a _|_ S, whether sup S (the pointwise join) lies in the carrier, and a _|_ sup S."""
    zero = PPoly.zero(carrier.domain)
    S = list(S) or [zero]
    for s in S:
        if not zero.leq(s):
            raise ValueError("elements of S must be nonnegative")
    s_max = sup(S)
    perp_S = all(disjoint(a, s) for s in S)
    exists = carrier.contains(s_max)
    if not exists:
        return SupCheck(perp_S, False, None, None, s_max)
    in_band = band_generated_descriptor(S, carrier).contains(s_max)
    return SupCheck(perp_S, True, disjoint(a, s_max), in_band, s_max)


# ---------------------------------------------------------------------------
# order density at witness level


@dataclass(frozen=True)
class InfEqualsY:
    reason: str = "y is a member of D"


@dataclass(frozen=True)
class Gap:
    """Every f in D above y exceeds y by ``margin`` at ``point`` (vacuously if none exist)."""

    point: Fraction
    margin: Fraction
    certificate: LocalCertificate

    def to_json(self) -> dict:
        return {"point": fmt(self.point), "margin": fmt(self.margin), "certificate": self.certificate.to_json()}


def _probe_near(y: PPoly, p, side: str) -> Fraction:
    """A rational point next to p on ``side`` where y > 0."""
    p = as_alg(p)
    a, b = y.domain
    far = as_alg(b if side == "right" else a)
    x = rational_between(p, far) if side == "right" else rational_between(far, p)
    step = (lambda z: rational_between(p, z)) if side == "right" else (lambda z: rational_between(z, p))
    for _ in range(200):
        if y(x) > 0:
            # move a little closer while y stays positive
            for _ in range(3):
                if y(step(x)) <= 0:
                    break
                x = step(x)
            return x
        x = step(x)
    raise ArithmeticError("no positive point found near the certificate point")


def order_density_witness(D: SubspaceDescriptor, cover: SubspaceDescriptor, y: PPoly):
    """InfEqualsY when y is its own infimum from D; Gap(point) when certified otherwise."""
    if not cover.contains(y):
        raise ValueError("y must belong to the cover descriptor")
    if D.contains(y):
        return InfEqualsY()
    res = membership_witness_majorized(y, D)
    if isinstance(res, Infeasible):
        cert = res.certificate
        if cert.kind == "value":
            t = cert.point.value if cert.point.is_rational else rational_between(cert.point.lo, cert.point.hi)
            if y(t) <= 0:
                t = _probe_near(y, cert.point, "right")
        else:
            t = _probe_near(y, cert.point, cert.side)
        return Gap(t, y(t), cert)
    raise UnsupportedCarrier("dominators exist; the infimum is not decided at witness level")


# ---------------------------------------------------------------------------
# Riesz decomposition probe


def rdp_probe_lp(q: PPoly, a1: PPoly, a2: PPoly, probes: Sequence = (-1, Fraction(-1, 2), 0, Fraction(1, 2), 1)) -> LPResult:
    """Look for q = q1 + q2 with q_i = lam_i q + h_i (h_i piecewise affine), q_i <= a_i at probes.

    Matching quadratic coefficients forces lam_1 + lam_2 = 1 and h_1 + h_2 = 0.
    Variables: lam_1, lam_2, then h_1(t_k), then h_2(t_k).
    """
    probes = [Q(t) for t in probes]
    K = len(probes)
    n = 2 + 2 * K

    def row(**entries):
        r = [Fraction(0)] * n
        for k, v in entries.items():
            r[int(k[1:])] = Fraction(v)
        return tuple(r)

    A_eq = [row(v0=1, v1=1)]
    b_eq = [Fraction(1)]
    for k in range(K):
        A_eq.append(row(**{f"v{2 + k}": 1, f"v{2 + K + k}": 1}))
        b_eq.append(Fraction(0))
    A_ub, b_ub = [], []
    for k, t in enumerate(probes):
        A_ub.append(row(**{"v0": q(t), f"v{2 + k}": 1}))
        b_ub.append(a1(t))
        A_ub.append(row(**{"v1": q(t), f"v{2 + K + k}": 1}))
        b_ub.append(a2(t))
    res = solve_lp([0] * n, A_ub, b_ub, A_eq, b_eq)
    return res
