"""Seeded random functions and random members of descriptors."""

from __future__ import annotations

import random
from fractions import Fraction

from ..exact.algebraic import alg_compare, as_alg, rational_between
from ..exact.linalg import kernel_basis
from ..exact.poly import Poly
from .carrier import Carrier, PointRelation, SpanX0PlusQ
from .descriptor import SubspaceDescriptor
from .ppoly import PPoly, c1_bump, c1_plateau, hat, trapezoid


def _rq(rng: random.Random, lo: int = -3, hi: int = 3, den: int = 4) -> Fraction:
    return Fraction(rng.randint(lo * den, hi * den), den)


def random_nodes(rng: random.Random, domain, k: int) -> list[Fraction]:
    a, b = Fraction(domain[0]), Fraction(domain[1])
    grid = 16
    inner = sorted(rng.sample(range(1, grid), k))
    return [a] + [a + (b - a) * Fraction(i, grid) for i in inner] + [b]


def random_pa(rng: random.Random, domain=(-1, 1), pieces: int | None = None, zero_bias: float = 0.3) -> PPoly:
    """Random continuous piecewise affine function with rational nodes."""
    k = rng.randint(0, 4) if pieces is None else pieces - 1
    xs = random_nodes(rng, domain, k)
    ys = [Fraction(0) if rng.random() < zero_bias else _rq(rng) for _ in xs]
    return PPoly.linear_interp(list(zip(xs, ys))).simplify()


def random_pp2(rng: random.Random, domain=(-1, 1), pieces: int | None = None, zero_bias: float = 0.3) -> PPoly:
    """Random continuous piecewise quadratic: affine interpolant plus bubbles."""
    base = random_pa(rng, domain, pieces, zero_bias)
    bps = [b.value for b in base.breakpoints]
    out = []
    for (x0, x1), p in zip(zip(bps, bps[1:]), base.pieces):
        c = Fraction(0) if rng.random() < zero_bias else _rq(rng)
        bubble = Poly([-x0, 1]) * Poly([-x1, 1]) * Poly.const(c)
        out.append(p + bubble)
    return PPoly(base.domain, bps, out).simplify()


def random_nonneg(rng: random.Random, domain=(-1, 1), quadratic: bool = True) -> PPoly:
    f = random_pp2(rng, domain) if quadratic else random_pa(rng, domain)
    f = abs(f)
    if f.is_zero():
        f = hat(domain[0], domain[1], 1, domain)
    return f


# ---------------------------------------------------------------------------
# members of descriptors


def _rational_gap(lo, hi) -> tuple[Fraction, Fraction]:
    """Rationals lo < c < d < hi."""
    m = rational_between(lo, hi)
    return rational_between(lo, m), rational_between(m, hi)


def _bump(rng: random.Random, carrier: Carrier, c: Fraction, d: Fraction, h: Fraction) -> PPoly:
    dom = carrier.domain
    if carrier.is_c1:
        return c1_bump(c, d, h, dom)
    if carrier.max_degree >= 2 and not carrier.of_type(SpanX0PlusQ) and rng.random() < 0.5:
        a, b = dom
        t = Poly.t()
        p = (t - Poly.const(c)) * (Poly.const(d) - t) * Poly.const(4 * h / ((d - c) * (d - c)))
        bps = [x for x in (a, c, d, b)]
        pieces = [Poly(), p, Poly()]
        keep_b, keep_p = [bps[0]], []
        for lo, hi, q in zip(bps, bps[1:], pieces):
            if lo < hi:
                keep_b.append(hi)
                keep_p.append(q)
        return PPoly(dom, keep_b, keep_p).simplify()
    return hat(c, d, h, dom)


def _clearance(p: Fraction, obstacles, domain) -> Fraction:
    """A rational r > 0 with (p - r, p + r) free of obstacles other than p."""
    r = Fraction(domain[1] - domain[0])
    P = as_alg(p)
    for x in obstacles:
        c = alg_compare(x, P)
        if c == 0:
            continue
        q = rational_between(P, x) if c > 0 else rational_between(x, P)
        r = min(r, abs(q - p))
    return r / 2


def _plateau(carrier: Carrier, p: Fraction, r: Fraction, h: Fraction) -> PPoly:
    dom = carrier.domain
    if carrier.is_c1:
        a, b = dom
        u, v = p - r, p + r
        return c1_plateau(max(u, a), min(v, b), r / 8, h, dom, rise_left=u > a, fall_right=v < b)
    return trapezoid(p - r / 2, p + r / 2, r / 2, h, dom)


def sample_member(D: SubspaceDescriptor, rng: random.Random, bumps: int = 3) -> PPoly:
    """A random element of D: bumps in the gaps plus plateaus at special points."""
    C = D.carrier
    a, b = C.domain
    f = PPoly.zero(C.domain)
    special = [Fraction(p) for p in C.special_points()]
    gaps = D.zero_set.gaps(a, b)
    if C.max_degree < 1:
        return f
    for _ in range(bumps):
        if not gaps:
            break
        lo, hi, _, _ = rng.choice(gaps)
        c, d = _rational_gap(lo, hi)
        inside = [p for p in special if c < p < d]
        marks = [c] + inside + [d]
        k = rng.randrange(len(marks) - 1)
        c2, d2 = _rational_gap(marks[k], marks[k + 1])
        f = f + _bump(rng, C, c2, d2, _rq(rng, -2, 2) or Fraction(1))

    # plateaus at special points outside the zero set, honouring point relations
    free = [p for p in special if not D.zero_set.contains(p)]
    if free and rng.random() < 0.7:
        obstacles = list(D.zero_set.endpoints()) + [as_alg(x) for x in special] + [as_alg(a), as_alg(b)]
        rel = []
        for c in C.of_type(PointRelation):
            rel.append([sum((k for t, k in zip(c.points, c.coeffs) if t == p), Fraction(0)) for p in free])
        K = kernel_basis(rel, len(free)) if rel else None
        basis = K.basis if K is not None else [tuple(Fraction(int(i == j)) for j in range(len(free))) for i in range(len(free))]
        if basis:
            vals = [Fraction(0)] * len(free)
            for v in basis:
                w = _rq(rng, -2, 2)
                vals = [x + w * y for x, y in zip(vals, v)]
            for p, h in zip(free, vals):
                if h:
                    f = f + _plateau(C, p, _clearance(p, [o for o in obstacles if alg_compare(o, p) != 0], C.domain), h)

    for c in C.of_type(SpanX0PlusQ):
        if rng.random() < 0.5 and D.contains(c.extra):
            f = f + c.extra * _rq(rng, -2, 2)
    if not D.contains(f):
        raise ArithmeticError(f"sampler produced a non-member {f!r} of {D!r}")
    return f


def boundary_probe(D: SubspaceDescriptor, rng: random.Random) -> PPoly | None:
    """A carrier element that is nonzero somewhere on D's zero set, when one exists."""
    C = D.carrier
    a, b = C.domain
    for lo, hi in D.zero_set:
        if alg_compare(lo, hi) < 0:
            c, d = _rational_gap(lo, hi)
        else:
            # straddle the point
            x = lo
            left = rational_between(a, x) if alg_compare(x, a) > 0 else None
            right = rational_between(x, b) if alg_compare(x, b) < 0 else None
            c = left if left is not None else Fraction(a)
            d = right if right is not None else Fraction(b)
        for _ in range(4):
            g = _bump(rng, C, c, d, Fraction(1))
            if C.contains(g) and not D.contains(g):
                return g
            c, d = _rational_gap(c, d) if rng.random() < 0.5 else (c, d)
    return None
