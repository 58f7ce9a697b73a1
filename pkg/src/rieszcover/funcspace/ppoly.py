"""Continuous piecewise polynomials of degree at most 2 on a rational interval."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from ..exact.algebraic import AlgebraicNumber, alg_compare, as_alg, isolate_roots, rational_between, sturm_sign
from ..exact.poly import Poly
from ..exact.rational import Q, fmt
from .intervals import IntervalSet

MAX_DEGREE = 2


class DomainMismatch(ValueError):
    pass


def _sgn(x) -> int:
    return (x > 0) - (x < 0)


def _as_poly(p) -> Poly:
    if isinstance(p, Poly):
        return p
    if isinstance(p, (int, Fraction, str)):
        return Poly.const(Q(p))
    return Poly(p)


class PPoly:
    """A continuous function on ``[a, b]`` that is a polynomial on each piece.

    ``breakpoints`` run from a to b (inclusive) and are strictly increasing;
    piece k lives on ``[breakpoints[k], breakpoints[k+1]]``.  Adjacent pieces
    must agree at the breakpoint between them.
    """

    def __init__(self, domain: Sequence, breakpoints: Iterable, pieces: Iterable, check: bool = True):
        a, b = Q(domain[0]), Q(domain[1])
        if not a < b:
            raise ValueError("domain must satisfy a < b")
        self.domain = (a, b)
        self.breakpoints: tuple = tuple(as_alg(x) for x in breakpoints)
        self.pieces: tuple = tuple(_as_poly(p) for p in pieces)
        if check:
            self._check()

    def _check(self) -> None:
        bp, pc = self.breakpoints, self.pieces
        if len(bp) != len(pc) + 1 or not pc:
            raise ValueError("need one piece per pair of consecutive breakpoints")
        if alg_compare(bp[0], self.domain[0]) != 0 or alg_compare(bp[-1], self.domain[1]) != 0:
            raise ValueError("first and last breakpoints must be the domain ends")
        for x, y in zip(bp, bp[1:]):
            if alg_compare(x, y) >= 0:
                raise ValueError("breakpoints must be strictly increasing")
        for p in pc:
            if p.degree > MAX_DEGREE:
                raise ValueError(f"piece {p} has degree above {MAX_DEGREE}")
        for k in range(1, len(pc)):
            if bp[k].sign_of(pc[k - 1] - pc[k]) != 0:
                raise ValueError(f"discontinuity at breakpoint {bp[k]!r}")

    # -- construction ------------------------------------------------------
    @classmethod
    def poly(cls, p, domain) -> "PPoly":
        return cls(domain, [domain[0], domain[1]], [p])

    @classmethod
    def constant(cls, c, domain) -> "PPoly":
        return cls.poly(Poly.const(Q(c)), domain)

    @classmethod
    def zero(cls, domain) -> "PPoly":
        return cls.constant(0, domain)

    @classmethod
    def linear_interp(cls, points: Sequence[tuple]) -> "PPoly":
        """Piecewise affine function through rational nodes (x_0 < x_1 < ...)."""
        pts = [(Q(x), Q(y)) for x, y in points]
        pieces = []
        for (x0, y0), (x1, y1) in zip(pts, pts[1:]):
            s = (y1 - y0) / (x1 - x0)
            pieces.append(Poly([y0 - s * x0, s]))
        return cls((pts[0][0], pts[-1][0]), [x for x, _ in pts], pieces)

    @classmethod
    def from_json(cls, obj: dict) -> "PPoly":
        dom = obj["domain"]
        bps = obj.get("breakpoints") or dom
        return cls(dom, [AlgebraicNumber.from_json(x) for x in bps], [Poly(c) for c in obj["pieces"]])

    def to_json(self) -> dict:
        return {
            "domain": [fmt(self.domain[0]), fmt(self.domain[1])],
            "breakpoints": [x.to_json() for x in self.breakpoints],
            "pieces": [[fmt(c) for c in p.coeffs] for p in self.pieces],
        }

    # -- inspection ----------------------------------------------------------
    def intervals(self):
        """(lo, hi, piece) triples."""
        return zip(self.breakpoints, self.breakpoints[1:], self.pieces)

    @property
    def degree(self) -> int:
        return max(p.degree for p in self.pieces)

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.pieces)

    def _check_point(self, t) -> AlgebraicNumber:
        t = as_alg(t)
        if alg_compare(t, self.domain[0]) < 0 or alg_compare(t, self.domain[1]) > 0:
            raise ValueError("point outside the domain")
        return t

    def pieces_at(self, t) -> list[tuple]:
        """(side, piece) for the pieces whose closed interval contains t.

        side is "left" for a piece ending at t, "right" for one starting at t,
        and "inside" for a piece containing t in its interior.
        """
        t = self._check_point(t)
        out = []
        for lo, hi, p in self.intervals():
            c_lo, c_hi = alg_compare(lo, t), alg_compare(t, hi)
            if c_lo < 0 and c_hi < 0:
                out.append(("inside", p))
            elif c_hi == 0:
                out.append(("left", p))
            elif c_lo == 0:
                out.append(("right", p))
        return out

    def __call__(self, t) -> Fraction:
        t = Q(t)
        return self.pieces_at(t)[0][1](t)

    def sign_at(self, t) -> int:
        t = as_alg(t)
        return t.sign_of(self.pieces_at(t)[0][1])

    def side_sign(self, t, side: str) -> int:
        """Sign of f on (t, t+d) for "right" or (t-d, t) for "left", d small."""
        t = as_alg(t)
        for s, p in self.pieces_at(t):
            if s == "inside" or s == ("right" if side == "right" else "left"):
                flip = -1 if side == "left" else 1
                q, k = p, 0
                while not q.is_zero():
                    v = t.sign_of(q)
                    if v:
                        return v * (flip ** k)
                    q, k = q.derivative(), k + 1
                return 0
        raise ValueError(f"no piece on the {side} of the point")

    # -- arithmetic --------------------------------------------------------
    def _same_domain(self, other: "PPoly") -> None:
        if self.domain != other.domain:
            raise DomainMismatch(f"domains {self.domain} and {other.domain} differ")

    def refine(self, other: "PPoly") -> list[tuple]:
        """Common refinement: (lo, hi, piece_of_self, piece_of_other)."""
        self._same_domain(other)
        A, B = self.breakpoints, other.breakpoints
        i = j = 0
        out = []
        lo = A[0]
        while i < len(self.pieces) and j < len(other.pieces):
            c = alg_compare(A[i + 1], B[j + 1])
            hi = A[i + 1] if c <= 0 else B[j + 1]
            out.append((lo, hi, self.pieces[i], other.pieces[j]))
            if c <= 0:
                i += 1
            if c >= 0:
                j += 1
            lo = hi
        return out

    def _combine(self, other: "PPoly", op) -> "PPoly":
        parts = self.refine(other)
        bps = [parts[0][0]] + [hi for _, hi, _, _ in parts]
        return PPoly(self.domain, bps, [op(p, q) for _, _, p, q in parts], check=False).simplify()

    def __add__(self, other: "PPoly") -> "PPoly":
        return self._combine(other, lambda p, q: p + q)

    def __sub__(self, other: "PPoly") -> "PPoly":
        return self._combine(other, lambda p, q: p - q)

    def __neg__(self) -> "PPoly":
        return PPoly(self.domain, self.breakpoints, [-p for p in self.pieces], check=False)

    def __mul__(self, c) -> "PPoly":
        if isinstance(c, PPoly):
            raise TypeError("only scalar multiples stay within degree 2")
        c = Q(c)
        return PPoly(self.domain, self.breakpoints, [p * Poly.const(c) for p in self.pieces], check=False).simplify()

    __rmul__ = __mul__

    def simplify(self) -> "PPoly":
        """Merge neighbouring pieces carrying the same polynomial."""
        bps = [self.breakpoints[0]]
        pieces: list[Poly] = []
        for hi, p in zip(self.breakpoints[1:], self.pieces):
            if pieces and pieces[-1] == p:
                bps[-1] = hi
            else:
                pieces.append(p)
                bps.append(hi)
        return PPoly(self.domain, bps, pieces, check=False)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PPoly):
            return NotImplemented
        return self.domain == other.domain and (self - other).is_zero()

    __hash__ = None

    # -- order and lattice operations -----------------------------------------
    def leq(self, other: "PPoly") -> bool:
        return all(sturm_sign(q - p, lo, hi).nonneg for lo, hi, p, q in self.refine(other))

    __le__ = leq

    def __ge__(self, other: "PPoly") -> bool:
        return other.leq(self)

    def _select(self, other: "PPoly", want: int) -> "PPoly":
        bps = [as_alg(self.domain[0])]
        pieces: list[Poly] = []
        for lo, hi, p, q in self.refine(other):
            d = p - q
            if d.is_zero():
                pieces.append(p)
                bps.append(hi)
                continue
            inner = [r for r in isolate_roots(d, lo, hi) if alg_compare(r, lo) > 0 and alg_compare(r, hi) < 0]
            marks = [lo] + inner + [hi]
            for x, y in zip(marks, marks[1:]):
                s = _sgn(d(rational_between(x, y)))
                pieces.append(p if s * want >= 0 else q)
                bps.append(y)
        return PPoly(self.domain, bps, pieces, check=False).simplify()

    def join(self, other: "PPoly") -> "PPoly":
        """Pointwise maximum."""
        return self._select(other, 1)

    def meet(self, other: "PPoly") -> "PPoly":
        """Pointwise minimum."""
        return self._select(other, -1)

    def __or__(self, other):
        return self.join(other)

    def __and__(self, other):
        return self.meet(other)

    def __abs__(self) -> "PPoly":
        return self.join(-self)

    def pos(self) -> "PPoly":
        return self.join(PPoly.zero(self.domain))

    def neg_part(self) -> "PPoly":
        return (-self).pos()

    # -- supports --------------------------------------------------------------
    def support(self) -> IntervalSet:
        """Closure of {t : f(t) != 0}."""
        return IntervalSet((lo, hi) for lo, hi, p in self.intervals() if not p.is_zero())

    def zero_set(self) -> IntervalSet:
        parts = []
        for lo, hi, p in self.intervals():
            if p.is_zero():
                parts.append((lo, hi))
            else:
                parts.extend((r, r) for r in isolate_roots(p, lo, hi))
        return IntervalSet(parts)

    def vanishes_on(self, Z: IntervalSet) -> bool:
        for zlo, zhi in Z:
            if alg_compare(zlo, zhi) == 0:
                if self.sign_at(zlo) != 0:
                    return False
                continue
            for lo, hi, p in self.intervals():
                # pieces overlapping (zlo, zhi) in more than a point must vanish
                if alg_compare(lo, zhi) < 0 and alg_compare(zlo, hi) < 0 and not p.is_zero():
                    return False
        return True

    def germ_pieces(self, t) -> list[Poly]:
        return [p for _, p in self.pieces_at(t)]

    def germ_constant_at(self, t) -> bool:
        ps = self.germ_pieces(t)
        return all(p.degree <= 0 for p in ps) and len({p for p in ps}) == 1

    def germ_zero_at(self, t) -> bool:
        return all(p.is_zero() for p in self.germ_pieces(t))

    def is_c1(self) -> bool:
        """Is the derivative continuous at every interior breakpoint?"""
        for k in range(1, len(self.pieces)):
            d = self.pieces[k - 1].derivative() - self.pieces[k].derivative()
            if self.breakpoints[k].sign_of(d) != 0:
                return False
        return True

    def is_piecewise_affine(self) -> bool:
        return self.degree <= 1

    def rational_min(self):
        """Exact minimum when every breakpoint is rational, else None."""
        if not all(x.is_rational for x in self.breakpoints):
            return None
        best = None
        for lo, hi, p in self.intervals():
            cands = [lo.value, hi.value]
            if p.degree == 2:
                v = -p.coeff(1) / (2 * p.coeff(2))
                if lo.value < v < hi.value:
                    cands.append(v)
            m = min(p(c) for c in cands)
            best = m if best is None else min(best, m)
        return best

    def __repr__(self) -> str:
        parts = []
        for lo, hi, p in self.intervals():
            parts.append(f"[{_show(lo)}, {_show(hi)}]: {p}")
        return "PPoly(" + "; ".join(parts) + ")"


def _show(x: AlgebraicNumber) -> str:
    return fmt(x.value) if x.is_rational else f"~{x.approx():.6g}"


def disjoint(f: PPoly, g: PPoly) -> bool:
    """Supports meet in at most finitely many points."""
    return not (f.support() & g.support()).has_interior()


def sup(fs: Sequence[PPoly]) -> PPoly:
    out = fs[0]
    for f in fs[1:]:
        out = out.join(f)
    return out


def hat(c, d, height, domain) -> PPoly:
    """Piecewise affine bump: 0 outside [c, d], peak ``height`` at the midpoint."""
    c, d, h = Q(c), Q(d), Q(height)
    pts = [(c, 0), ((c + d) / 2, h), (d, 0)]
    return _embed_points(pts, domain)


def trapezoid(c, d, r, height, domain) -> PPoly:
    """Equal to ``height`` on [c, d] and affine down to 0 on [c-r, c], [d, d+r]."""
    c, d, r, h = Q(c), Q(d), Q(r), Q(height)
    pts = [(c - r, 0), (c, h), (d, h), (d + r, 0)]
    return _embed_points(pts, domain)


def _embed_points(pts, domain) -> PPoly:
    """Piecewise affine through pts, zero elsewhere, clipped to the domain."""
    a, b = Q(domain[0]), Q(domain[1])
    nodes = sorted(((Q(x), Q(y)) for x, y in pts), key=lambda p: p[0])
    return PPoly.linear_interp(_clip(nodes, a, b)).simplify()


def _clip(nodes, a, b):
    def value(x):
        for (x0, y0), (x1, y1) in zip(nodes, nodes[1:]):
            if x0 <= x <= x1 and x0 < x1:
                return y0 + (y1 - y0) * (x - x0) / (x1 - x0)
        return Fraction(0)

    xs = sorted({a, b} | {x for x, _ in nodes if a < x < b})
    return [(x, value(x)) for x in xs]


def c1_ramp_pieces(u, w) -> tuple[Poly, Poly]:
    """Quadratic pieces rising C^1-smoothly from 0 at u to 1 at u + 2w."""
    u, w = Q(u), Q(w)
    t = Poly.t()
    first = (t - Poly.const(u)) * (t - Poly.const(u)) * Poly.const(1 / (2 * w * w))
    end = Poly.const(u + 2 * w)
    second = Poly.const(1) - (end - t) * (end - t) * Poly.const(1 / (2 * w * w))
    return first, second


def c1_bump(c, d, height, domain) -> PPoly:
    """C^1 bump of degree 2: 0 outside [c, d], equal to ``height`` at the middle."""
    c, d, h = Q(c), Q(d), Q(height)
    a, b = Q(domain[0]), Q(domain[1])
    w = (d - c) / 4
    up1, up2 = c1_ramp_pieces(c, w)
    # mirror image for the way down
    dn1, dn2 = c1_ramp_pieces(-d, w)
    dn1, dn2 = dn1.compose_affine(0, -1), dn2.compose_affine(0, -1)
    H = Poly.const(h)
    bps = [a, c, c + w, c + 2 * w, c + 3 * w, d, b]
    pieces = [Poly(), up1 * H, up2 * H, dn2 * H, dn1 * H, Poly()]
    keep_b = [bps[0]]
    keep_p = []
    for lo, hi, p in zip(bps, bps[1:], pieces):
        if lo < hi:
            keep_p.append(p)
            keep_b.append(hi)
    return PPoly((a, b), keep_b, keep_p).simplify()


def c1_plateau(u, v, w, height, domain, rise_left: bool = True, fall_right: bool = True) -> PPoly:
    """``height`` on [u + 2w, v - 2w], C^1 ramps down to 0 at u and v.

    A side without a ramp stays at ``height`` up to the domain end.
    """
    u, v, w, h = Q(u), Q(v), Q(w), Q(height)
    a, b = Q(domain[0]), Q(domain[1])
    H = Poly.const(h)
    bps = [a]
    pieces: list[Poly] = []

    def push(hi, p):
        if hi > bps[-1]:
            pieces.append(p)
            bps.append(hi)

    if rise_left:
        up1, up2 = c1_ramp_pieces(u, w)
        push(u, Poly())
        push(u + w, up1 * H)
        push(u + 2 * w, up2 * H)
    if fall_right:
        dn1, dn2 = c1_ramp_pieces(-v, w)
        dn1, dn2 = dn1.compose_affine(0, -1), dn2.compose_affine(0, -1)
        push(v - 2 * w, H)
        push(v - w, dn2 * H)
        push(v, dn1 * H)
        push(b, Poly())
    else:
        push(b, H)
    return PPoly((a, b), bps, pieces).simplify()
