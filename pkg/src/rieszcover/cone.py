"""Polyhedral cones in Q^n and the polyhedra of upper bounds they induce.

Conversion between the inequality (H) and generator (V) descriptions uses the
double description method with exact rationals.  Rays are normalised to
coprime integer coordinates by positive scaling, and every list of rays or
facets is sorted, so two descriptions of the same cone compare equal.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .exact.linalg import Subspace, rank, solve
from .exact.rational import dot, fmt_vec, is_zero, neg, primitive, sub, vec


class NotPointed(ValueError):
    """The cone contains a line."""


class NotGenerating(ValueError):
    """The cone is not full-dimensional, so C - C is a proper subspace."""


# ---------------------------------------------------------------------------
# double description


def _project_out(v, lineality: Subspace):
    """Orthogonal projection of v onto the complement of ``lineality``."""
    if lineality.is_zero():
        return vec(v)
    # solve (B B^T) c = B v, then v - B^T c
    B = lineality.basis
    G = [[dot(a, b) for b in B] for a in B]
    rhs = [dot(a, v) for a in B]
    c = solve(G, rhs)
    out = list(vec(v))
    for ck, b in zip(c, B):
        for j in range(len(out)):
            out[j] -= ck * b[j]
    return tuple(out)


def _canonical_rays(rays, lineality: Subspace) -> tuple:
    seen = set()
    out = []
    for r in rays:
        p = primitive(_project_out(r, lineality))
        if is_zero(p) or p in seen:
            continue
        seen.add(p)
        out.append(p)
    # descending, so the standard cone lists e_1, ..., e_n in order
    return tuple(sorted(out, reverse=True))


def double_description(inequalities: Sequence[Sequence], n: int) -> tuple[Subspace, tuple]:
    """Generators of {x in Q^n : a.x >= 0 for every row a}.

    Returns ``(lineality, rays)``: the cone equals lineality + cone(rays), the
    rays are extremal modulo the lineality space, normalised and sorted.
    """
    rows = [vec(a) for a in inequalities]
    for a in rows:
        if len(a) != n:
            raise ValueError(f"inequality of length {len(a)} in dimension {n}")
    lin: list[tuple] = [tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)]
    rays: list[tuple] = []
    done: list[tuple] = []
    for a in rows:
        if is_zero(a):
            continue
        k = next((i for i, l in enumerate(lin) if dot(a, l) != 0), None)
        if k is not None:
            pivot = lin[k]
            al = dot(a, pivot)
            if al < 0:
                pivot, al = neg(pivot), -al
            others = lin[:k] + lin[k + 1:]
            lin = [tuple(x - dot(a, l) / al * y for x, y in zip(l, pivot)) for l in others]
            rays = [tuple(x - dot(a, r) / al * y for x, y in zip(r, pivot)) for r in rays]
            rays.append(pivot)
            done.append(a)
            continue
        vals = [dot(a, r) for r in rays]
        pos = [r for r, v in zip(rays, vals) if v > 0]
        neg_ = [r for r, v in zip(rays, vals) if v < 0]
        zer = [r for r, v in zip(rays, vals) if v == 0]
        new = list(pos) + list(zer)
        if neg_ and pos:
            target = n - len(lin) - 2
            zsets = {id(r): frozenset(k for k, b in enumerate(done) if dot(b, r) == 0) for r in rays}
            for p in pos:
                ap = dot(a, p)
                for q in neg_:
                    common = zsets[id(p)] & zsets[id(q)]
                    if len(common) < target:
                        continue
                    if rank([done[k] for k in common], n) != target:
                        continue
                    aq = dot(a, q)
                    new.append(tuple(ap * y - aq * x for x, y in zip(p, q)))
        rays = [primitive(r) for r in new]
        done.append(a)
    lineality = Subspace(n, lin)
    return lineality, _canonical_rays(rays, lineality)


# ---------------------------------------------------------------------------
# cones


class PolyCone:
    """A polyhedral cone carrying both of its descriptions.

    ``rays`` and ``lineality`` form the V-representation, ``facets`` and
    ``equations`` the H-representation:  x is in the cone iff ``f.x >= 0`` for
    every facet and ``e.x == 0`` for every equation.  Use the
    :meth:`from_inequalities` / :meth:`from_generators` constructors.
    """

    def __init__(self, n: int, rays, lineality: Subspace, facets, equations: Subspace, check: bool = True):
        self.n = n
        self.rays: tuple = tuple(rays)
        self.lineality = lineality
        self.facets: tuple = tuple(facets)
        self.equations = equations
        if check:
            self._check()

    @classmethod
    def from_inequalities(cls, inequalities: Iterable[Sequence], n: int | None = None, equations: Iterable[Sequence] = ()) -> "PolyCone":
        ineqs = [vec(a) for a in inequalities]
        eqs = [vec(e) for e in equations]
        if n is None:
            n = len((ineqs + eqs)[0])
        rows = ineqs + eqs + [neg(e) for e in eqs]
        lineality, rays = double_description(rows, n)
        return cls._from_v(n, rays, lineality)

    @classmethod
    def from_generators(cls, generators: Iterable[Sequence], n: int | None = None, lineality: Iterable[Sequence] = ()) -> "PolyCone":
        gens = [vec(g) for g in generators]
        lin = [vec(l) for l in lineality]
        if n is None:
            n = len((gens + lin)[0])
        gens = gens + lin + [neg(l) for l in lin]
        eqs, facets = double_description(gens, n)
        # V-side canonical form: recompute from the irredundant facets
        rows = list(facets) + list(eqs.basis) + [neg(e) for e in eqs.basis]
        lin_sub, rays = double_description(rows, n)
        return cls(n, rays, lin_sub, facets, eqs)

    @classmethod
    def _from_v(cls, n, rays, lineality: Subspace) -> "PolyCone":
        gens = list(rays) + list(lineality.basis) + [neg(l) for l in lineality.basis]
        eqs, facets = double_description(gens, n)
        return cls(n, rays, lineality, facets, eqs)

    @classmethod
    def standard(cls, n: int) -> "PolyCone":
        return cls.from_inequalities([tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)], n)

    # -- consistency -------------------------------------------------------
    def _check(self) -> None:
        for r in self.rays:
            if not self.contains(r):
                raise ArithmeticError(f"generator {fmt_vec(r)} violates the H-representation")
        for l in self.lineality.basis:
            if not all(dot(f, l) == 0 for f in self.facets) or not all(dot(e, l) == 0 for e in self.equations.basis):
                raise ArithmeticError("lineality direction violates the H-representation")
        d = self.dim
        lin = self.lineality.dim
        for f in self.facets:
            tight = [r for r in self.rays if dot(f, r) == 0] + list(self.lineality.basis)
            if rank(tight, self.n) != d - 1:
                raise ArithmeticError(f"inequality {fmt_vec(f)} is not facet-defining")
        eq_rows = list(self.equations.basis)
        for r in self.rays:
            tight = [f for f in self.facets if dot(f, r) == 0] + eq_rows
            if rank(tight, self.n) != self.n - lin - 1:
                raise ArithmeticError(f"generator {fmt_vec(r)} is not extremal")

    # -- predicates ----------------------------------------------------------
    @property
    def dim(self) -> int:
        return self.n - self.equations.dim

    @property
    def generators(self) -> tuple:
        """All generators, lineality directions included with both signs."""
        lin = self.lineality.basis
        return self.rays + tuple(lin) + tuple(neg(l) for l in lin)

    @property
    def inequalities(self) -> tuple:
        """All inequalities ``a.x >= 0``; equations appear with both signs."""
        eq = self.equations.basis
        return self.facets + tuple(eq) + tuple(neg(e) for e in eq)

    def is_pointed(self) -> bool:
        return self.lineality.is_zero()

    def is_generating(self) -> bool:
        return self.equations.is_zero()

    def contains(self, x: Sequence) -> bool:
        x = vec(x)
        return all(dot(f, x) >= 0 for f in self.facets) and all(dot(e, x) == 0 for e in self.equations.basis)

    __contains__ = contains

    def leq(self, x: Sequence, y: Sequence) -> bool:
        """x <= y in the order induced by the cone."""
        return self.contains(sub(vec(y), vec(x)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyCone):
            return NotImplemented
        return (self.n, self.rays, self.lineality) == (other.n, other.rays, other.lineality)

    def __hash__(self) -> int:
        return hash((self.n, self.rays, self.lineality))

    def __repr__(self) -> str:
        return f"PolyCone(n={self.n}, rays={[fmt_vec(r) for r in self.rays]}, lineality_dim={self.lineality.dim})"

    def to_json(self) -> dict:
        out = {
            "dim": self.n,
            "generators": [fmt_vec(r) for r in self.rays],
            "inequalities": [fmt_vec(f) for f in self.facets],
        }
        if not self.lineality.is_zero():
            out["lineality"] = [fmt_vec(l) for l in self.lineality.basis]
        if not self.equations.is_zero():
            out["equations"] = [fmt_vec(e) for e in self.equations.basis]
        return out


def dd_convert(inequalities: Iterable[Sequence], n: int) -> tuple:
    """H -> V.  Returns all generators (lineality directions with both signs)."""
    return PolyCone.from_inequalities(inequalities, n).generators


def dd_convert_inv(generators: Iterable[Sequence], n: int) -> tuple:
    """V -> H.  Returns all inequalities (equations with both signs)."""
    return PolyCone.from_generators(generators, n).inequalities


def dual_cone(C: PolyCone) -> PolyCone:
    """C* = {f : f.x >= 0 for all x in C}.  Swaps the two descriptions."""
    return PolyCone(C.n, C.facets, C.equations, C.rays, C.lineality)


def extremal_rays(C: PolyCone) -> tuple:
    if not C.is_pointed():
        raise NotPointed("cone contains a line; extremal rays are undefined")
    return C.rays


# ---------------------------------------------------------------------------
# polyhedra


class Polyhedron:
    """{w : A w >= b} together with its vertices and recession rays."""

    def __init__(self, n: int, A, b, vertices, rays):
        self.n = n
        self.A = tuple(vec(a) for a in A)
        self.b = vec(b)
        self.vertices = tuple(sorted(vec(v) for v in vertices))
        self.rays = tuple(sorted(primitive(r) for r in rays))

    @classmethod
    def from_h(cls, A: Sequence[Sequence], b: Sequence, n: int) -> "Polyhedron":
        A = [vec(a) for a in A]
        b = vec(b)
        # homogenise: (w, t) with a.w - b t >= 0 and t >= 0
        rows = [a + (-bi,) for a, bi in zip(A, b)] + [tuple([Fraction(0)] * n + [Fraction(1)])]
        lin, gens = double_description(rows, n + 1)
        if not lin.is_zero():
            raise NotPointed("polyhedron contains a line")
        vertices = [tuple(x / g[n] for x in g[:n]) for g in gens if g[n] > 0]
        rays = [g[:n] for g in gens if g[n] == 0]
        return cls(n, A, b, vertices, rays)

    def contains(self, w: Sequence) -> bool:
        w = vec(w)
        return all(dot(a, w) >= bi for a, bi in zip(self.A, self.b))

    def recedes(self, r: Sequence) -> bool:
        r = vec(r)
        return all(dot(a, r) >= 0 for a in self.A)

    def is_empty(self) -> bool:
        return not self.vertices

    def __repr__(self) -> str:
        return f"Polyhedron(vertices={[fmt_vec(v) for v in self.vertices]}, rays={[fmt_vec(r) for r in self.rays]})"


def upper_set(C: PolyCone, a: Sequence) -> Polyhedron:
    """{w : w >= a and w >= -a} in the order of C, i.e. (a + C) & (-a + C)."""
    if not C.is_pointed():
        raise NotPointed("upper_set needs a pointed cone")
    if not C.is_generating():
        raise NotGenerating("upper_set needs a generating cone")
    a = vec(a)
    b = [abs(dot(f, a)) for f in C.facets]
    return Polyhedron.from_h(C.facets, b, C.n)


def polyhedron_equal(P: Polyhedron, R: Polyhedron) -> bool:
    """Point-set equality by mutual inclusion of the V-descriptions."""
    if P.n != R.n:
        raise ValueError("ambient dimensions differ")
    return (
        all(R.contains(v) for v in P.vertices)
        and all(R.recedes(r) for r in P.rays)
        and all(P.contains(v) for v in R.vertices)
        and all(P.recedes(r) for r in R.rays)
    )
