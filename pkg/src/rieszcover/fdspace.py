"""Finite-dimensional pre-Riesz spaces and their cover in Q^m.

A space is ``X = Q^n`` ordered by a pointed generating polyhedral cone ``K``.
Its cover is ``Y = Q^m`` with the standard cone, reached through the map
``i(x) = (f_1(x), ..., f_m(x))`` whose rows are the extremal rays of the dual
cone.  Everything on the cover side lives in coordinates, where disjointness
is disjointness of supports and ideals and bands are coordinate subspaces.
"""

from __future__ import annotations

import enum
import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .cone import NotGenerating, NotPointed, PolyCone, Polyhedron, dual_cone, extremal_rays, polyhedron_equal, upper_set
from .exact.linalg import Subspace, kernel_basis, preimage
from .exact.lp import solve_lp, solve_lp_many
from .exact.rational import add, dot, fmt_vec, is_zero, matvec, neg, primitive, sub, support, unit, vec, zero


class OrderDensityFailed(ValueError):
    def __init__(self, message: str, witness):
        super().__init__(message)
        self.witness = witness


class NotPositive(ValueError):
    """A generator that should lie in the cone does not."""


class Bound(enum.Enum):
    EMPTY = "Empty"
    UNBOUNDED = "Unbounded"


@dataclass(frozen=True)
class Handle:
    """An ideal or band, either in X ("X") or in the cover ("Y")."""

    side: str
    kind: str
    subspace: Subspace
    generators: tuple = field(default=(), compare=False)

    def to_json(self) -> dict:
        out = {"side": self.side, "kind": self.kind, "subspace": self.subspace.to_json()}
        if self.generators:
            out["generators"] = [fmt_vec(g) for g in self.generators]
        return out


@dataclass(frozen=True)
class DensityResult:
    dense: bool
    witness: tuple | None = None
    # F(witness), or Bound.EMPTY when nothing in L lies above it
    upper: object = None

    def __bool__(self) -> bool:
        return self.dense

    def __iter__(self):
        return iter((self.dense, self.witness))


class FDSpace:
    """(Q^n, K) together with its verified embedding into (Q^m, standard cone)."""

    def __init__(self, cone: PolyCone, functionals: Sequence[Sequence]):
        self.cone = cone
        self.n = cone.n
        self.functionals = tuple(vec(f) for f in functionals)
        self.m = len(self.functionals)
        self.matrix = self.functionals

    def embed(self, x: Sequence) -> tuple:
        x = vec(x)
        if len(x) != self.n:
            raise ValueError(f"expected a vector of length {self.n}")
        return matvec(self.matrix, x)

    def image(self, L: Subspace | None = None) -> Subspace:
        """i(L) as a subspace of the cover; i(X) when L is omitted."""
        if L is None:
            L = Subspace.full(self.n)
        return Subspace(self.m, [self.embed(b) for b in L.basis])

    def __repr__(self) -> str:
        return f"FDSpace(n={self.n}, m={self.m}, functionals={[fmt_vec(f) for f in self.functionals]})"

    def to_json(self) -> dict:
        return {"dim": self.n, "cone": self.cone.to_json(), "functionals": [fmt_vec(f) for f in self.functionals]}


def build_space(cone: PolyCone, functionals: Sequence[Sequence] | None = None) -> FDSpace:
    """Build the cover embedding of ``(Q^n, cone)`` and verify it.

    ``functionals`` may fix the order (and scaling) of the embedding rows; they
    must be positive multiples of the extremal dual rays, one each.
    """
    if not cone.is_pointed():
        raise NotPointed("the cone contains a line")
    if not cone.is_generating():
        raise NotGenerating("the cone is not full-dimensional")
    rays = extremal_rays(dual_cone(cone))
    if functionals is None:
        rows = list(rays)
    else:
        rows = [vec(f) for f in functionals]
        if sorted(primitive(f) for f in rows) != sorted(rays) or any(is_zero(f) for f in rows):
            raise ValueError("supplied functionals are not the extremal rays of the dual cone")
    space = FDSpace(cone, rows)

    # bipositivity: {x : i(x) >= 0} is exactly K
    if PolyCone.from_inequalities(rows, cone.n) != cone:
        raise ArithmeticError("embedding is not bipositive")
    res = is_order_dense(space, space.image(), Subspace.full(space.m))
    if not res.dense:
        raise OrderDensityFailed("i(X) is not order dense in the cover", res.witness)
    return space


# ---------------------------------------------------------------------------
# disjointness, complements, bands


def disjoint_def(space: FDSpace, x: Sequence, y: Sequence) -> bool:
    """x and y are disjoint iff {+-(x+y)}^u = {+-(x-y)}^u, computed inside X."""
    x, y = vec(x), vec(y)
    return polyhedron_equal(upper_set(space.cone, add(x, y)), upper_set(space.cone, sub(x, y)))


def disjoint_coord(space: FDSpace, x: Sequence, y: Sequence) -> bool:
    return not (support(space.embed(x)) & support(space.embed(y)))


def _union_support(space: FDSpace, S: Iterable[Sequence]) -> frozenset[int]:
    U: frozenset[int] = frozenset()
    for s in S:
        U |= support(space.embed(s))
    return U


def dcomplement(space: FDSpace, S: Iterable[Sequence]) -> Subspace:
    U = _union_support(space, S)
    return kernel_basis([space.functionals[j] for j in sorted(U)], space.n)


def cover_dcomplement(m: int, S: Iterable[Sequence]) -> Subspace:
    """Disjoint complement inside Q^m with the standard cone."""
    U: frozenset[int] = frozenset()
    for s in S:
        U |= support(s)
    return Subspace.coordinate(m, set(range(m)) - U)


def band_generated(space: FDSpace, S: Iterable[Sequence]) -> Handle:
    S = [vec(s) for s in S]
    B = dcomplement(space, dcomplement(space, S).basis)
    return Handle("X", "band", B, tuple(S))


def is_band(space: FDSpace, L: Subspace) -> bool:
    return dcomplement(space, dcomplement(space, L.basis).basis) == L


# ---------------------------------------------------------------------------
# ideals and directedness


def _positive_sum(space: FDSpace, S: Iterable[Sequence]) -> tuple:
    total = zero(space.n)
    for s in S:
        s = vec(s)
        if not space.cone.contains(s):
            raise NotPositive(f"{fmt_vec(s)} is not in the cone")
        total = add(total, s)
    return total


def ideal_polytope(space: FDSpace, S: Iterable[Sequence]) -> Polyhedron:
    """{x : -s* <= x <= s*} where s* is the sum of S."""
    s = _positive_sum(space, S)
    A, b = [], []
    for f in space.functionals:
        c = dot(f, s)
        A += [f, neg(f)]
        b += [-c, -c]
    return Polyhedron.from_h(A, b, space.n)


def ideal_generated(space: FDSpace, S: Iterable[Sequence]) -> Handle:
    """The ideal generated by positive elements, as the span of {x : +-x <= sum S}."""
    S = [vec(s) for s in S]
    P = ideal_polytope(space, S)
    return Handle("X", "ideal", Subspace(space.n, P.vertices), tuple(S))


def ideal_member(space: FDSpace, S: Iterable[Sequence], x: Sequence) -> bool:
    """Is there lambda >= 0 with lambda s* - x and lambda s* + x both in K?"""
    s = _positive_sum(space, S)
    x = vec(x)
    A, b = [], []
    for f in space.functionals:
        fs, fx = dot(f, s), dot(f, x)
        # -(lambda f(s) - f(x)) <= 0 and -(lambda f(s) + f(x)) <= 0
        A += [(-fs,), (-fs,)]
        b += [-fx, fx]
    return solve_lp([0], A, b, nonneg=[0]).feasible


def is_directed(space: FDSpace, L: Subspace) -> bool:
    """L = (L & K) - (L & K), via the extremal rays of L & K."""
    if L.is_zero():
        return True
    B = L.basis
    rows = [tuple(dot(f, b) for b in B) for f in space.cone.facets]
    C = PolyCone.from_inequalities(rows, L.dim)
    rays = [tuple(sum((c * b[j] for c, b in zip(r, B)), Fraction(0)) for j in range(space.n)) for r in C.rays]
    return Subspace(space.n, rays) == L


def restrict(space: FDSpace, J: Subspace) -> Subspace:
    """[J]i = {x : i(x) in J}."""
    return preimage(space.matrix, J, space.n)


def extension_ideal(space: FDSpace, S: Iterable[Sequence]) -> Handle:
    S = [vec(s) for s in S]
    s = _positive_sum(space, S)
    J = Subspace.coordinate(space.m, support(space.embed(s)))
    if restrict(space, J) != ideal_generated(space, S).subspace:
        raise ArithmeticError("extension ideal does not restrict to the generated ideal")
    return Handle("Y", "ideal", J, tuple(space.embed(x) for x in S))


def extension_band(space: FDSpace, S: Iterable[Sequence]) -> tuple[Handle, bool]:
    """Cover band generated by i(S), and whether it restricts to the band of S."""
    S = [vec(s) for s in S]
    images = [space.embed(s) for s in S]
    J = cover_dcomplement(space.m, cover_dcomplement(space.m, images).basis)
    ok = restrict(space, J) == band_generated(space, S).subspace
    return Handle("Y", "band", J, tuple(images)), ok


# ---------------------------------------------------------------------------
# majorizing and order density in the cover


def _check_coordinate(L: Subspace, J: Subspace) -> None:
    if not J.is_coordinate():
        raise ValueError("J must be a coordinate subspace")
    if not L <= J:
        raise ValueError("L must be contained in J")


def _lp_above(L: Subspace, y: Sequence, objectives: Sequence[Sequence]) -> list | None:
    """Minimisers of each objective over {x in L : x >= y}; None if empty.

    x is written in L's basis; the feasible region is shared across objectives.
    """
    B = L.basis
    m = L.ambient
    if not B:
        # only x = 0 is available
        return [zero(m)] * len(objectives) if all(v <= 0 for v in y) else None
    A = [tuple(-b[j] for b in B) for j in range(m)]
    rhs = [-v for v in y]
    costs = [[dot(obj, b) for b in B] for obj in objectives] or [[0] * len(B)]
    results = solve_lp_many(costs, A, rhs)
    if not results[0].feasible:
        return None
    out = []
    for res in results[: len(objectives)]:
        if res.status == "unbounded":  # pragma: no cover - x >= y bounds every coordinate
            out.append(Bound.UNBOUNDED)
        else:
            out.append(tuple(sum((ck * b[j] for ck, b in zip(res.x, B)), Fraction(0)) for j in range(m)))
    return out


def inf_upper_set(space: FDSpace | None, L: Subspace, y: Sequence):
    """Componentwise F(y)_j = min{x_j : x in L, x >= y}.

    Returns ``Bound.EMPTY`` when no element of L lies above y.  ``space`` is
    accepted for symmetry with the other operations and is not consulted.
    """
    y = vec(y)
    m = L.ambient
    if len(y) != m:
        raise ValueError("dimension mismatch")
    xs = _lp_above(L, y, [unit(m, j) for j in range(m)])
    if xs is None:
        return Bound.EMPTY
    return tuple(x[j] for j, x in enumerate(xs))


def is_majorizing(space: FDSpace | None, L: Subspace, J: Subspace) -> bool:
    """J is contained in L - (standard cone): every +-e_j of J lies below L."""
    _check_coordinate(L, J)
    for j in sorted(J.support()):
        e = unit(J.ambient, j)
        for y in (e, neg(e)):
            if _lp_above(L, y, []) is None:
                return False
    return True


def is_order_dense(space: FDSpace | None, L: Subspace, J: Subspace, y: Sequence | None = None) -> DensityResult:
    """Is every y in J the infimum of the elements of L above it?

    With g(y) = F(y) - y, g is sublinear, nonnegative and invariant under
    translation by L.  Once some element of L dominates each e_j, also
    g(-e_j) = 0, so g vanishes on J as soon as it vanishes at the unit vectors.
    A failing ``y`` supplied by the caller is preferred as the witness.
    """
    _check_coordinate(L, J)
    candidates = []
    if y is not None:
        y = vec(y)
        if y not in J:
            raise ValueError("probe y must lie in J")
        candidates.append(y)
    candidates += [unit(J.ambient, j) for j in sorted(J.support())]
    for c in candidates:
        F = inf_upper_set(space, L, c)
        if F != c:
            return DensityResult(False, c, F)
    return DensityResult(True)


# ---------------------------------------------------------------------------
# pervasive and fordable


def is_pervasive(space: FDSpace) -> bool:
    """Every e_j dominates some i(x) > 0; such i(x) must be a multiple of e_j."""
    M = space.matrix
    for j in range(space.m):
        # maximise f_j(x) subject to 0 <= i(x) <= e_j
        A = [tuple(-a for a in row) for row in M] + [row for row in M]
        b = [Fraction(0)] * space.m + list(unit(space.m, j))
        res = solve_lp(neg(M[j]), A, b)
        if res.status != "optimal" or res.value >= 0:
            return False
    return True


def is_fordable(space: FDSpace) -> bool:
    """For every y >= 0 in the cover, {y}^d = i(S)^d for some S in X.

    {y}^d is fixed by supp(y), and i(S)^d by the union of the supports of i(S).
    So every subset U of coordinates must be the union of the supports of the
    elements of i(X) that live inside U.
    """
    image = space.image()
    m = space.m
    for r in range(1, m + 1):
        for U in itertools.combinations(range(m), r):
            inside = image & Subspace.coordinate(m, U)
            if inside.support() != frozenset(U):
                return False
    return True


# ---------------------------------------------------------------------------
# random spaces


def random_cone(rng: random.Random, n: int, k: int | None = None, bound: int = 4) -> PolyCone:
    """A pointed generating cone from ``k`` random integer rays in x_n > 0."""
    if k is None:
        k = rng.randint(n, n + 3)
    while True:
        gens = [tuple(rng.randint(-bound, bound) for _ in range(n - 1)) + (rng.randint(1, bound),) for _ in range(k)]
        C = PolyCone.from_generators(gens, n)
        if C.is_pointed() and C.is_generating():
            return C


def random_space(rng: random.Random, n: int) -> FDSpace:
    return build_space(random_cone(rng, n))


def random_positive(rng: random.Random, space: FDSpace, bound: int = 3) -> tuple:
    """A random nonnegative combination of the extremal rays of K."""
    out = zero(space.n)
    for r in space.cone.rays:
        c = rng.choice([0, 0, 1, 2, bound])
        if c:
            out = add(out, tuple(c * x for x in r))
    return out
