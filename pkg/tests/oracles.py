"""Independent reference implementations used only by the tests, plus the
random inputs they are compared on."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from rieszcover.exact.algebraic import SignClass
from rieszcover.exact.lp import solve_lp
from rieszcover.exact.poly import Poly
from rieszcover.exact.rational import dot, primitive, vec


def fm_cone_inequalities(gens, n):
    """H-description of cone(gens) by Fourier-Motzkin elimination.

    Starts from x = G lam, lam >= 0.  Each lam_j is removed by substitution
    when some remaining equation mentions it, otherwise by pairing the
    inequalities.  Returns rows a with a.x >= 0 (equations appear as +-a pairs).
    """
    gens = [vec(g) for g in gens]
    k = len(gens)
    # rows over (x, lam): equations a.x + b.lam = 0, inequalities a.x + b.lam >= 0
    eqs = [tuple(Fraction(int(j == i)) for j in range(n)) + tuple(-g[i] for g in gens) for i in range(n)]
    ineqs = [tuple(Fraction(0) for _ in range(n)) + tuple(Fraction(int(t == j)) for t in range(k)) for j in range(k)]

    def eliminate(row, pivot, col):
        c = row[col] / pivot[col]
        return tuple(x - c * y for x, y in zip(row, pivot))

    for j in range(k):
        col = n + j
        pivot = next((e for e in eqs if e[col] != 0), None)
        if pivot is not None:
            eqs = [eliminate(e, pivot, col) for e in eqs if e is not pivot]
            ineqs = [eliminate(r, pivot, col) for r in ineqs]
        else:
            pos = [r for r in ineqs if r[col] > 0]
            negs = [r for r in ineqs if r[col] < 0]
            keep = [r for r in ineqs if r[col] == 0]
            keep += [tuple(-q[col] * x + p[col] * y for x, y in zip(p, q)) for p in pos for q in negs]
            ineqs = keep
        ineqs = list({primitive(r) for r in ineqs if any(r)})
    rows = {primitive(r[:n]) for r in ineqs if any(r[:n])}
    for e in eqs:
        if any(e[:n]):
            rows |= {primitive(e[:n]), primitive(tuple(-x for x in e[:n]))}
    return sorted(rows)


def cone_contains_h(rows, x) -> bool:
    return all(dot(r, x) >= 0 for r in rows)


def h_subset(rows_a, rows_b, n) -> bool:
    """{x : A x >= 0} within {x : B x >= 0}, by one LP per row of B."""
    for b in rows_b:
        # look for z with A z >= 0 and b.z <= -1
        A_ub = [tuple(-v for v in a) for a in rows_a] + [tuple(b)]
        rhs = [Fraction(0)] * len(rows_a) + [Fraction(-1)]
        if solve_lp([0] * n, A_ub, rhs).feasible:
            return False
    return True


def cube_order_dense(inf_fn, L, J_coords, m) -> tuple[bool, tuple | None]:
    """Order density by checking F(y) = y at every vertex of the cube in J."""
    coords = sorted(J_coords)
    for signs in itertools.product((-1, 0, 1), repeat=len(coords)):
        y = [Fraction(0)] * m
        for j, s in zip(coords, signs):
            y[j] = Fraction(s)
        y = tuple(y)
        F = inf_fn(L, y)
        if not isinstance(F, tuple) or F != y:
            return False, y
    return True, None


def sampled_sign_class(p, lo, hi, samples: int = 1000) -> SignClass:
    """Classify p on [lo, hi] by evaluating it at ``samples`` evenly spaced points."""
    lo, hi = Fraction(lo), Fraction(hi)
    signs = set()
    for k in range(samples):
        t = lo + (hi - lo) * Fraction(k, samples - 1)
        v = p(t)
        signs.add((v > 0) - (v < 0))
    if signs == {0}:
        return SignClass.IdenticallyZero
    if signs == {1}:
        return SignClass.AllPositive
    if signs == {-1}:
        return SignClass.AllNegative
    if signs == {0, 1}:
        return SignClass.AllNonnegWithZeros
    if signs == {0, -1}:
        return SignClass.AllNonposWithZeros
    return SignClass.Mixed


def ideal_by_subsets(space, S, x) -> bool:
    """x in the ideal generated by S, via +-x <= lam * sum(T) over every nonempty subset T."""
    S = [vec(s) for s in S]
    for r in range(1, len(S) + 1):
        for T in itertools.combinations(S, r):
            s = tuple(sum(c) for c in zip(*T))
            A, b = [], []
            for f in space.functionals:
                fs, fx = dot(f, s), dot(f, x)
                A += [(-fs,), (-fs,)]
                b += [-fx, fx]
            if solve_lp([0], A, b, nonneg=[0]).feasible:
                return True
    return False


def random_generators(rng: random.Random) -> tuple[list, int]:
    """2 to 6 integer rays in dimension 2..4, last coordinate positive."""
    n = rng.randint(2, 4)
    gens = [tuple(rng.randint(-3, 3) for _ in range(n - 1)) + (rng.randint(1, 3),) for _ in range(rng.randint(n, n + 2))]
    return gens, n


def random_poly(rng: random.Random) -> Poly:
    """Generic coefficients, or factors with roots on the 1/999 grid of [-1, 1]."""
    if rng.random() < 0.5:
        return Poly([Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(rng.randint(1, 5))])
    roots = [Fraction(rng.randint(-999, 999), 999) for _ in range(rng.randint(1, 2))]
    p = Poly.from_roots(roots, lead=rng.choice([-2, -1, 1, 3]))
    if rng.random() < 0.5:
        p = p * p if p.degree <= 2 else p
    return p


def dd_fm_discrepancies(seed: int = 50, cones: int = 50) -> int:
    from rieszcover.cone import PolyCone

    rng = random.Random(seed)
    bad = 0
    for _ in range(cones):
        gens, n = random_generators(rng)
        C = PolyCone.from_generators(gens, n)
        fm = fm_cone_inequalities(gens, n)
        # same point set both ways, and FM's H-description converts back to the same cone
        ok = all(cone_contains_h(fm, r) for r in C.rays) and h_subset(fm, C.inequalities, n)
        ok = ok and PolyCone.from_inequalities(fm, n) == C
        bad += not ok
    return bad


def sturm_sampling_discrepancies(seed: int = 2024, polys: int = 100, samples: int = 1999) -> list:
    from rieszcover.exact import sturm_sign

    rng = random.Random(seed)
    out = []
    for _ in range(polys):
        p = random_poly(rng)
        got, want = sturm_sign(p, -1, 1), sampled_sign_class(p, -1, 1, samples)
        if got is not want:
            out.append((p, got, want))
    return out
