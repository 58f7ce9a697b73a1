"""Exact two-phase simplex over the rationals.

Problems are stated as::

    minimize    c . x
    subject to  A_ub x <= b_ub
                A_eq x == b_eq
                x_j >= 0  for j in ``nonneg``   (other variables are free)

Bland's rule is used throughout, so the method terminates on degenerate
problems.  Infeasible problems come back with a Farkas certificate that can be
checked without trusting the solver.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .linalg import solve
from .rational import Q, dot, fmt, vec


@dataclass(frozen=True)
class FarkasCertificate:
    """Multipliers proving that a system has no solution.

    With ``u >= 0`` on the inequality rows and free ``w`` on the equality rows,
    the combination ``g = u A_ub + w A_eq`` has ``g_j = 0`` on free variables,
    ``g_j >= 0`` on nonnegative ones, while ``u b_ub + w b_eq < 0``.  Any
    feasible x would give ``0 <= g x <= u b_ub + w b_eq < 0``.
    """

    ub: tuple
    eq: tuple

    def verify(self, A_ub=(), b_ub=(), A_eq=(), b_eq=(), nonneg=(), n=None) -> bool:
        A_ub = [vec(r) for r in A_ub]
        A_eq = [vec(r) for r in A_eq]
        if n is None:
            n = len((A_ub + A_eq)[0])
        if len(self.ub) != len(A_ub) or len(self.eq) != len(A_eq):
            return False
        if any(u < 0 for u in self.ub):
            return False
        g = [Fraction(0)] * n
        for u, row in zip(self.ub, A_ub):
            for j in range(n):
                g[j] += u * row[j]
        for w, row in zip(self.eq, A_eq):
            for j in range(n):
                g[j] += w * row[j]
        nn = set(nonneg)
        for j in range(n):
            if j in nn:
                if g[j] < 0:
                    return False
            elif g[j] != 0:
                return False
        rhs = dot(self.ub, vec(b_ub)) + dot(self.eq, vec(b_eq))
        return rhs < 0

    def to_json(self) -> dict:
        return {"ub": [fmt(x) for x in self.ub], "eq": [fmt(x) for x in self.eq]}


@dataclass(frozen=True)
class LPResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    x: tuple | None = None
    value: Fraction | None = None
    certificate: FarkasCertificate | None = field(default=None, compare=False)

    @property
    def feasible(self) -> bool:
        return self.status != "infeasible"


class _Tableau:
    def __init__(self, rows, rhs, basis):
        self.T = rows
        self.rhs = rhs
        self.basis = basis
        self.reduced = None

    def pivot(self, r: int, c: int) -> None:
        T, rhs = self.T, self.rhs
        p = T[r][c]
        Tr = T[r] = [x / p if x else x for x in T[r]]
        rhs[r] /= p
        for i in range(len(T)):
            f = T[i][c]
            if i != r and f:
                T[i] = [a - f * b if b else a for a, b in zip(T[i], Tr)]
                rhs[i] -= f * rhs[r]
        red = self.reduced
        if red is not None and red[c]:
            f = red[c]
            self.reduced = [a - f * b if b else a for a, b in zip(red, Tr)]
        self.basis[r] = c

    def run(self, cost: Sequence[Fraction], allowed: set[int]) -> str:
        T, rhs, basis = self.T, self.rhs, self.basis
        # reduced costs c_j - c_B B^-1 A_j, kept current by pivot()
        red = list(cost)
        for i, b in enumerate(basis):
            cb = cost[b]
            if cb:
                red = [a - cb * x if x else a for a, x in zip(red, T[i])]
        self.reduced = red
        order = sorted(allowed)
        try:
            while True:
                red = self.reduced
                entering = next((j for j in order if red[j] < 0 and j not in basis), None)
                if entering is None:
                    return "optimal"
                best = None
                for i in range(len(T)):
                    a = T[i][entering]
                    if a > 0:
                        key = (rhs[i] / a, basis[i])
                        if best is None or key < best[0]:
                            best = (key, i)
                if best is None:
                    return "unbounded"
                self.pivot(best[1], entering)
        finally:
            self.reduced = None


def solve_lp(c, A_ub=(), b_ub=(), A_eq=(), b_eq=(), nonneg=()) -> LPResult:
    """Solve a small LP exactly.  See the module docstring for the form."""
    return solve_lp_many([c], A_ub, b_ub, A_eq, b_eq, nonneg)[0]


def solve_lp_many(costs, A_ub=(), b_ub=(), A_eq=(), b_eq=(), nonneg=()) -> list[LPResult]:
    """Several objectives over one feasible region; phase 1 runs once."""
    costs = [vec(c) for c in costs]
    n = len(costs[0])
    A_ub = [vec(r) for r in A_ub]
    A_eq = [vec(r) for r in A_eq]
    b_ub = vec(b_ub)
    b_eq = vec(b_eq)
    nn = set(nonneg)
    for r in A_ub + A_eq:
        if len(r) != n:
            raise ValueError("constraint row length does not match the objective")

    # map original variables to standard-form columns
    cols: list[tuple[int, int]] = []  # (original index, sign)
    for j in range(n):
        cols.append((j, 1))
        if j not in nn:
            cols.append((j, -1))
    n_x = len(cols)
    m_ub, m_eq = len(A_ub), len(A_eq)
    m = m_ub + m_eq
    n_std = n_x + m_ub  # plus slacks

    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    sigma: list[int] = []
    for i, (row, b) in enumerate(list(zip(A_ub, b_ub)) + list(zip(A_eq, b_eq))):
        r = [row[j] * s for (j, s) in cols] + [Fraction(0)] * m_ub
        if i < m_ub:
            r[n_x + i] = Fraction(1)
        sg = -1 if b < 0 else 1
        sigma.append(sg)
        rows.append([sg * x for x in r])
        rhs.append(sg * b)

    if m == 0:
        # unconstrained apart from signs
        out = []
        for c in costs:
            if any(c[j] != 0 for j in range(n) if j not in nn) or any(c[j] < 0 for j in nn):
                out.append(LPResult("unbounded"))
            else:
                out.append(LPResult("optimal", tuple(Fraction(0) for _ in range(n)), Fraction(0)))
        return out

    full = [r + [Fraction(1) if k == i else Fraction(0) for k in range(m)] for i, r in enumerate(rows)]
    original = [list(r) for r in full]
    tab = _Tableau([list(r) for r in full], list(rhs), [n_std + i for i in range(m)])
    cost1 = [Fraction(0)] * n_std + [Fraction(1)] * m
    tab.run(cost1, set(range(n_std + m)))
    phase1 = sum((rhs_i for rhs_i, b in zip(tab.rhs, tab.basis) if b >= n_std), Fraction(0))
    if phase1 > 0:
        cert = _farkas(original, tab.basis, cost1, sigma, m_ub, m_eq)
        if not cert.verify(A_ub, b_ub, A_eq, b_eq, nn, n):
            raise ArithmeticError("internal error: Farkas certificate failed verification")
        return [LPResult("infeasible", certificate=cert)] * len(costs)

    # drive artificials out of the basis, dropping redundant rows
    i = 0
    while i < len(tab.T):
        if tab.basis[i] >= n_std:
            j = next((j for j in range(n_std) if tab.T[i][j] != 0), None)
            if j is None:
                del tab.T[i], tab.rhs[i], tab.basis[i]
                continue
            tab.pivot(i, j)
        i += 1

    out = []
    for c in costs:
        work = _Tableau([list(r) for r in tab.T], list(tab.rhs), list(tab.basis))
        cost2 = [c[j] * s for (j, s) in cols] + [Fraction(0)] * m_ub + [Fraction(0)] * m
        if work.run(cost2, set(range(n_std))) == "unbounded":
            out.append(LPResult("unbounded"))
            continue
        xs = [Fraction(0)] * (n_std + m)
        for r, b in enumerate(work.basis):
            xs[b] = work.rhs[r]
        x = [Fraction(0)] * n
        for k, (j, s) in enumerate(cols):
            x[j] += s * xs[k]
        x = tuple(x)
        out.append(LPResult("optimal", x, dot(c, x)))
    return out


def _farkas(original, basis, cost, sigma, m_ub, m_eq) -> FarkasCertificate:
    # duals y solve B^T y = c_B; z = -y satisfies z A >= 0, z b < 0
    BT = [[original[i][b] for i in range(len(original))] for b in basis]
    cb = [cost[b] for b in basis]
    y = solve(BT, cb)
    if y is None:
        raise ArithmeticError("internal error: singular basis at phase-1 optimum")
    u = [-yi * s for yi, s in zip(y, sigma)]
    return FarkasCertificate(tuple(u[:m_ub]), tuple(u[m_ub:]))


def feasible_point(A_ub=(), b_ub=(), A_eq=(), b_eq=(), nonneg=(), n=None) -> LPResult:
    """Feasibility problem (zero objective)."""
    if n is None:
        rows = list(A_ub) + list(A_eq)
        n = len(rows[0])
    return solve_lp([0] * n, A_ub, b_ub, A_eq, b_eq, nonneg)
