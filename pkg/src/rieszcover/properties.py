"""Seeded randomized property suites for both modules.

Every trial draws its inputs from its own ``random.Random(seed, trial)``
stream, so any single failing trial can be replayed on its own.
"""

from __future__ import annotations

import random
import time
from fractions import Fraction
from typing import Callable

from . import fdspace as fd
from .exact.linalg import Subspace
from .exact.rational import add, fmt_vec, scale
from .funcspace import (
    PPoly,
    SubspaceDescriptor,
    band_generated_descriptor,
    dcomp,
    disjoint,
    named_carrier,
    pervasive_witness,
    random_nonneg,
    random_pa,
    random_pp2,
    sample_member,
    sup_disjoint_check,
)
from .report import Report, jsonable


class Tally:
    def __init__(self):
        self.passed: dict[str, int] = {}
        self.failed: dict[str, int] = {}
        self.first: dict | None = None
        self.trial: str = ""

    def __call__(self, name: str, ok: bool, inputs: Callable[[], dict]) -> bool:
        self.passed.setdefault(name, 0)
        self.failed.setdefault(name, 0)
        if ok:
            self.passed[name] += 1
        else:
            self.failed[name] += 1
            if self.first is None:
                self.first = {"property": name, "trial": self.trial, "inputs": jsonable(inputs())}
        return ok

    @property
    def ok(self) -> bool:
        return not any(self.failed.values())

    def summary(self) -> dict:
        return {k: {"passed": self.passed[k], "failed": self.failed[k]} for k in sorted(self.passed)}


def _rng(seed: int, suite: str, trial: int) -> random.Random:
    return random.Random(f"{seed}:{suite}:{trial}")


def _run(tally: Tally, trial: Callable, seed: int, suite: str, trials: int) -> float:
    """Run the trials; an exception inside one counts as a failure of that trial."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    t0 = time.perf_counter()
    for k in range(trials):
        tally.trial = f"{seed}:{suite}:{k}"
        try:
            trial(tally, _rng(seed, suite, k))
        except Exception as exc:
            tally("trial completes", False, lambda: {"error": f"{type(exc).__name__}: {exc}"})
    return time.perf_counter() - t0


def _rand_vec(rng: random.Random, n: int, bound: int = 3) -> tuple:
    return tuple(Fraction(rng.randint(-bound, bound)) for _ in range(n))


def _combo(rng: random.Random, L: Subspace) -> tuple:
    v = tuple(Fraction(0) for _ in range(L.ambient))
    for b in L.basis:
        v = add(v, scale(rng.randint(-2, 2), b))
    return v


# ---------------------------------------------------------------------------
# finite-dimensional suite


def fd_trial(tally: Tally, rng: random.Random, pairs: int = 5) -> None:
    n = rng.choice((2, 3, 4))
    space = fd.random_space(rng, n)
    desc = lambda **kw: {"cone_rays": [fmt_vec(r) for r in space.cone.rays], **kw}  # noqa: E731

    for _ in range(pairs):
        x = _rand_vec(rng, n)
        comp = fd.dcomplement(space, [x])
        y = _combo(rng, comp) if comp.dim and rng.random() < 0.5 else _rand_vec(rng, n)
        tally("disjoint_def <=> disjoint_coord", fd.disjoint_def(space, x, y) == fd.disjoint_coord(space, x, y), lambda: desc(x=x, y=y))

    S = [_rand_vec(rng, n) for _ in range(rng.randint(1, 2))]
    d1 = fd.dcomplement(space, S)
    d3 = fd.dcomplement(space, fd.dcomplement(space, d1.basis).basis)
    tally("S^d = S^ddd", d1 == d3, lambda: desc(S=S))
    B = fd.band_generated(space, S).subspace
    tally("band idempotent", fd.band_generated(space, B.basis).subspace == B and all(B.contains(s) for s in S), lambda: desc(S=S))
    B2 = fd.band_generated(space, [_rand_vec(rng, n)]).subspace
    tally("intersection of bands is a band", fd.is_band(space, B & B2), lambda: desc(B=B, B2=B2))

    P = [fd.random_positive(rng, space) for _ in range(rng.randint(1, 3))]
    I = fd.ideal_generated(space, P).subspace
    J = fd.extension_ideal(space, P).subspace
    iX = space.image()
    tally("i(I_S) = I_i(S) & i(X)", space.image(I) == (J & iX), lambda: desc(S=P))
    tally("I_i(S) = I_i(I_S)", J == Subspace.coordinate(space.m, space.image(I).support()), lambda: desc(S=P))
    triple = (fd.is_directed(space, I), fd.is_majorizing(space, space.image(I), J), fd.restrict(space, J) == I)
    tally("directed, majorizing, restriction", triple == (True, True, True), lambda: desc(S=P, triple=list(triple)))
    members = [fd.ideal_member(space, P, b) for b in I.basis]
    tally("ideal polytope span agrees with LP membership", all(members), lambda: desc(S=P))

    L0 = Subspace(n, [_rand_vec(rng, n) for _ in range(rng.randint(0, n))])
    L = space.image(L0)
    Jc = Subspace.coordinate(space.m, L.support() | {j for j in range(space.m) if rng.random() < 0.3})
    dense = fd.is_order_dense(space, L, Jc).dense
    tally("order dense => majorizing", not dense or fd.is_majorizing(space, L, Jc), lambda: desc(L=L, J=Jc))

    perv, ford = fd.is_pervasive(space), fd.is_fordable(space)
    full = iX == Subspace.full(space.m)
    tally("pervasive <=> fordable <=> i(X) = Q^m", perv == ford == full, lambda: desc(pervasive=perv, fordable=ford))
    if ford:
        U = [j for j in range(space.m) if rng.random() < 0.5]
        R = fd.restrict(space, Subspace.coordinate(space.m, U))
        tally("fordable: restricted coordinate bands are bands", fd.is_band(space, R), lambda: desc(U=U))


def fd_properties(seed: int = 42, trials: int = 100) -> tuple[Tally, float]:
    tally = Tally()
    return tally, _run(tally, fd_trial, seed, "fd", trials)


# ---------------------------------------------------------------------------
# function-space suite

_CARRIERS = ("PP2", "PA", "X0", "Xrho", "Namioka", "X")


def func_trial(tally: Tally, rng: random.Random) -> None:
    dom = (-1, 1)
    f, g = random_pp2(rng), random_pp2(rng)
    j, m = f.join(g), f.meet(g)
    tally("join + meet = f + g", j + m == f + g, lambda: {"f": f, "g": g})
    tally("join commutes", g.join(f) == j, lambda: {"f": f, "g": g})
    tally("absorption", f.join(f.meet(g)) == f and f.meet(f.join(g)) == f, lambda: {"f": f, "g": g})
    tally("meet <= f <= join", m.leq(f) and f.leq(j), lambda: {"f": f, "g": g})

    PP2 = named_carrier("PP2")
    for _ in range(3):
        a = random_pa(rng) if rng.random() < 0.5 else random_pp2(rng)
        D = dcomp([a], PP2)
        b = sample_member(D, rng) if rng.random() < 0.5 else random_pp2(rng)
        tally("disjoint <=> |a| meet |b| = 0", disjoint(a, b) == abs(a).meet(abs(b)).is_zero(), lambda: {"a": a, "b": b})

    C = named_carrier(rng.choice(_CARRIERS), dom)
    gens = [sample_member(SubspaceDescriptor.full(C), rng) for _ in range(rng.randint(1, 2))]
    d1 = dcomp(gens, C)
    tally("M^d = M^ddd", dcomp(dcomp(d1)) == d1, lambda: {"carrier": C, "S": gens})
    h = sample_member(d1, rng)
    tally("sampled complement members are disjoint from S", all(disjoint(h, s) for s in gens), lambda: {"carrier": C, "S": gens, "h": h})

    # suprema: S >= 0, sometimes built inside a's complement
    a = abs(sample_member(SubspaceDescriptor.full(C), rng))
    Da = dcomp([a], C)
    S = [abs(sample_member(Da, rng)) if rng.random() < 0.7 else random_nonneg(rng, dom, quadratic=C.max_degree > 1) for _ in range(rng.randint(1, 3))]
    S = [s for s in S if C.contains(s)] or [PPoly.zero(dom)]
    res = sup_disjoint_check(a, S, C)
    tally("never (true, true, false)", tuple(res) != (True, True, False), lambda: {"carrier": C, "a": a, "S": S})
    tally("sup S in band of S", not res.sup_exists or res.sup_in_band, lambda: {"carrier": C, "S": S})

    f = random_nonneg(rng, dom)
    PC = named_carrier(rng.choice(("PP2", "PA", "X0", "X")), dom)
    w = pervasive_witness(PC, f)
    zero = PPoly.zero(dom)
    tally("pervasive witness 0 < g <= f", PC.contains(w) and zero.leq(w) and w.leq(f) and not w.is_zero(), lambda: {"carrier": PC, "f": f})


def func_properties(seed: int = 42, trials: int = 200) -> tuple[Tally, float]:
    tally = Tally()
    return tally, _run(tally, func_trial, seed, "func", trials)


def properties(seed: int = 42, trials: int = 100, func_trials: int | None = None) -> Report:
    """Both suites; the function suite runs twice as many trials by default."""
    ft = 2 * trials if func_trials is None else func_trials
    t_fd, _ = fd_properties(seed, trials)
    t_fn, _ = func_properties(seed, ft)
    result = {"fdspace": t_fd.summary(), "funcspace": t_fn.summary()}
    witness = t_fd.first or t_fn.first
    return Report("properties", {"seed": seed, "trials": trials, "func_trials": ft}, result, witness, t_fd.ok and t_fn.ok)
