import itertools
import random
from fractions import Fraction as F

import pytest

from oracles import cube_order_dense, ideal_by_subsets
from rieszcover import cone as cone_mod
from rieszcover import fdspace as fd
from rieszcover.cone import NotGenerating, NotPointed, PolyCone
from rieszcover.exact.linalg import Subspace
from rieszcover.exact.lp import solve_lp
from rieszcover.exact.rational import primitive, unit
from rieszcover.fixtures import K4_FUNCTIONALS, k4_space
from rieszcover.properties import fd_properties

V1, V2, V3, V4 = (1, 0, 1), (0, 1, 1), (-1, 0, 1), (0, -1, 1)


@pytest.fixture(scope="module")
def k4():
    return k4_space()


def span(*vs, n=3):
    return Subspace(n, vs)


def coords(*js, m=4):
    return Subspace.coordinate(m, js)


# -- build_space and embed -----------------------------------------------------------


def test_k4_build(k4):
    assert k4.m == 4
    assert k4.functionals == tuple(tuple(F(c) for c in f) for f in K4_FUNCTIONALS)


def test_build_without_fixed_order_uses_primitive_dual_rays():
    space = fd.build_space(PolyCone.from_generators([V1, V2, V3, V4], 3))
    assert sorted(space.functionals) == sorted(primitive(f) for f in K4_FUNCTIONALS)


def test_build_rejects_functionals_that_are_not_dual_rays():
    C = PolyCone.from_generators([V1, V2, V3, V4], 3)
    with pytest.raises(ValueError):
        fd.build_space(C, [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)])


def test_standard_cone_embeds_as_identity():
    space = fd.build_space(PolyCone.standard(3))
    assert space.m == 3
    for j in range(3):
        assert space.embed(unit(3, j)) == unit(3, j)


def test_octagonal_cone_has_eight_functionals():
    octagon = [(2, 1), (1, 2), (-1, 2), (-2, 1), (-2, -1), (-1, -2), (1, -2), (2, -1)]
    space = fd.build_space(PolyCone.from_generators([(a, b, 3) for a, b in octagon], 3))
    assert space.m == 8
    assert PolyCone.from_inequalities(space.functionals, 3) == space.cone
    assert fd.is_order_dense(space, space.image(), Subspace.full(8)).dense


def test_build_errors():
    with pytest.raises(NotPointed):
        fd.build_space(PolyCone.from_inequalities([(0, 1)], 2))
    with pytest.raises(NotGenerating):
        fd.build_space(PolyCone.from_generators([(1, 1), (2, 2)], 2))


def test_embed_examples(k4):
    assert k4.embed(V2) == (0, 0, 2, 2)
    assert primitive(k4.embed(V1)) == (0, 1, 1, 0)
    assert primitive(k4.embed(V4)) == (1, 1, 0, 0)
    assert k4.embed((0, 0, 0)) == (0, 0, 0, 0)
    with pytest.raises(ValueError):
        k4.embed((1, 2))


def test_embed_is_bipositive(k4):
    rng = random.Random(1)
    for _ in range(200):
        x = tuple(rng.randint(-3, 3) for _ in range(3))
        assert k4.cone.contains(x) == all(v >= 0 for v in k4.embed(x))


# -- disjointness --------------------------------------------------------------------


@pytest.mark.parametrize("x, y, want", [(V1, (0, 0, 0), True), (V2, V4, True), (V1, V4, False), ((2, -1, 0), (0, 0, 0), True)])
def test_disjoint_routes_agree_on_examples(k4, x, y, want):
    assert fd.disjoint_def(k4, x, y) is want
    assert fd.disjoint_coord(k4, x, y) is want


def test_dcomplement_examples(k4):
    assert fd.dcomplement(k4, [V2]) == span(V4)
    assert fd.dcomplement(k4, [(0, 0, 0)]) == Subspace.full(3)
    assert fd.dcomplement(k4, [V1, V4]).is_zero()
    images = [k4.embed(V1), k4.embed(V4)]
    assert fd.cover_dcomplement(4, images) == coords(3)


def test_band_generated_examples(k4):
    assert fd.band_generated(k4, [V2]).subspace == span(V2)
    assert fd.band_generated(k4, [V1, V4]).subspace == Subspace.full(3)
    assert fd.band_generated(k4, []).subspace.is_zero()
    assert fd.band_generated(k4, [(0, 0, 0)]).subspace.is_zero()


def test_nontrivial_k4_bands_are_lines(k4):
    for v in (V1, V2, V3, V4):
        B = fd.band_generated(k4, [v]).subspace
        assert B.dim == 1 and fd.is_band(k4, B)
    assert not fd.is_band(k4, span(V1, V4))


# -- ideals --------------------------------------------------------------------------


def test_ideal_generated_examples(k4):
    assert fd.ideal_generated(k4, [V1, V4]).subspace == span(V1, V4)
    assert fd.ideal_generated(k4, [(0, 0, 0)]).subspace.is_zero()
    assert fd.ideal_generated(k4, [(0, 0, 1)]).subspace == Subspace.full(3)
    with pytest.raises(fd.NotPositive):
        fd.ideal_generated(k4, [(1, 0, 0)])


def test_ideal_span_agrees_with_membership_lp(k4):
    I = fd.ideal_generated(k4, [V1, V4]).subspace
    rng = random.Random(4)
    for _ in range(60):
        x = tuple(rng.randint(-3, 3) for _ in range(3))
        assert I.contains(x) == fd.ideal_member(k4, [V1, V4], x)


def test_single_dominator_matches_subset_enumeration():
    rng = random.Random(12)
    for _ in range(15):
        space = fd.random_space(rng, rng.choice((2, 3)))
        S = [fd.random_positive(rng, space) for _ in range(rng.randint(1, 3))]
        for _ in range(5):
            x = tuple(rng.randint(-3, 3) for _ in range(space.n))
            assert fd.ideal_member(space, S, x) == ideal_by_subsets(space, S, x)


def test_is_directed_examples(k4):
    assert fd.is_directed(k4, span(V1, V4))
    assert fd.is_directed(k4, Subspace(3))
    assert not fd.is_directed(k4, span((1, 0, 0)))


# -- extensions and restrictions --------------------------------------------------------


def test_extension_ideal_examples(k4):
    assert fd.extension_ideal(k4, [V1, V4]).subspace == coords(0, 1, 2)
    assert fd.extension_ideal(k4, [(0, 0, 0)]).subspace.is_zero()
    assert fd.extension_ideal(k4, [(0, 0, 1)]).subspace == Subspace.full(4)


def test_extension_ideal_is_smallest(k4):
    J = fd.extension_ideal(k4, [V1, V4]).subspace
    images = [k4.embed(V1), k4.embed(V4)]
    for r in range(5):
        for U in itertools.combinations(range(4), r):
            C = coords(*U)
            if all(C.contains(i) for i in images):
                assert J <= C


def test_extension_band_examples(k4):
    band, ok = fd.extension_band(k4, [V1, V4])
    assert band.subspace == coords(0, 1, 2) and ok is False
    band, ok = fd.extension_band(k4, [V2])
    assert band.subspace == coords(2, 3) and ok is True
    band, ok = fd.extension_band(k4, [])
    assert band.subspace.is_zero() and ok is True


def test_restrict_examples(k4):
    assert fd.restrict(k4, coords(0, 1, 2)) == span(V1, V4)
    assert fd.restrict(k4, Subspace.full(4)) == Subspace.full(3)
    assert fd.restrict(k4, coords(2, 3)) == span(V2)


def test_restriction_of_coordinate_band_is_not_a_band_in_k4(k4):
    assert not fd.is_fordable(k4)
    assert not fd.is_band(k4, fd.restrict(k4, coords(0, 1, 2)))


# -- upper infima, majorizing, order density ----------------------------------------------


def test_inf_upper_set_examples(k4):
    L = k4.image(span(V1, V4))
    assert fd.inf_upper_set(k4, L, (1, 0, 1, 0)) == (1, 2, 1, 0)
    y = k4.embed(V1)
    assert fd.inf_upper_set(k4, L, y) == y
    assert fd.inf_upper_set(k4, k4.image(span(V2)), (0, 0, 0, 1)) == (0, 0, 1, 1)
    assert fd.inf_upper_set(None, Subspace(4), (1, 0, 0, 0)) is fd.Bound.EMPTY
    assert fd.inf_upper_set(None, Subspace(4), (-1, 0, 0, 0)) == (0, 0, 0, 0)


def test_inf_upper_set_dominates_its_argument(k4):
    rng = random.Random(6)
    L = k4.image(span(V1, V4))
    for _ in range(30):
        y = tuple(F(rng.randint(-3, 3)) for _ in range(4))
        Fy = fd.inf_upper_set(k4, L, y)
        if Fy is fd.Bound.EMPTY:
            assert y[3] > 0  # L lives in x_4 = 0
        else:
            assert all(a >= b for a, b in zip(Fy, y))


def test_is_majorizing_examples(k4):
    assert fd.is_majorizing(k4, k4.image(span(V1, V4)), coords(0, 1, 2))
    assert fd.is_majorizing(k4, k4.image(span(V2)), coords(2, 3))
    assert not fd.is_majorizing(None, Subspace(4), coords(0))
    with pytest.raises(ValueError):
        fd.is_majorizing(k4, k4.image(span(V2)), coords(2))


def test_is_order_dense_examples(k4):
    L = k4.image(span(V1, V4))
    res = fd.is_order_dense(k4, L, coords(0, 1, 2), (1, 0, 1, 0))
    assert not res.dense and res.witness == (1, 0, 1, 0) and res.upper == (1, 2, 1, 0)

    res = fd.is_order_dense(k4, k4.image(span(V2)), coords(2, 3), (0, 0, 0, 1))
    assert tuple(res) == (False, (0, 0, 0, 1))

    J = coords(1, 2)
    assert tuple(fd.is_order_dense(None, J, J)) == (True, None)


def test_default_witness_is_a_genuine_failure(k4):
    res = fd.is_order_dense(k4, k4.image(span(V2)), coords(2, 3))
    assert not res.dense
    assert fd.inf_upper_set(k4, k4.image(span(V2)), res.witness) != res.witness


def _random_L_J(rng, space):
    L = space.image(Subspace(space.n, [tuple(rng.randint(-2, 2) for _ in range(space.n)) for _ in range(rng.randint(0, space.n))]))
    extra = {j for j in range(space.m) if rng.random() < 0.3}
    return L, Subspace.coordinate(space.m, L.support() | extra)


def test_unit_vector_reduction_matches_cube_oracle():
    rng = random.Random(77)
    outcomes = set()
    for _ in range(40):
        space = fd.random_space(rng, rng.choice((2, 3)))
        L, J = _random_L_J(rng, space)
        if J.dim > 5:
            continue
        got = fd.is_order_dense(space, L, J).dense
        want, _ = cube_order_dense(lambda L_, y: fd.inf_upper_set(None, L_, y), L, J.support(), space.m)
        assert got == want
        outcomes.add(got)
    assert outcomes == {True, False}


def test_order_density_failure_at_construction_carries_witness():
    exc = fd.OrderDensityFailed("not dense", (1, 0))
    assert exc.witness == (1, 0) and isinstance(exc, ValueError)


# -- pervasive and fordable --------------------------------------------------------------


def test_pervasive_and_fordable_examples(k4):
    assert not fd.is_fordable(k4)
    assert not fd.is_pervasive(k4)
    S = fd.build_space(PolyCone.standard(3))
    assert fd.is_fordable(S) and fd.is_pervasive(S)


def _pervasive_by_sampling(space, rng, samples=8) -> bool:
    """Search 0 < i(x) <= y for random y > 0 by maximising sum i(x)."""
    M = space.matrix
    ys = [unit(space.m, j) for j in range(space.m)]
    ys += [tuple(F(rng.randint(1, 4), rng.randint(1, 3)) if rng.random() < 0.5 else F(0) for _ in range(space.m)) for _ in range(samples)]
    for y in ys:
        if not any(y):
            continue
        A = [tuple(-a for a in row) for row in M] + list(M)
        b = [F(0)] * space.m + list(y)
        cost = tuple(-sum(col) for col in zip(*M))
        res = solve_lp(cost, A, b)
        if res.status != "optimal" or res.value >= 0:
            return False
    return True


def test_pervasive_decider_matches_definitional_sampling():
    rng = random.Random(31)
    seen = set()
    for _ in range(30):
        space = fd.random_space(rng, rng.choice((2, 3, 4)))
        assert fd.is_pervasive(space) == _pervasive_by_sampling(space, rng)
        seen.add(fd.is_pervasive(space))
    assert True in seen and False in seen


# -- property suite and mutation ------------------------------------------------------------


def test_fd_properties_small_run_is_clean():
    tally, _ = fd_properties(seed=7, trials=10)
    assert tally.ok, tally.first


def _vertex_dropping_upper_set(C, a):
    """upper_set computed with a DD that loses one generator."""
    real = cone_mod.double_description

    def lossy(rows, n):
        lin, gens = real(rows, n)
        return lin, gens[:-1] if len(gens) > 1 else gens

    cone_mod.double_description = lossy
    try:
        return cone_mod.upper_set(C, a)
    finally:
        cone_mod.double_description = real


def test_mutated_dd_is_caught_by_the_disjointness_property(monkeypatch):
    monkeypatch.setattr(fd, "upper_set", _vertex_dropping_upper_set)
    tally, _ = fd_properties(seed=42, trials=10)
    assert tally.failed["disjoint_def <=> disjoint_coord"] > 0
    first = tally.first
    assert first["property"] == "disjoint_def <=> disjoint_coord"
    assert set(first["inputs"]) >= {"cone_rays", "x", "y"}
    assert all(isinstance(c, str) for c in first["inputs"]["x"])
