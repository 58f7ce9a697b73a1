import random
from fractions import Fraction as F

import pytest

from oracles import dd_fm_discrepancies, h_subset
from rieszcover.cone import (
    NotGenerating,
    NotPointed,
    PolyCone,
    Polyhedron,
    dd_convert,
    dd_convert_inv,
    dual_cone,
    extremal_rays,
    polyhedron_equal,
    upper_set,
)
from rieszcover.exact.rational import add, primitive, sub
from rieszcover.fdspace import random_cone

V1, V2, V3, V4 = (1, 0, 1), (0, 1, 1), (-1, 0, 1), (0, -1, 1)
F_PAPER = [(-1, -1, 1), (1, -1, 1), (1, 1, 1), (-1, 1, 1)]


@pytest.fixture
def k4():
    return PolyCone.from_generators([V1, V2, V3, V4], 3)


def as_set(vs):
    return sorted(primitive(v) for v in vs)


def test_quadrant_h_to_v():
    assert as_set(dd_convert([(1, 0), (0, 1)], 2)) == [(0, 1), (1, 0)]


def test_k4_v_to_h_gives_the_four_functionals(k4):
    assert as_set(dd_convert_inv([V1, V2, V3, V4], 3)) == as_set(F_PAPER)
    assert as_set(k4.facets) == as_set(F_PAPER)


def test_k4_predicates(k4):
    assert k4.is_pointed() and k4.is_generating()
    assert k4.contains(add(V1, V2))
    assert not k4.contains((1, 0, 0))
    assert k4.leq(V3, add(V3, V1))


def test_half_plane_is_not_pointed():
    H = PolyCone.from_inequalities([(0, 1)], 2)
    assert not H.is_pointed()
    assert H.is_generating()
    with pytest.raises(NotPointed):
        extremal_rays(H)


def test_ray_is_not_generating():
    C = PolyCone.from_generators([(1, 1)], 2)
    assert not C.is_generating()
    with pytest.raises(NotGenerating):
        upper_set(C, (0, 0))


def test_empty_inputs():
    assert PolyCone.from_inequalities([], 2).lineality.dim == 2
    assert PolyCone.from_generators([], 2).rays == ()


def test_dual_of_standard_is_standard():
    S = PolyCone.standard(3)
    assert dual_cone(S) == S
    assert extremal_rays(PolyCone.standard(4)) == ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))


def test_dual_of_k4(k4):
    assert as_set(extremal_rays(dual_cone(k4))) == as_set(F_PAPER)


def test_extremal_rays_drop_redundant_generators():
    rng = random.Random(5)
    extreme = [(1, 0, 0, 1), (0, 1, 0, 1), (0, 0, 1, 1), (1, 1, 1, 1)]
    base = PolyCone.from_generators(extreme, 4)
    gens = list(extreme)
    for _ in range(6):
        w = [rng.randint(0, 3) for _ in extreme]
        if any(w):
            gens.append(tuple(sum(c * r[i] for c, r in zip(w, extreme)) for i in range(4)))
    rng.shuffle(gens)
    C = PolyCone.from_generators(gens, 4)
    assert len(gens) == 10 and C == base
    assert as_set(extremal_rays(C)) == as_set(extreme)


def test_removing_any_extremal_ray_shrinks_the_cone(k4):
    for r in k4.rays:
        rest = [s for s in k4.rays if s != r]
        assert not PolyCone.from_generators(rest, 3).contains(r)


def test_rays_are_primitive_integer_vectors():
    C = PolyCone.from_generators([(F(1, 2), 0, F(1, 2)), (0, 2, 2), (-3, 0, 3), (0, -1, 1)], 3)
    for r in C.rays:
        assert all(x.denominator == 1 for x in r)
        assert primitive(r) == r


def test_round_trip_random_cones():
    rng = random.Random(99)
    for _ in range(100):
        n = rng.randint(2, 5)
        C = random_cone(rng, n)
        H = dd_convert_inv(C.rays, n)
        assert PolyCone.from_inequalities(H, n) == C
        assert dual_cone(dual_cone(C)) == C


def test_dd_matches_fourier_motzkin_on_random_cones():
    assert dd_fm_discrepancies(seed=50, cones=50) == 0


def test_h_subset_oracle_detects_strict_inclusion(k4):
    std = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    assert h_subset(std, std, 3)
    assert not h_subset(std, k4.facets, 3)
    assert h_subset(k4.facets, [(0, 0, 1)], 3)


def test_leq_is_antisymmetric(k4):
    rng = random.Random(3)
    for _ in range(200):
        x = tuple(rng.randint(-2, 2) for _ in range(3))
        y = tuple(rng.randint(-2, 2) for _ in range(3))
        if k4.leq(x, y) and k4.leq(y, x):
            assert x == y


# -- upper sets ------------------------------------------------------------------


def test_upper_set_of_zero_is_the_cone(k4):
    P = upper_set(k4, (0, 0, 0))
    assert P.vertices == ((0, 0, 0),)
    assert P.rays == tuple(sorted(k4.rays))


def test_upper_set_standard_cone_componentwise_max():
    P = upper_set(PolyCone.standard(2), (1, -1))
    assert P.vertices == ((1, 1),)
    assert P.rays == ((0, 1), (1, 0))


def test_upper_set_symmetric_in_sign(k4):
    rng = random.Random(8)
    for _ in range(30):
        a = tuple(rng.randint(-3, 3) for _ in range(3))
        assert polyhedron_equal(upper_set(k4, a), upper_set(k4, tuple(-x for x in a)))


def test_upper_set_of_v1_matches_embedded_bounds(k4):
    # w >= +-v1 in K4  <=>  f(w) >= |f(v1)| for every functional f
    P = upper_set(k4, V1)
    for v in P.vertices:
        assert all(sum(a * b for a, b in zip(f, v)) >= abs(sum(a * b for a, b in zip(f, V1))) for f in F_PAPER)
    assert P.contains((0, 0, 2)) and not P.contains((0, 0, 1))


def test_polyhedron_equal_is_representation_independent():
    S = PolyCone.standard(2)
    P = upper_set(S, (1, 0))
    R = Polyhedron.from_h([(0, 1), (1, 0)], [0, 1], 2)
    assert polyhedron_equal(P, P)
    assert polyhedron_equal(P, R)


def test_v1_v4_are_not_disjoint(k4):
    assert not polyhedron_equal(upper_set(k4, add(V1, V4)), upper_set(k4, sub(V1, V4)))


def test_v1_v3_are_disjoint(k4):
    assert polyhedron_equal(upper_set(k4, add(V1, V3)), upper_set(k4, sub(V1, V3)))


def test_to_json_echoes_both_descriptions(k4):
    obj = k4.to_json()
    assert obj["dim"] == 3
    assert len(obj["generators"]) == 4 and len(obj["inequalities"]) == 4
