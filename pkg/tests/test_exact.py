import random
from fractions import Fraction as F
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import sturm_sampling_discrepancies
from rieszcover.exact import (
    AlgebraicNumber,
    Poly,
    Q,
    SignClass,
    Subspace,
    alg_compare,
    fmt,
    isolate_roots,
    kernel_basis,
    rank,
    rational_between,
    solve,
    solve_lp,
    solve_lp_many,
    sturm_sign,
)
from rieszcover.exact.lp import feasible_point

fracs = st.fractions(min_value=-20, max_value=20, max_denominator=12)
small_polys = st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=6), min_size=0, max_size=5).map(Poly)


def sqrt_half() -> AlgebraicNumber:
    return AlgebraicNumber(Poly([F(-1, 2), 0, 1]), 0, 1)


# -- rationals ---------------------------------------------------------------


def test_q_parses_strings_and_refuses_floats():
    assert Q("-3/6") == F(-1, 2)
    assert Q(4) == F(4)
    with pytest.raises(TypeError):
        Q(0.5)
    with pytest.raises(TypeError):
        Q(True)


def test_fmt_round_trip():
    for x in (F(0), F(7), F(-3, 4), F(10, 4)):
        assert Q(fmt(x)) == x
    assert fmt(F(6, 3)) == "2"


@given(fracs, fracs)
def test_arithmetic_stays_in_lowest_terms(a, b):
    results = [a + b, a - b, a * b] + ([a / b] if b else [])
    for r in results:
        assert r.denominator > 0
        assert gcd(r.numerator, r.denominator) == 1


# -- polynomials --------------------------------------------------------------


def test_poly_trims_leading_zeros():
    assert Poly([1, 2, 0, 0]).degree == 1
    assert Poly([0, 0]).is_zero()
    assert Poly().degree < 0


@given(small_polys, small_polys, fracs)
def test_poly_ring_laws_pointwise(p, q, x):
    assert (p + q)(x) == p(x) + q(x)
    assert (p * q)(x) == p(x) * q(x)
    assert (p - p).is_zero()


@given(small_polys, small_polys)
def test_divmod_reconstructs(p, q):
    if q.is_zero():
        return
    d, r = p.divmod(q)
    assert d * q + r == p
    assert r.is_zero() or r.degree < q.degree


def test_compose_affine():
    p = Poly([1, 2, 3])
    q = p.compose_affine(1, -2)
    for x in (F(0), F(1, 3), F(-2)):
        assert q(x) == p(1 - 2 * x)


def test_count_roots_by_sturm():
    p = Poly.from_roots([F(-1, 2), F(1, 2), 3])
    assert p.count_roots(-1, 1) == 2
    assert p.count_roots(-1, 4) == 3
    assert Poly([1, 0, 1]).count_roots(-10, 10) == 0


# -- sign classification --------------------------------------------------------


def test_sturm_sign_examples():
    t2 = Poly([F(-1, 4), 0, 1])
    assert sturm_sign(t2, F(-1, 2), F(1, 2)) is SignClass.AllNonposWithZeros
    assert sturm_sign(Poly(), -3, 5) is SignClass.IdenticallyZero
    assert sturm_sign(Poly.t(), F(1, 4), 1) is SignClass.AllPositive
    assert sturm_sign(Poly.t(), -1, 1) is SignClass.Mixed
    assert sturm_sign(Poly([0, 0, 1]), -1, 1) is SignClass.AllNonnegWithZeros
    assert sturm_sign(-Poly([1, 0, 1]), -1, 1) is SignClass.AllNegative


def test_sturm_sign_matches_sampling_oracle():
    assert sturm_sampling_discrepancies(seed=2024, polys=100, samples=1999) == []


# -- algebraic numbers -----------------------------------------------------------


def test_alg_compare_examples():
    r = sqrt_half()
    assert alg_compare(F(1, 2), r) < 0
    assert alg_compare(r, r) == 0
    assert alg_compare(F(-1, 2), F(1, 2)) < 0
    assert alg_compare(r, AlgebraicNumber(Poly([-1, 0, 2]), F(1, 2), 1)) == 0


def test_isolate_roots_examples():
    roots = isolate_roots(Poly([F(-1, 4), 0, 1]), -1, 1)
    assert [x.value for x in roots] == [F(-1, 2), F(1, 2)]
    assert isolate_roots(Poly([1, 0, 1]), -5, 5) == []
    cubic = Poly.from_roots([F(-2, 3), F(1, 5), F(7, 8)], lead=3)
    assert [x.value for x in isolate_roots(cubic, -1, 1)] == [F(-2, 3), F(1, 5), F(7, 8)]


def test_isolate_roots_includes_endpoints():
    roots = isolate_roots(Poly.from_roots([0, 1]), 0, 1)
    assert [x.value for x in roots] == [0, 1]


def test_irrational_root_is_isolated_and_refinable():
    (r,) = isolate_roots(Poly([-2, 0, 1]), 0, 2)
    assert not r.is_rational
    x = r.refined_to(F(1, 10 ** 6))
    assert x.lo ** 2 <= 2 <= x.hi ** 2
    assert abs(r.approx() - 2 ** 0.5) < 1e-9


def test_algebraic_json_round_trip():
    r = sqrt_half()
    assert alg_compare(AlgebraicNumber.from_json(r.to_json()), r) == 0
    assert AlgebraicNumber.from_json("3/4").value == F(3, 4)


@settings(max_examples=60)
@given(st.lists(st.tuples(st.integers(1, 30), st.integers(0, 4)), min_size=3, max_size=3))
def test_alg_compare_is_a_total_order(data):
    xs = []
    for d, k in data:
        # roots of t^2 - d, or rationals k/3
        xs.append(AlgebraicNumber(Poly([-d, 0, 1]), 0, d + 1) if k % 2 else AlgebraicNumber.rational(F(k, 3)))
    for a in xs:
        for b in xs:
            assert alg_compare(a, b) == -alg_compare(b, a)
            for c in xs:
                if alg_compare(a, b) <= 0 and alg_compare(b, c) <= 0:
                    assert alg_compare(a, c) <= 0


def test_rational_between():
    r = sqrt_half()
    q = rational_between(F(1, 2), r)
    assert F(1, 2) < q and alg_compare(q, r) < 0
    with pytest.raises(ValueError):
        rational_between(1, 1)


# -- linear algebra ----------------------------------------------------------------


def test_kernel_of_f4_is_span_v1_v4():
    K = kernel_basis([[-1, 1, 1]])
    assert K == Subspace(3, [(1, 0, 1), (0, -1, 1)])
    assert kernel_basis([[1, 0, 0], [0, 1, 0], [0, 0, 1]]).is_zero()


def test_random_kernel_annihilates_and_rank_nullity():
    rng = random.Random(7)
    for _ in range(50):
        rows = [[rng.randint(-3, 3) for _ in range(5)] for _ in range(3)]
        if rng.random() < 0.5:
            rows[2] = [a + b for a, b in zip(rows[0], rows[1])]
        K = kernel_basis(rows, 5)
        assert rank(rows, 5) + K.dim == 5
        for b in K.basis:
            assert all(sum(F(r) * x for r, x in zip(row, b)) == 0 for row in rows)


def test_subspace_ops_examples():
    e1, e2 = Subspace(4, [(1, 0, 0, 0)]), Subspace(4, [(0, 1, 0, 0)])
    assert (e1 & e2).is_zero()
    assert e1 + e2 == Subspace.coordinate(4, [0, 1])
    A = Subspace(4, [(1, 1, 0, 0), (0, 1, 1, 0)])
    assert not A.contains((1, 0, 1, 0))
    with pytest.raises(ValueError):
        A & Subspace.full(3)


def test_subspace_dimension_formula():
    rng = random.Random(11)
    for _ in range(40):
        A = Subspace(6, [[rng.randint(-2, 2) for _ in range(6)] for _ in range(rng.randint(0, 4))])
        B = Subspace(6, [[rng.randint(-2, 2) for _ in range(6)] for _ in range(rng.randint(0, 4))])
        assert A.dim + B.dim == (A & B).dim + (A + B).dim
        assert (A & B) <= A and A <= A + B


def test_subspace_equality_is_structural():
    assert Subspace(3, [(2, 0, 2), (0, 1, 0)]).basis == Subspace(3, [(1, 1, 1), (1, 0, 1)]).basis


def test_solve():
    assert solve([[1, 1], [1, -1]], [3, 1]) == (2, 1)
    assert solve([[1, 1], [2, 2]], [1, 3]) is None


# -- linear programming ------------------------------------------------------------


def test_lp_optimum():
    # max x + y s.t. x + 2y <= 4, 3x + y <= 6, x, y >= 0
    res = solve_lp([-1, -1], [[1, 2], [3, 1]], [4, 6], nonneg=[0, 1])
    assert res.status == "optimal"
    assert res.x == (F(8, 5), F(6, 5))
    assert res.value == F(-14, 5)


def test_lp_infeasible_has_verified_certificate():
    A, b = [[1], [-1]], [1, -2]  # x <= 1 and x >= 2
    res = solve_lp([0], A, b)
    assert res.status == "infeasible"
    assert res.certificate.verify(A, b, n=1)
    # a tampered certificate is rejected
    from rieszcover.exact.lp import FarkasCertificate

    assert not FarkasCertificate((F(1), F(0)), ()).verify(A, b, n=1)


def test_lp_unbounded_and_free_variables():
    assert solve_lp([-1], [[-1]], [0]).status == "unbounded"
    res = solve_lp([1], [[-1]], [3])  # min x s.t. x >= -3, x free
    assert res.x == (F(-3),)


def test_lp_many_shares_feasible_region():
    A, b = [[1, 1]], [2]
    res = solve_lp_many([[-1, 0], [0, -1], [1, 1]], A, b, nonneg=[0, 1])
    assert [r.value for r in res] == [-2, -2, 0]


def test_feasible_point():
    res = feasible_point([[1, 0], [0, 1]], [1, 1], [[1, 1]], [1], nonneg=[0, 1])
    assert res.feasible and sum(res.x) == 1


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(st.integers(-3, 3), min_size=2, max_size=2), min_size=1, max_size=4), st.lists(st.integers(-3, 3), min_size=4, max_size=4))
def test_lp_answers_are_self_certifying(rows, rhs):
    b = rhs[: len(rows)]
    res = solve_lp([1, 1], rows, b)
    if res.status == "infeasible":
        assert res.certificate.verify(rows, b, n=2)
    elif res.status == "optimal":
        assert all(sum(F(a) * x for a, x in zip(r, res.x)) <= bi for r, bi in zip(rows, b))
