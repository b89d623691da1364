import cmath

import pytest
from hypothesis import given, settings, strategies as st

from insepsurf.algebra import INFINITY, GF2k, Poly, place_at
from insepsurf.curves import (
    ArtinSchreier,
    BudgetExceeded,
    EllipticDeuring,
    HyperellipticChar2,
    ProjectiveLine,
    class_number,
    count_points,
    curve_from_json,
    distinguished_lift_divisor,
    genus,
    hasse_weil_ok,
    places_over,
    reciprocal_roots,
    zeta_numerator,
)


def brute_plane_count(K, eq):
    """Affine solutions (x, y) of eq(x, y) == 0 over K."""
    return sum(1 for x in K.elements() for y in K.elements() if eq(x, y) == 0)


def elliptic_count(alpha, k):
    K = GF2k(k)
    a = GF2k(3).embedding(K)(alpha) if k % 3 == 0 else alpha
    m = K.mul

    def eq(x, y):
        return m(y, y) ^ m(m(a, x), y) ^ y ^ m(x, m(x, x))

    return brute_plane_count(K, eq) + 1


def test_genera():
    F8 = GF2k(3)
    assert genus(ProjectiveLine()) == 0
    assert genus(EllipticDeuring(F8(2))) == 1
    assert genus(ArtinSchreier(4)) == 3
    assert genus(ArtinSchreier(2)) == 1
    hyp = HyperellipticChar2([F8(0), F8(1)], Poly(F8, (1, 1, 1)))
    assert genus(hyp) == 1


def test_lift_divisors():
    F8 = GF2k(3)
    D = distinguished_lift_divisor(ProjectiveLine())
    assert D.degree() == 2 and [(Q.is_infinity, m) for Q, m in D.items()] == [(True, 2)]
    D = distinguished_lift_divisor(ArtinSchreier(4))
    assert D.degree() == -4 and len(D) == 1
    assert distinguished_lift_divisor(EllipticDeuring(F8(2))).degree() == 0
    assert len(distinguished_lift_divisor(EllipticDeuring(GF2k(1)(0)))) == 0


def test_places_over():
    A = ArtinSchreier(3)
    over_inf = places_over(A, INFINITY)
    assert len(over_inf) == 1 and over_inf[0].e == 2
    assert [Q.e for Q in places_over(A, place_at(GF2k(1), 1))] == [1, 1]
    # the fiber over x = 1 is z^2 + z = 1, which splits over GF(4)
    assert len(A.fiber(1, GF2k(2))) == 2
    assert A.fiber(1, GF2k(1)) == []


def test_point_counts():
    # z^2 + z = x^3 over GF(2): x = 0 gives two points, x = 1 none, plus infinity
    assert count_points(ArtinSchreier(2), 1) == 3
    assert count_points(EllipticDeuring(GF2k(1)(0)), 1) == 3
    assert count_points(ProjectiveLine(), 3) == 9


def test_elliptic_counts_match_brute_force():
    F8 = GF2k(3)
    # alpha = 1 is excluded: alpha^3 = 1 makes the cubic singular
    for alpha in (0, 2, 3, 5):
        assert count_points(EllipticDeuring(F8(alpha)), 3) == elliptic_count(alpha, 3)


def test_hyperelliptic_counts_match_brute_force():
    F8 = GF2k(3)
    hyp = HyperellipticChar2([F8(0), F8(1)], Poly(F8, (1, 1, 1)))
    m = F8.mul

    def eq(x, z):
        f = m(x, x ^ 1)
        g = m(x, x) ^ x ^ 1
        return m(z, z) ^ m(f, z) ^ m(f, g)

    # at infinity the model reduces to w^2 + w + 1, which has no roots in GF(8)
    assert count_points(hyp, 3) == brute_plane_count(F8, eq)


def test_zeta_numerators():
    assert zeta_numerator(ArtinSchreier(2), 1) == [1, 0, 2]
    assert zeta_numerator(EllipticDeuring(GF2k(1)(0)), 1) == [1, 0, 2]
    assert zeta_numerator(ProjectiveLine(), 1) == [1]
    assert zeta_numerator(ArtinSchreier(3), 1, verify=True) == [1, 0, 0, 0, 4]


@pytest.mark.parametrize("curve,k", [
    (ArtinSchreier(3), 1),
    (ArtinSchreier(4), 1),
    (EllipticDeuring(GF2k(3)(2)), 3),
])
def test_reciprocal_roots_on_circle(curve, k):
    P = zeta_numerator(curve, k, verify=True)
    q = 1 << k
    for z in reciprocal_roots(P):
        assert abs(abs(z) - q ** 0.5) < 1e-6
    assert class_number(curve, k) == sum(P) > 0


def test_budget():
    with pytest.raises(BudgetExceeded):
        zeta_numerator(ArtinSchreier(5), 4, budget=8)


def test_curve_json_roundtrip():
    F8 = GF2k(3)
    for c in (ProjectiveLine(F8), ArtinSchreier(3, F8), EllipticDeuring(F8(2)),
              HyperellipticChar2([F8(0), F8(1)], Poly(F8, (1, 1, 1)))):
        assert curve_from_json(c.to_json(), F8) == c


def test_singular_elliptic_rejected():
    with pytest.raises(ValueError):
        EllipticDeuring(GF2k(3)(1))


def test_bad_hyperelliptic():
    F4 = GF2k(2)
    with pytest.raises(ValueError):
        HyperellipticChar2([F4(1), F4(1)], Poly(F4, (1, 1, 1)))
    with pytest.raises(ValueError):
        # x^2 + x + 1 vanishes at the generator of GF(4)
        HyperellipticChar2([F4(0), F4(2)], Poly(F4, (1, 1, 1)))


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 6), st.integers(1, 4))
def test_hasse_weil_artin_schreier(h, k):
    assert hasse_weil_ok(ArtinSchreier(h), k)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([0, 2, 3, 4, 5, 6, 7]), st.sampled_from([3, 6]))
def test_hasse_weil_elliptic(alpha, k):
    assert hasse_weil_ok(EllipticDeuring(GF2k(3)(alpha)), k)


def test_e0_roots_are_purely_imaginary():
    roots = reciprocal_roots([1, 0, 2])
    assert all(abs(z.real) < 1e-12 and abs(abs(z) - cmath.sqrt(2).real) < 1e-12 for z in roots)
