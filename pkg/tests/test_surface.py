from fractions import Fraction

import pytest

from insepsurf.algebra import GF2k, RationalFunction
from insepsurf.cli import build, named
from insepsurf.curves import ProjectiveLine
from insepsurf.surface import (
    InvalidData,
    NumericalClass,
    SurfaceData,
    UnclassifiedSingularity,
    analyze,
    chi,
    chi_singular_kunneth,
    chi_singular_rr,
    curve_bundle_cohomology,
    k2,
    singular_points,
    validate,
)
from insepsurf.vectorfields import make_catalog


def data(ident):
    return build(named(ident))[0]


FAMILY = [(q, dF) for q in (2, 3, 5) for dF in (4, 8, 12)]
SCENARIOS = ["bmy", "minustwo_d4", "minustwo_d8", "vf_family_rational(1)", "vf_family_rational(2)",
             "vf_family_abelian(1)", "vf_family_abelian(2)"] + [f"picard_family({q},{d})" for q, d in FAMILY]


def test_validate():
    assert validate(SurfaceData(make_catalog("as_ddx", h=4), make_catalog("delta1")))["type"] == "additive"
    F = GF2k(1)
    x = RationalFunction.x(F)
    mult = make_catalog("pullback", F, curve=ProjectiveLine(F), scalar=x * x + x)
    with pytest.raises(InvalidData, match="mixed"):
        validate(SurfaceData(make_catalog("delta1"), mult))
    cubic = make_catalog("pullback", F, curve=ProjectiveLine(F), scalar=x ** 3)
    with pytest.raises(InvalidData, match="eigenfunction"):
        validate(SurfaceData(cubic, make_catalog("delta1")))


def test_bmy_chain():
    d = data("bmy")
    inv = singular_points(d)
    assert [(str(s.type), s.a, s.b, s.configuration) for s in inv] == [("Elliptic19_0", 4, 4, "poles")]
    assert k2(d, inv) == (16, 14)
    assert chi_singular_rr(d) == 2
    assert chi(d, inv) == 1


def test_d4_inventory():
    d = data("minustwo_d4")
    inv = singular_points(d)
    assert sorted((str(s.type), s.configuration) for s in inv) == [("D4", "poles"), ("D4", "zeros")]
    assert k2(d, inv) == (4, 4)


def test_d8_scenario():
    rep = analyze(data("minustwo_d8"))
    (s,) = rep["inventory"]
    assert (s.a, s.b, s.configuration) == (2, 4, "poles")
    assert str(s.table_type) == "D8" and str(s.type) == "E8"
    assert (rep["chi"], rep["k2_resolved"], rep["c2"]) == (1, 8, 4)
    assert rep["b"] == (1, 4, 10, 4, 1)
    assert rep["h01"].value == 4 and rep["h02"].value == 4
    assert rep["h10"].lo >= 2
    assert rep["predicates"]["hodge_index_cap"] == 9


def test_unclassified_blocks():
    d = data("bmy_genus4")
    rep = analyze(d)
    assert rep["status"] == "unclassified"
    assert rep["k2_singular"] == 24
    with pytest.raises(UnclassifiedSingularity):
        k2(d)


def test_numerical_class():
    N = NumericalClass.of(Fraction(-3, 1), 0)
    K = NumericalClass.of(-2, 2)
    assert N.dot(K) == -6
    assert NumericalClass.of(Fraction(1, 2), 2).dot(NumericalClass.of(1, 0)) == 2


def test_curve_cohomology():
    h0, h1 = curve_bundle_cohomology(-3, 0)
    assert (h0.value, h1.value) == (0, 2)
    h0, h1 = curve_bundle_cohomology(0, 2, trivial=True)
    assert (h0.value, h1.value) == (1, 2)
    h0, h1 = curve_bundle_cohomology(5, 2)
    assert (h0.value, h1.value) == (4, 0)
    h0, h1 = curve_bundle_cohomology(2, 3)
    assert not h0.is_exact and h0.lo == 0 and h0.hi == 2


@pytest.mark.parametrize("q,dF", FAMILY)
def test_chi_two_ways(q, dF):
    d = data(f"picard_family({q},{dF})")
    assert chi_singular_rr(d) == chi_singular_kunneth(d)
    assert chi(d) == 1 - q + (q - 1) * dF // 2


@pytest.mark.parametrize("ident", SCENARIOS)
def test_report_invariants(ident):
    d = data(ident)
    rep = analyze(d)
    assert 12 * rep["chi"] == rep["k2_resolved"] + rep["c2"]
    assert rep["b"][0] == rep["b"][4] == 1 and rep["b"][1] == rep["b"][3]
    assert rep["b"][2] == rep["b2_blowup_check"]
    assert rep["k2_resolved"] <= rep["k2_singular"]
    if rep["h01"].is_exact and rep["h02"].is_exact:
        assert 1 - rep["h01"].lo + rep["h02"].lo == rep["chi"]
    # Igusa: at least g(C) independent 1-forms and h01
    assert rep["h01"].lo >= d.gC and rep["h10"].lo >= d.gC
    # fibration over C^(-1): arithmetic genus g(F) + d_F/2, cusps account for all of it
    assert rep["fiber_genus_over_C"] == d.gF + d.dF // 2
    assert sum(c["genus_drop"] for c in rep["cusps_over_C"]) == rep["fiber_genus_over_C"] - d.gF
    if rep["predicates"]["frolicher_degenerates"]:
        assert rep["h01"].lo + rep["h10"].lo == rep["b"][1]


@pytest.mark.parametrize("q", [2, 3])
def test_family_monotone(q):
    values = [analyze(data(f"picard_family({q},{dF})")) for dF in (4, 8, 12, 16)]
    h01 = [r["h01"].value for r in values]
    assert h01 == sorted(set(h01)) and h01 == [q + dF // 2 for dF in (4, 8, 12, 16)]
    assert {r["b"][1] for r in values} == {2 * q}
    assert all(r["predicates"]["picard_reduced"] is False for r in values)


def test_albanese_bounds():
    rep = analyze(data("albanese_family(2,8)"))
    assert rep["h10"].lo == 2 + 8 - 1
    assert rep["h10_claimed"] == 2 + 12 - 1
    assert rep["h10"].hi >= rep["h10_claimed"]


def test_rational_vf_family():
    for n in (1, 2, 3):
        rep = analyze(data(f"vf_family_rational({n})"))
        assert rep["chi"] == 1 + n * n and rep["k2_resolved"] == 4 * (n - 1) ** 2
        p = rep["predicates"]
        assert p["frolicher_degenerates"] and p["crystalline_torsion_free"]
        assert p["slope_degenerates"] is False and p["ordinary"] is False
        assert p["unirational"] and p["has_global_vector_fields"]


def test_abelian_vf_family():
    for n in (1, 2, 3):
        rep = analyze(data(f"vf_family_abelian({n})"))
        assert rep["chi"] == 4 * (n + 1) ** 2
        assert rep["h02"].value == 1 + 4 * (n + 1) ** 2
        assert rep["predicates"]["has_global_vector_fields"] is True
        assert rep["predicates"]["uniruled"] is False


def test_bmy_hodge_interval():
    rep = analyze(data("bmy"))
    assert (rep["h01"].lo, rep["h01"].hi) == (5, 6)
    assert rep["predicates"]["bmy_violated"]
    assert rep["predicates"]["crystalline_torsion_free"] is False
