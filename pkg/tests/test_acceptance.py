"""Acceptance criteria 1-9; each test prints one PASS/FAIL line.

Run directly (``python3 tests/test_acceptance.py``) for the summary alone.
"""

import json
import random
import subprocess
import sys
import time
from fractions import Fraction

import pytest

from insepsurf.algebra import GF2k, Poly, RationalFunction
from insepsurf.arithmetic import artin_invariant_bounds, artin_tate_product, p2_kunneth, zeta_data
from insepsurf.cli import build, load_golden, named
from insepsurf.curves import EllipticDeuring, HyperellipticChar2, ProjectiveLine
from insepsurf.localres import LocalVF, classify_pair, fundamental_cycle, resolve
from insepsurf.surface import analyze, chi_singular_kunneth, chi_singular_rr
from insepsurf.vectorfields import ADDITIVE, MULTIPLICATIVE, classify_scalar, make_catalog


def report(ident):
    d, k = build(named(ident))
    return d, k, analyze(d)


def check(results, name, ok):
    results.append((name, bool(ok)))


def summarize(results):
    failed = [n for n, ok in results if not ok]
    return not failed, ("all checks hold" if not failed else "failed: " + "; ".join(failed))


def criterion_1():
    d, k, rep = report("bmy")
    r = []
    inv = rep["inventory"]
    check(r, "one singularity", len(inv) == 1)
    check(r, "elliptic (19)_0", inv and str(inv[0].type) == "Elliptic19_0")
    check(r, "(chi, K^2) = (1, 14)", (rep["chi"], rep["k2_resolved"]) == (1, 14))
    check(r, "K^2 singular = 16", rep["k2_singular"] == 16)
    check(r, "chi(O_X') = 2", rep["chi_singular"] == 2)
    return summarize(r)


def criterion_2():
    d, k, rep = report("minustwo_d4")
    p = rep["predicates"]
    r = []
    check(r, "two D4", [str(s.type) for s in rep["inventory"]] == ["D4", "D4"])
    check(r, "(chi, K^2, c2) = (1, 4, 8)", (rep["chi"], rep["k2_resolved"], rep["c2"]) == (1, 4, 8))
    check(r, "disjoint_minus2 = 6", p["disjoint_minus2"] == 6)
    check(r, "Miyaoka bound 20/9 exceeded", p["miyaoka_bound"] == Fraction(20, 9) and 6 > p["miyaoka_bound"])
    check(r, "sb_bound = 8 not reached", p["sb_bound"] == 8 and p["disjoint_minus2"] <= 8)
    return summarize(r)


def criterion_3():
    d, k, rep = report("minustwo_d8")
    p = rep["predicates"]
    r = []
    inv = rep["inventory"]
    check(r, f"one D8 (engine: {[str(s.type) for s in inv]})", len(inv) == 1 and str(inv[0].type) == "D8")
    check(r, "(chi, K^2, c2, b1, b2) = (1, 8, 4, 4, 10)",
          (rep["chi"], rep["k2_resolved"], rep["c2"], rep["b"][1], rep["b"][2]) == (1, 8, 4, 4, 10))
    check(r, f"disjoint_minus2 = 5 (got {p['disjoint_minus2']})", p["disjoint_minus2"] == 5)
    check(r, "Hodge index cap 9", p["hodge_index_cap"] == 9)
    return summarize(r)


def criterion_4():
    r = []
    for dF, h in ((4, 4), (8, 6), (16, 10)):
        d, k, rep = report(f"picard_family(2,{dF})")
        check(r, f"h01 = {h} at d_F = {dF}", rep["h01"].is_exact and rep["h01"].value == h)
        check(r, f"b1 = 4 at d_F = {dF}", rep["b"][1] == 4)
        check(r, f"Pic non-reduced at d_F = {dF}", rep["predicates"]["picard_reduced"] is False)
    return summarize(r)


def criterion_5():
    r = []
    for ab in ((1, 1), (2, 2), (4, 2), (2, 4), (4, 4)):
        res = resolve(LocalVF(*ab, "zeros"))
        check(r, f"engine = table at {ab}", res.matched and res.type == classify_pair(*ab))
    res = resolve(LocalVF(4, 4, "zeros"))
    Z, Z2, pa = fundamental_cycle(res.graph)
    check(r, "(19)_0 fundamental cycle Z^2 = -2, p_a = 1", (Z2, pa) == (-2, 1))
    return summarize(r)


def random_catalog_field(rng):
    kind = rng.choice(["delta_prime", "delta_elliptic", "as_pullback", "hyperelliptic", "delta1", "delta2"])
    k = rng.choice([2, 3, 4])
    F = GF2k(k)
    if kind == "delta1":
        return make_catalog("delta1")
    if kind == "delta2":
        return make_catalog("delta2", F)
    if kind == "delta_prime":
        n = rng.randint(1, min(3, (1 << k) // 2))
        pts = rng.sample(range(1 << k), 2 * n)
        return make_catalog("delta_prime", F, a=pts[:n], b=pts[n:])
    if kind == "delta_elliptic":
        alpha = rng.choice([0, 2, 3, 4, 5, 6, 7])
        a, b = rng.randint(0, 7), rng.randint(1, 7)
        return make_catalog("delta_elliptic", GF2k(3), alpha=alpha, a=a, b=b)
    if kind == "as_pullback":
        return make_catalog("as_pullback", F, h=rng.randint(1, 6), a=rng.sample(range(1 << k), rng.randint(0, 3)))
    F8 = GF2k(3)
    curve = HyperellipticChar2([F8(0), F8(1)], Poly(F8, (1, 1, 1)))
    num = [rng.randint(0, 7) for _ in range(rng.randint(1, 4))]
    num[-1] = num[-1] or 1
    den = [rng.randint(0, 7) for _ in range(rng.randint(0, 3))] + [rng.randint(1, 7)]
    return make_catalog("pullback", F8, curve=curve, scalar=RationalFunction(Poly(F8, num), Poly(F8, den)))


def all_reports():
    return [(ident,) + report(ident) for ident in sorted(load_golden()["scenarios"])
            if ident != "bmy_genus4"]


def criterion_6():
    r = []
    rng = random.Random(20240601)
    fields = [random_catalog_field(rng) for _ in range(250)]
    check(r, "deg = 2 - 2g on 250 random catalog fields",
          all(v.divisor.degree() == 2 - 2 * v.curve.genus() for v in fields))
    reps = all_reports()
    check(r, f"Noether on {len(reps)} reports", all(12 * rep["chi"] == rep["k2_resolved"] + rep["c2"] for *_, rep in reps))
    fam = [build(named(f"picard_family({q},{dF})"))[0] for q in (2, 3, 5) for dF in (4, 8, 12)]
    check(r, "Riemann-Roch = Kunneth on 9 family instances",
          len(fam) == 9 and all(chi_singular_rr(d) == chi_singular_kunneth(d) for d in fam))
    F2, F4 = GF2k(1), GF2k(2)
    cat = [make_catalog("delta1"), make_catalog("delta2", F4), make_catalog("delta_prime", F4, a=[0, 1], b=[2, 3]),
           make_catalog("delta_elliptic", GF2k(3), alpha=2, a=1, b=2), make_catalog("as_ddx", h=4),
           make_catalog("as_pullback", F4, h=4, a=[0])]
    check(r, "catalog fields additive", all(v.pclass == ADDITIVE for v in cat))
    x = RationalFunction.x(F2)
    check(r, "x^2 + x multiplicative", classify_scalar(x * x + x) == MULTIPLICATIVE)
    return summarize(r)


def criterion_7():
    r = []
    for ident, d, k, rep in all_reports():
        check(r, f"fiber genus {ident}", rep["fiber_genus_over_C"] == d.gF + Fraction(d.dF, 2))
        drop = sum(c["genus_drop"] for c in rep["cusps_over_C"])
        check(r, f"cusp profile {ident}", drop == rep["fiber_genus_over_C"] - d.gF)
    return summarize(r)


def criterion_8():
    r = []
    d, k, rep = report("minustwo_d8")
    a = artin_invariant_bounds(rep)
    check(r, f"4 <= sigma <= 5 (certified: {a.sigma_lo} <= sigma <= {a.sigma_hi})", (a.sigma_lo, a.sigma_hi) == (4, 5))
    at = artin_tate_product(d, rep, k)
    check(r, "Artin-Tate rhs 2^2 |tors|", (at["q"], at["exponent"]) == (2, 2))
    for ident in sorted(load_golden()["scenarios"]):
        dd, kk = build(named(ident))
        if dd.gF == 0 and kk == 1:
            check(r, f"P2 = (1-2t)^2 for {ident}", p2_kunneth(dd.C, dd.F, kk) == [1, -4, 4])
    E0 = EllipticDeuring(GF2k(1)(0))
    z = zeta_data(E0, E0, 1)
    check(r, "E0 x E0 roots of modulus 2 within 1e-9", len(z.P2) == 7 and z.max_root_deviation() < 1e-9)
    return summarize(r)


def criterion_9():
    r = []
    p = subprocess.run([sys.executable, "-m", "insepsurf", "analyze", "bmy_genus4", "--json"],
                       capture_output=True, text=True)
    check(r, "exit code 3", p.returncode == 3)
    out = json.loads(p.stdout) if p.stdout else {}
    check(r, "Unclassified(6,4) in inventory", [s["type"] for s in out.get("inventory", [])] == ["Unclassified(6,4)"])
    check(r, "K^2 singular = 24", out.get("invariants", {}).get("k2_singular", {}).get("value") == 24)
    return summarize(r)


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9]


def line(n, ok, detail, seconds):
    return f"CRITERION {n}: {'PASS' if ok else 'FAIL'} ({seconds:.2f}s) {detail}"


@pytest.mark.parametrize("n", range(1, 10))
def test_criterion(n, capsys):
    t0 = time.perf_counter()
    ok, detail = CRITERIA[n - 1]()
    dt = time.perf_counter() - t0
    with capsys.disabled():
        print("\n" + line(n, ok, detail, dt))
    assert dt <= 10
    assert ok, detail


if __name__ == "__main__":
    for n, fn in enumerate(CRITERIA, 1):
        t0 = time.perf_counter()
        ok, detail = fn()
        print(line(n, ok, detail, time.perf_counter() - t0))
