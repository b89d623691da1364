"""Quotients of C x F by delta_C + delta_F and their invariants.

The singular quotient X' = (C x F)/delta is a flat double cover of the
Frobenius twist of S = C x F.  Its structure sheaf is an extension of the
line bundle N^vee by O_S, and N^vee = A [x] B with A on F, B on C satisfying

    A^2 = O_F(-(delta_F)_0),    B^2 = O_C(-(delta_C)_0).

Everything below is computed from this decomposition, the divisors of the two
curve fields, and the local resolution of the isolated singular points.  The
smooth surface X is the minimal resolution of X'.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from . import localres
from .localres import LocalVF, classify_pair, fundamental_cycle, resolve

__all__ = [
    "SurfaceData",
    "InvalidData",
    "HodgeValue",
    "Singularity",
    "NumericalClass",
    "validate",
    "singular_points",
    "k2",
    "chi",
    "hodge",
    "betti_and_fibers",
    "predicates",
    "analyze",
    "curve_bundle_cohomology",
]


class InvalidData(ValueError):
    """The construction data violate the common p-closure type condition."""


@dataclass
class SurfaceData:
    vC: object
    vF: object

    @property
    def C(self):
        return self.vC.curve

    @property
    def F(self):
        return self.vF.curve

    @property
    def field(self):
        return self.vC.curve.field

    @property
    def gC(self):
        return self.C.genus()

    @property
    def gF(self):
        return self.F.genus()

    @property
    def dC(self):
        return self.vC.pole_degree

    @property
    def dF(self):
        return self.vF.pole_degree


# --- values with provenance -------------------------------------------------------

@dataclass(frozen=True)
class HodgeValue:
    """An exact integer or a closed interval; ``hi=None`` means no upper bound known."""

    lo: int
    hi: int | None
    by: str = ""
    hypothesis: str = ""

    @classmethod
    def exact(cls, n, by="", hypothesis=""):
        return cls(n, n, by, hypothesis)

    @property
    def is_exact(self):
        return self.hi is not None and self.lo == self.hi

    @property
    def value(self):
        return self.lo if self.is_exact else None

    def __contains__(self, n):
        return self.lo <= n and (self.hi is None or n <= self.hi)

    def __str__(self):
        if self.is_exact:
            return str(self.lo)
        return f"[{self.lo}, {'inf' if self.hi is None else self.hi}]"

    def to_json(self):
        if self.is_exact:
            return {"value": self.lo, "status": "exact", "by": self.by}
        return {"value": [self.lo, self.hi], "status": "interval", "by": self.by,
                **({"failed_hypothesis": self.hypothesis} if self.hypothesis else {})}


@dataclass(frozen=True)
class NumericalClass:
    """a*C + b*F stored doubled, with C^2 = F^2 = 0 and C.F = 1.

    Here C is the class of C x {pt} and F the class of {pt} x F.
    """

    twice_c: int
    twice_f: int

    @classmethod
    def of(cls, c, f):
        return cls(int(2 * Fraction(c)), int(2 * Fraction(f)))

    def dot(self, other):
        v = Fraction(self.twice_c * other.twice_f + self.twice_f * other.twice_c, 4)
        if v.denominator != 1:
            raise ArithmeticError("non-integral intersection number")
        return int(v)

    def __sub__(self, other):
        return NumericalClass(self.twice_c - other.twice_c, self.twice_f - other.twice_f)


# --- validation and singularities ------------------------------------------------

JACOBSON_NOTE = ("delta_C and delta_F commute and have the same p-closure type, "
                 "so (delta_C + delta_F)^[2] = delta_C^[2] + delta_F^[2] is the same multiple of the sum")


def validate(d: SurfaceData):
    """Accept iff both fields are additive or both multiplicative."""
    if d.C.field is not d.F.field:
        raise InvalidData("curves are defined over different fields")
    tC, tF = d.vC.pclass, d.vF.pclass
    for t, side in ((tC, "delta_C"), (tF, "delta_F")):
        if t.kind == "general":
            raise InvalidData(f"{side} is p-closed with eigenfunction {t.eigenfunction!r}, neither additive nor multiplicative")
    if tC.kind != tF.kind:
        raise InvalidData(f"mixed types: delta_C is {tC.kind}, delta_F is {tF.kind}")
    return {"ok": True, "type": tC.kind, "note": JACOBSON_NOTE}


@dataclass
class Singularity:
    pC: object
    pF: object
    a: int
    b: int
    configuration: str
    type: localres.SingularityType
    table_type: localres.SingularityType
    engine_type: localres.SingularityType | None
    blowups: int
    graph: object = dc_field(repr=False, default=None)
    residue_degrees: tuple = (1, 1)

    def to_json(self):
        out = {
            "point_C": self.pC.to_json(),
            "point_F": self.pF.to_json(),
            "orders": [self.a, self.b],
            "configuration": self.configuration,
            "type": str(self.type),
            "blowups": self.blowups,
            "residue_degrees": list(self.residue_degrees),
        }
        if self.table_type != self.type:
            out["order_table_type"] = str(self.table_type)
        return out


def _model_unit(order, configuration, ptype):
    """A unit series giving a local field of the requested p-closure type."""
    if ptype == "multiplicative" and configuration == "poles":
        u = [0] * (order + 2)
        u[0] = 1
        u[order + 1] = 1
        return tuple(u)
    return (1,)


@functools.lru_cache(maxsize=None)
def _engine(a, b, configuration, ptype, precision=24):
    v = LocalVF(a, b, configuration, _model_unit(a, configuration, ptype), _model_unit(b, configuration, ptype),
                precision=precision)
    try:
        return resolve(v)
    except (localres.ResolutionError, ValueError):
        return None


def singular_points(d: SurfaceData, precision=24):
    """Common zeros and common poles of the two curve fields, classified.

    Each point is resolved by the blow-up engine on a model field with the
    same orders and p-closure type; the engine's graph overrides the order
    table whenever it matches a catalog graph.
    """
    ptype = d.vC.pclass.kind
    out = []
    DC, DF = d.vC.divisor, d.vF.divisor
    for conf, sel in (("zeros", lambda m: m > 0), ("poles", lambda m: m < 0)):
        ptsC = [(P, abs(m)) for P, m in DC.items() if sel(m)]
        ptsF = [(Q, abs(m)) for Q, m in DF.items() if sel(m)]
        for P, a in ptsC:
            for Q, b in ptsF:
                res = _engine(a, b, conf, ptype, precision)
                t = classify_pair(a, b, conf)
                engine_type = res.type if res is not None else None
                if res is not None and res.matched:
                    t = res.type
                out.append(Singularity(
                    P, Q, a, b, conf, t, classify_pair(a, b), engine_type,
                    res.blowups if res is not None else 0,
                    res.graph if res is not None else None,
                    (P.base.degree, Q.base.degree),
                ))
    return out


# --- canonical class and chi -----------------------------------------------------------

def _require_classified(inv):
    bad = [s for s in inv if not s.type.classified]
    if bad:
        raise UnclassifiedSingularity(bad)


class UnclassifiedSingularity(RuntimeError):
    def __init__(self, sings):
        self.singularities = sings
        super().__init__("unclassified singularity: " + ", ".join(str(s.type) for s in sings))


def k2_singular(d: SurfaceData):
    return (2 * d.gC - 2 + d.dC) * (2 * d.gF - 2 + d.dF)


def _elliptic_corrections(inv):
    out = []
    for s in inv:
        if s.type.elliptic:
            Z, Z2, pa = fundamental_cycle(s.graph if s.graph is not None else localres.catalog_graph("Elliptic19_0"))
            out.append(Z2)
    return out


def k2(d: SurfaceData, inv=None):
    """(K^2 of X', K^2 of the minimal resolution X)."""
    inv = singular_points(d) if inv is None else inv
    _require_classified(inv)
    ks = k2_singular(d)
    return ks, ks + sum(_elliptic_corrections(inv))


def n_classes(d: SurfaceData):
    """Numerical classes of N^vee and K_S."""
    degA = d.gF - 1 - Fraction(d.dF, 2)
    degB = d.gC - 1 - Fraction(d.dC, 2)
    N = NumericalClass.of(degA, degB)
    K = NumericalClass.of(2 * d.gF - 2, 2 * d.gC - 2)
    return N, K


def chi_OS(d):
    return (1 - d.gC) * (1 - d.gF)


def chi_singular_rr(d: SurfaceData):
    """chi(O_X') = chi(O_S) + chi(N^vee) with Riemann-Roch on S."""
    N, K = n_classes(d)
    twice = N.dot(N) - K.dot(N)
    if twice % 2:
        raise ArithmeticError("Riemann-Roch gave a half-integer")
    return 2 * chi_OS(d) + twice // 2


def chi_singular_kunneth(d: SurfaceData):
    """chi(O_X') = chi(O_S) + chi(A) chi(B) with Riemann-Roch on each curve."""
    degA = Fraction(d.gF - 1) - Fraction(d.dF, 2)
    degB = Fraction(d.gC - 1) - Fraction(d.dC, 2)
    chiA = degA + 1 - d.gF
    chiB = degB + 1 - d.gC
    v = chi_OS(d) + chiA * chiB
    if v.denominator != 1:
        raise ArithmeticError("odd pole degree: N^vee is not a line bundle")
    return int(v)


def chi(d: SurfaceData, inv=None):
    inv = singular_points(d) if inv is None else inv
    _require_classified(inv)
    n_ell = sum(1 for s in inv if s.type.elliptic)
    return chi_singular_rr(d) - n_ell


# --- cohomology of line bundles on curves ------------------------------------------------

def curve_bundle_cohomology(deg, g, trivial=None):
    """(h0, h1) as HodgeValues for a line bundle of degree ``deg`` on a genus-g curve.

    ``trivial`` says whether a degree-0 bundle is known to be (non)trivial.
    """
    if deg < 0:
        return HodgeValue.exact(0, "negative degree"), HodgeValue.exact(g - 1 - deg, "Riemann-Roch")
    if deg > 2 * g - 2:
        return HodgeValue.exact(deg + 1 - g, "Riemann-Roch"), HodgeValue.exact(0, "Serre duality")
    if deg == 0 and trivial is True:
        return HodgeValue.exact(1, "trivial bundle"), HodgeValue.exact(g, "trivial bundle")
    if deg == 0 and trivial is False:
        return HodgeValue.exact(0, "nontrivial degree 0"), HodgeValue.exact(g - 1, "Riemann-Roch")
    lo = max(0, deg + 1 - g)
    hi = deg // 2 + 1
    if deg == 0:
        hi = 1
    return (HodgeValue(lo, hi, "Clifford bound", "bundle class unknown"),
            HodgeValue(lo - (deg + 1 - g), hi - (deg + 1 - g), "Clifford bound", "bundle class unknown"))


def _square_root_trivial(curve, zero_degree):
    """Is the square root of O(-(delta)_0) known to be trivial, nontrivial or unknown?"""
    if zero_degree != 0:
        return None
    # a 2-torsion bundle on a curve of 2-rank zero is trivial
    if curve.two_rank() == 0:
        return True
    return None


def _iv(h):
    return (h.lo, h.hi)


def _mul(a, b):
    lo = a[0] * b[0]
    hi = None if (a[1] is None or b[1] is None) else a[1] * b[1]
    return (lo, hi)


def _add(a, b):
    return (a[0] + b[0], None if (a[1] is None or b[1] is None) else a[1] + b[1])


def kunneth(hA, hB):
    """(h0, h1, h2) intervals of A [x] B from curve cohomology (h0, h1) pairs."""
    a0, a1 = _iv(hA[0]), _iv(hA[1])
    b0, b1 = _iv(hB[0]), _iv(hB[1])
    return _mul(a0, b0), _add(_mul(a0, b1), _mul(a1, b0)), _mul(a1, b1)


def nvee_cohomology(d: SurfaceData):
    degA = d.gF - 1 - Fraction(d.dF, 2)
    degB = d.gC - 1 - Fraction(d.dC, 2)
    if degA.denominator != 1 or degB.denominator != 1:
        raise ArithmeticError("odd pole degree")
    hA = curve_bundle_cohomology(int(degA), d.gF, _square_root_trivial(d.F, d.vF.zero_degree))
    hB = curve_bundle_cohomology(int(degB), d.gC, _square_root_trivial(d.C, d.vC.zero_degree))
    return kunneth(hA, hB), hA, hB


def nminus2_cohomology(d: SurfaceData):
    """Cohomology of N^(-2) = O_F(-(delta_F)_0) [x] O_C(-(delta_C)_0)."""
    zF, zC = d.vF.zero_degree, d.vC.zero_degree
    hA = curve_bundle_cohomology(-zF, d.gF, True if zF == 0 else None)
    hB = curve_bundle_cohomology(-zC, d.gC, True if zC == 0 else None)
    return kunneth(hA, hB)


# --- Hodge numbers -------------------------------------------------------------------

@dataclass
class HodgeData:
    h01: HodgeValue
    h02: HodgeValue
    h10: HodgeValue
    h01_singular: tuple
    h02_singular: tuple
    h10_claimed: int | None = None
    nvee: tuple = ()


def hodge(d: SurfaceData, inv=None, chi_value=None):
    inv = singular_points(d) if inv is None else inv
    _require_classified(inv)
    chi_x = chi(d, inv) if chi_value is None else chi_value
    n_ell = sum(1 for s in inv if s.type.elliptic)
    rational = n_ell == 0
    (n0, n1, n2), _, _ = nvee_cohomology(d)
    h1S, h2S = d.gC + d.gF, d.gC * d.gF
    # 0 -> O_S -> pi_* O_X' -> N^vee -> 0 and H^0(O_X') = k
    r1_hi = None if n1[1] is None else min(n1[1], h2S)
    r1_hi = h2S if r1_hi is None else r1_hi
    h01s = (h1S - (n0[1] if n0[1] is not None else n0[0]) + n1[0] - r1_hi,
            None if (n1[1] is None) else h1S - n0[0] + n1[1])
    h02s = (h2S - r1_hi + n2[0], None if n2[1] is None else h2S + n2[1])
    # elliptic points: 0 -> H^1(O_X') -> H^1(O_X) -> H^0(R^1) -> H^2(O_X') -> H^2(O_X) -> 0
    lo01, hi01 = h01s[0], None if h01s[1] is None else h01s[1] + n_ell
    lo02, hi02 = max(0, h02s[0] - n_ell), h02s[1]
    b1 = 2 * (d.gC + d.gF)
    lo01 = max(lo01, b1 // 2)
    # couple through chi = 1 - h01 + h02
    lo02 = max(lo02, chi_x - 1 + lo01)
    if hi01 is not None:
        hi02 = chi_x - 1 + hi01 if hi02 is None else min(hi02, chi_x - 1 + hi01)
    if hi02 is not None:
        hi01 = hi02 + 1 - chi_x if hi01 is None else min(hi01, hi02 + 1 - chi_x)
    lo01 = max(lo01, lo02 + 1 - chi_x)
    by01 = "Kunneth on N^vee + cohomology sequence of the double cover"
    hyp = "" if rational else "elliptic singularity: R^1 of the resolution is unknown in the Leray sequence"
    if n_ell == 0 and h01s[0] == h01s[1]:
        h01 = HodgeValue.exact(lo01, by01)
        h02 = HodgeValue.exact(lo02, by01)
    else:
        h01 = HodgeValue(lo01, hi01, by01, hyp or "connecting map rank unknown")
        h02 = HodgeValue(lo02, hi02, by01, hyp or "connecting map rank unknown")
    h10, claimed = _h10(d, rational, b1, h02)
    return HodgeData(h01, h02, h10, h01s, h02s, claimed, (n0, n1, n2))


def _h10(d, rational, b1, h02):
    F_rational = d.gF == 0
    if F_rational and rational and d.dC > 2 * d.gC - 2:
        return HodgeValue.exact(d.gC, "all 1-forms d-closed (d_C > 2g(C)-2, rational singularities)"), None
    if F_rational and rational:
        m0, m1, _ = nminus2_cohomology(d)
        h0Om = d.gC + d.gF
        h1Om = 2 * d.gC * d.gF + 2
        # 0 -> N^-2 -> Omega_S -> (d-closed forms) -> 0
        lo_closed = h0Om - (m0[1] if m0[1] is not None else m0[0]) + max(0, m1[0] - h1Om)
        lo = max(d.gC, lo_closed)
        hi = None
        if m0[1] is not None and m1[1] is not None and h02.hi is not None:
            hi = h0Om - m0[0] + m1[1] + h02.hi
        claimed = d.gC + Fraction(3 * d.dF, 2) - 1
        return HodgeValue(lo, hi, "d-closed forms sequence + differential into 2-forms",
                          "d_C = 2g(C)-2"), int(claimed)
    why = "F not rational" if not F_rational else "non-rational singularity"
    return HodgeValue(b1 // 2, None, "Igusa: pullbacks from the Albanese", why), None


# --- Betti numbers and fibrations -------------------------------------------------------

@dataclass
class BettiData:
    b: tuple
    c2: int
    b2_blowup_check: int
    fiber_genus_over_C: int
    fiber_genus_over_F: int | None
    cusps_over_C: list
    cusps_over_F: list


def betti_and_fibers(d: SurfaceData, inv=None, k2_res=None, chi_value=None):
    inv = singular_points(d) if inv is None else inv
    if k2_res is None:
        k2_res = k2(d, inv)[1]
    chi_x = chi(d, inv) if chi_value is None else chi_value
    c2 = 12 * chi_x - k2_res
    b1 = 2 * (d.gC + d.gF)
    b2 = c2 - 2 + 2 * b1
    blowups = sum(s.blowups for s in inv)
    check = 2 + 4 * d.gC * d.gF + blowups
    cusps_C = [{"point": P.to_json(), "order": -m, "genus_drop": Fraction(-m, 2)} for P, m in d.vF.divisor.items() if m < 0]
    cusps_F = [{"point": P.to_json(), "order": -m, "genus_drop": Fraction(-m, 2)} for P, m in d.vC.divisor.items() if m < 0]
    fib_C = d.gF + Fraction(d.dF, 2)
    fib_F = d.gC + Fraction(d.dC, 2)
    return BettiData((1, b1, b2, b1, 1), c2, check, int(fib_C), int(fib_F), cusps_C, cusps_F)


# --- predicates -----------------------------------------------------------------------------

def predicates(d: SurfaceData, rep):
    """Boolean and numeric flags; ``None`` means the hypotheses needed are not met."""
    inv = rep["inventory"]
    rational = all(s.type.rational for s in inv)
    h01 = rep["h01"]
    b1 = rep["b"][1]
    chi_x, K2, c2, b2 = rep["chi"], rep["k2_resolved"], rep["c2"], rep["b"][2]
    if h01.is_exact:
        pic_reduced = h01.lo == b1 // 2
    else:
        pic_reduced = False if h01.lo > b1 // 2 else None
    # torsion-free crystalline cohomology forces a reduced Picard scheme
    strong = d.gF == 0 and rational and d.dC > 2 * d.gC - 2
    if pic_reduced is False:
        torsion_free = False
    else:
        torsion_free = True if strong else None
    frolicher = True if strong else None
    slope = None
    if torsion_free and strong and chi_x > 1 - d.gC:
        slope = False
    ordinary = False if slope is False else None
    pg = rep["h02"]
    vf = True if (d.gC <= 1 and d.gF <= 1 and pg.lo > 0) else None
    disjoint = sum(s.graph.max_independent_minus2() if s.graph is not None else 0 for s in inv)
    return {
        "picard_reduced": pic_reduced,
        "crystalline_torsion_free": torsion_free,
        "frolicher_degenerates": frolicher,
        "slope_degenerates": slope,
        "ordinary": ordinary,
        "has_global_vector_fields": vf,
        "uniruled": d.gC == 0 or d.gF == 0,
        "unirational": d.gC == 0 and d.gF == 0,
        "bmy_violated": K2 > 9 * chi_x,
        "miyaoka_bound": Fraction(3 * c2 - K2, 9),
        "sb_bound": K2 + Fraction(c2, 2),
        "disjoint_minus2": disjoint,
        "miyaoka_violated": disjoint > Fraction(3 * c2 - K2, 9),
        "sb_reached": disjoint > K2 + Fraction(c2, 2),
        "hodge_index_cap": b2 - 1,
    }


# --- full analysis -----------------------------------------------------------------------------

def analyze(d: SurfaceData, precision=24):
    """Run every computation; returns a dict with ``status`` 'ok' or 'unclassified'."""
    info = validate(d)
    inv = singular_points(d, precision)
    rep = {
        "validation": info,
        "inventory": inv,
        "gC": d.gC,
        "gF": d.gF,
        "dC": d.dC,
        "dF": d.dF,
        "k2_singular": k2_singular(d),
    }
    unclassified = [s for s in inv if not s.type.classified]
    if unclassified:
        rep["status"] = "unclassified"
        rep["chi_singular"] = chi_singular_rr(d)
        return rep
    ks, kr = k2(d, inv)
    rep["k2_resolved"] = kr
    rep["chi_singular"] = chi_singular_rr(d)
    rep["chi_singular_kunneth"] = chi_singular_kunneth(d)
    rep["chi"] = chi(d, inv)
    hd = hodge(d, inv, rep["chi"])
    rep["h01"], rep["h02"], rep["h10"] = hd.h01, hd.h02, hd.h10
    rep["h10_claimed"] = hd.h10_claimed
    rep["nvee_cohomology"] = hd.nvee
    bd = betti_and_fibers(d, inv, kr, rep["chi"])
    rep["b"] = bd.b
    rep["c2"] = bd.c2
    rep["b2_blowup_check"] = bd.b2_blowup_check
    rep["fiber_genus_over_C"] = bd.fiber_genus_over_C
    rep["fiber_genus_over_F"] = bd.fiber_genus_over_F
    rep["cusps_over_C"] = bd.cusps_over_C
    rep["cusps_over_F"] = bd.cusps_over_F
    rep["predicates"] = predicates(d, rep)
    rep["status"] = "ok"
    return rep

