"""Supersingularity bookkeeping and zeta functions.

The surfaces here are dominated by a rational or product surface through
purely inseparable maps, so their Picard number equals b_2 and their zeta
function is that of the blown-up product.  P_2 of a product comes from the
curve factors by Kunneth:  P_2(S) = (1 - qt)^2 * prod (1 - a_i b_j t).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .curves import reciprocal_roots, zeta_numerator

__all__ = [
    "ArtinData",
    "ZetaData",
    "artin_invariant_bounds",
    "artin_tate_product",
    "power_sums",
    "from_power_sums",
    "poly_mul",
    "p2_kunneth",
    "p2_blown_up",
    "zeta_data",
    "squarefree_part",
    "distinct_reciprocal_roots",
]


@dataclass
class ArtinData:
    alpha: int
    sigma_lo: int
    sigma_hi: int
    lower_bound_licensed: bool
    note: str

    def to_json(self):
        return {
            "alpha": self.alpha,
            "sigma": {"value": [self.sigma_lo, self.sigma_hi], "status": "interval",
                      "by": "NS discriminant of a Shioda-supersingular surface"},
            "disc_ns": "-2^(2 sigma)",
            "lower_bound_licensed": self.lower_bound_licensed,
            "note": self.note,
        }


def artin_invariant_bounds(report) -> ArtinData:
    """Bounds on the Artin invariant sigma, where disc NS = -2^(2 sigma).

    sigma <= b2/2 always; sigma >= p_g needs torsion-free crystalline cohomology.
    """
    b1, b2 = report["b"][1], report["b"][2]
    pg = report["h02"]
    alpha = report["chi"] - 1 + b1 // 2
    if b1 % 2:
        raise ArithmeticError("odd first Betti number")
    torsion_free = report["predicates"]["crystalline_torsion_free"]
    if torsion_free is True and pg.is_exact:
        return ArtinData(alpha, pg.lo, b2 // 2, True, "rho = b2; sigma >= p_g from torsion-free crystalline cohomology")
    if torsion_free is False:
        note = "rho = b2; Picard scheme is non-reduced, so crystalline cohomology has torsion and sigma >= p_g is not available"
    else:
        note = "rho = b2; torsion-freeness of crystalline cohomology not established"
    return ArtinData(alpha, 0, b2 // 2, False, note)


def artin_tate_product(d, report, k):
    """(alpha, exponent, q) with disc NS * |Br| = q^exponent * |NS_tors|."""
    b1 = report["b"][1]
    if b1 % 2:
        raise ArithmeticError("odd first Betti number")
    alpha = report["chi"] - 1 + b1 // 2
    exponent = alpha - d.gC * d.gF
    q = 1 << k
    return {
        "alpha": alpha,
        "exponent": exponent,
        "q": q,
        "rhs": f"{q}^{exponent} * |NS_tors|",
        "note": "|Br| and |NS_tors| are not computed; only the product identity is reported",
    }


# --- integer polynomial helpers -------------------------------------------------------

def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def power_sums(c, n):
    """s_1..s_n of the reciprocal roots of P(t) = sum c_j t^j with c_0 = 1."""
    d = len(c) - 1
    s = [0] * (n + 1)
    for m in range(1, n + 1):
        acc = -m * (c[m] if m <= d else 0)
        for i in range(1, m):
            acc -= s[i] * (c[m - i] if m - i <= d else 0)
        s[m] = acc
    return s


def from_power_sums(s, d):
    """Coefficients of prod (1 - g_i t) of degree d from power sums s[1..d]."""
    c = [1] + [0] * d
    for j in range(1, d + 1):
        acc = -sum(s[i] * c[j - i] for i in range(1, j + 1))
        if acc % j:
            raise ArithmeticError("power sums do not come from an integer polynomial")
        c[j] = acc // j
    return c


def p2_kunneth(C, F, k, budget=24, P1C=None, P1F=None):
    """P_2 of C x F over GF(2^k) as integer coefficients, constant term first."""
    q = 1 << k
    P1C = zeta_numerator(C, k, budget) if P1C is None else P1C
    P1F = zeta_numerator(F, k, budget) if P1F is None else P1F
    dC, dF = len(P1C) - 1, len(P1F) - 1
    base = [1, -2 * q, q * q]
    if dC == 0 or dF == 0:
        return base
    n = dC * dF
    sC, sF = power_sums(P1C, n), power_sums(P1F, n)
    mid = from_power_sums([0] + [sC[m] * sF[m] for m in range(1, n + 1)], n)
    return poly_mul(base, mid)


def p2_blown_up(p2, blowups, q):
    """Each exceptional curve (defined over the base) contributes a factor 1 - qt."""
    out = list(p2)
    for _ in range(blowups):
        out = poly_mul(out, [1, -q])
    return out


def _divmod_q(a, b):
    """Division of rational polynomials, highest coefficient last."""
    a = [Fraction(x) for x in a]
    out = [Fraction(0)] * max(1, len(a) - len(b) + 1)
    while len(a) >= len(b) and any(a):
        shift = len(a) - len(b)
        f = a[-1] / b[-1]
        out[shift] = f
        for i, y in enumerate(b):
            a[i + shift] -= f * y
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return out, a


def _gcd_q(a, b):
    a = [Fraction(x) for x in a]
    b = [Fraction(x) for x in b]
    while b and any(b):
        _, r = _divmod_q(a, b)
        a, b = b, r
    return [x / a[-1] for x in a]


def squarefree_part(c):
    """P / gcd(P, P') for an integer polynomial, so that numerical roots are well conditioned."""
    c = list(c)
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    if len(c) <= 2:
        return c
    deriv = [i * x for i, x in enumerate(c)][1:]
    g = _gcd_q(c, deriv)
    quo, _ = _divmod_q(c, g)
    return quo


def distinct_reciprocal_roots(c):
    return reciprocal_roots([float(x) for x in squarefree_part(c)])


@dataclass
class ZetaData:
    q: int
    P1C: list
    P1F: list
    P2: list

    def max_root_deviation(self):
        roots = distinct_reciprocal_roots(self.P2)
        return max((abs(abs(z) - self.q) for z in roots), default=0.0)

    def to_json(self):
        return {"q": self.q, "P1_C": self.P1C, "P1_F": self.P1F, "P2": self.P2,
                "root_check": self.max_root_deviation() < 1e-9}


def zeta_data(C, F, k, budget=24):
    P1C = zeta_numerator(C, k, budget)
    P1F = zeta_numerator(F, k, budget)
    return ZetaData(1 << k, P1C, P1F, p2_kunneth(C, F, k, budget, P1C, P1F))
