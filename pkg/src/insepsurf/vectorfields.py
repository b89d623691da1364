"""Rational vector fields on catalog curves.

Every field is stored as ``r(x) * D`` where ``D`` is the canonical lift of
d/dx to the curve and ``r`` a rational function of x.  In characteristic 2
the square of such a derivation satisfies ``delta^[2] = r' * delta``, so the
p-closure eigenfunction is just the formal derivative of the scalar.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property

from .algebra import (
    Divisor,
    GF2k,
    Poly,
    RationalFunction,
    divisor_of_ratfun,
    extension_field,
)
from .curves import ArtinSchreier, CurveModel, EllipticDeuring, ProjectiveLine

__all__ = [
    "PClosureType",
    "CurveVectorField",
    "make_catalog",
    "divisor_of_vf",
    "p_closed_classify",
    "vf_from_json",
    "CATALOG_NAMES",
]

CATALOG_NAMES = ("delta1", "delta2", "delta_prime", "delta_elliptic", "as_ddx", "pullback", "as_pullback")


@dataclass(frozen=True)
class PClosureType:
    kind: str  # "additive", "multiplicative" or "general"
    eigenfunction: RationalFunction | None = dc_field(default=None, compare=False)

    @property
    def is_additive(self):
        return self.kind == "additive"

    @property
    def is_multiplicative(self):
        return self.kind == "multiplicative"

    def __str__(self):
        if self.kind == "general":
            return f"general(f={self.eigenfunction!r})"
        return self.kind


ADDITIVE = PClosureType("additive")
MULTIPLICATIVE = PClosureType("multiplicative")


class CurveVectorField:
    """The rational vector field ``scalar * D`` on ``curve``."""

    def __init__(self, curve: CurveModel, scalar: RationalFunction, name="pullback", params=None):
        if scalar.field is not curve.field:
            raise ValueError("modulus mismatch between scalar and curve")
        if scalar.is_zero():
            raise ValueError("the zero vector field is not allowed")
        self.curve = curve
        self.scalar = scalar
        self.name = name
        self.params = dict(params or {})

    def __repr__(self):
        return f"CurveVectorField({self.name}, {self.curve!r}, {self.scalar!r})"

    @cached_property
    def ambient(self) -> GF2k:
        """Field over which all zeros and poles are geometric points."""
        return extension_field(self.curve.field, self.scalar.splitting_degree())

    @cached_property
    def divisor(self) -> Divisor:
        base = divisor_of_ratfun(self.scalar, self.ambient)
        return self.curve.pullback(base) + self.curve.lift_divisor(self.ambient)

    @cached_property
    def pclass(self) -> PClosureType:
        if self.name == "delta_elliptic":
            a, b, alpha = self.params["a"], self.params["b"], self.curve.alpha.value
            c = self.curve.field.mul(a, alpha) ^ b
            if c == 0:
                return ADDITIVE
            if c == 1:
                return MULTIPLICATIVE
            return PClosureType("general", RationalFunction.const(self.curve.field, c))
        return classify_scalar(self.scalar)

    @property
    def zeros(self):
        return self.divisor.zeros()

    @property
    def poles(self):
        return self.divisor.poles()

    @property
    def pole_degree(self):
        """d: degree of the divisor of poles."""
        return self.poles.degree()

    @property
    def zero_degree(self):
        return self.zeros.degree()

    def to_json(self):
        if self.name in ("pullback", "as_pullback"):
            out = {"base": "ddx", "scale_num": list(self.scalar.num.coeffs), "scale_den": list(self.scalar.den.coeffs)}
        else:
            out = {"catalog": self.name}
            out.update({k: v for k, v in self.params.items()})
        return out


def classify_scalar(r: RationalFunction) -> PClosureType:
    d = r.derivative()
    if d.is_zero():
        return ADDITIVE
    if d == 1:
        return MULTIPLICATIVE
    return PClosureType("general", d)


def _x(field):
    return RationalFunction.x(field)


def _distinct(values, what):
    if len(set(values)) != len(values):
        raise ValueError(f"repeated points among {what}")


def make_catalog(name, field=None, **kw):
    """Construct a named catalog vector field.

    Names: delta1, delta2, delta_prime(a, b), delta_elliptic(alpha, a, b),
    as_ddx(h), pullback(curve, scalar) and as_pullback(h, a), the last
    being pullback of prod (x - a_i)^-2 d/dx to the Artin-Schreier curve.
    Field elements are passed as raw ints of ``field`` (default GF(2)).
    """
    F = field or GF2k(1)
    x = _x(F)
    if name == "delta1":
        return CurveVectorField(ProjectiveLine(F), x ** -4 + x ** -2, "delta1")
    if name == "delta2":
        return CurveVectorField(ProjectiveLine(F), x ** -2 + x ** 4, "delta2")
    if name == "delta_prime":
        a, b = list(kw["a"]), list(kw["b"])
        if len(a) != len(b) or not a:
            raise ValueError("delta_prime needs n >= 1 pairs (a_i, b_i)")
        _distinct(a + b, "a_i, b_i")
        r = RationalFunction.const(F, 1)
        for ai, bi in zip(a, b):
            r = r * RationalFunction(Poly(F, (ai, 1)) ** 2, Poly(F, (bi, 1)) ** 2)
        return CurveVectorField(ProjectiveLine(F), r, "delta_prime", {"a": a, "b": b})
    if name == "delta_elliptic":
        alpha, a, b = kw["alpha"], kw["a"], kw["b"]
        curve = EllipticDeuring(F(alpha))
        r = RationalFunction(Poly(F, (a, b)) * Poly(F, (1, alpha)))
        if r.is_zero():
            raise ValueError("a = b = 0 gives the zero field")
        return CurveVectorField(curve, r, "delta_elliptic", {"a": a, "b": b})
    if name == "as_ddx":
        return CurveVectorField(ArtinSchreier(kw["h"], F), RationalFunction.const(F, 1), "as_ddx", {"h": kw["h"]})
    if name == "as_pullback":
        a = list(kw.get("a", []))
        _distinct(a, "a_i")
        r = RationalFunction.const(F, 1)
        for ai in a:
            r = r / RationalFunction(Poly(F, (ai, 1)) ** 2)
        return CurveVectorField(ArtinSchreier(kw["h"], F), r, "as_pullback", {"h": kw["h"], "a": a})
    if name == "pullback":
        curve = kw["curve"]
        return CurveVectorField(curve, kw["scalar"], "pullback")
    raise ValueError(f"unknown catalog field {name!r}")


def divisor_of_vf(v: CurveVectorField) -> Divisor:
    return v.divisor


def p_closed_classify(v: CurveVectorField) -> PClosureType:
    return v.pclass


def vf_from_json(data, curve):
    """Vector field on ``curve`` from ``{"catalog": ...}`` or ``{"base": "ddx", ...}``."""
    F = curve.field
    if "catalog" in data:
        name = data["catalog"]
        if name in ("delta1", "delta2", "delta_prime"):
            if not isinstance(curve, ProjectiveLine):
                raise ValueError(f"{name} lives on the projective line")
            return make_catalog(name, F, a=data.get("a", []), b=data.get("b", []))
        if name == "delta_elliptic":
            if not isinstance(curve, EllipticDeuring):
                raise ValueError("delta_elliptic needs an elliptic_deuring curve")
            return make_catalog(name, F, alpha=curve.alpha.value, a=int(data["a"]), b=int(data["b"]))
        if name in ("as_ddx", "as_pullback"):
            if not isinstance(curve, ArtinSchreier):
                raise ValueError(f"{name} needs an artin_schreier curve")
            return make_catalog(name, F, h=curve.h, a=data.get("a", []))
        raise ValueError(f"unknown catalog field {name!r}")
    if data.get("base") == "ddx":
        num = [int(c) for c in data["scale_num"]]
        den = [int(c) for c in data.get("scale_den", [1])]
        if not any(den):
            raise ValueError("zero denominator")
        if not any(num):
            raise ValueError("the zero vector field is not allowed")
        return make_catalog("pullback", F, curve=curve, scalar=RationalFunction(Poly(F, num), Poly(F, den)))
    raise ValueError("vector field needs 'catalog' or 'base'")


# --- bivariate cross-check for the elliptic catalog field ----------------------

def deuring_eigenvalue(alpha, a, b, field):
    """Apply delta_{alpha,a,b} twice to y on the plane and return c with delta^2 y = c delta y.

    Works with polynomials in x, y as dicts; no reduction modulo the curve is
    needed since delta preserves the polynomial ring.
    """
    F = field

    def add(p, q):
        out = dict(p)
        for m, c in q.items():
            out[m] = out.get(m, 0) ^ c
            if not out[m]:
                del out[m]
        return out

    def mul(p, q):
        out = {}
        for (i, j), c in p.items():
            for (k, l), d in q.items():
                m = (i + k, j + l)
                out[m] = out.get(m, 0) ^ F.mul(c, d)
                if not out[m]:
                    del out[m]
        return out

    ab = {(0, 0): a, (1, 0): b}
    ab = {m: c for m, c in ab.items() if c}
    dx = mul(ab, {m: c for m, c in {(0, 0): 1, (1, 0): alpha}.items() if c})
    dy = mul(ab, {m: c for m, c in {(0, 1): alpha, (2, 0): 1}.items() if c})

    def apply(p):
        out = {}
        for (i, j), c in p.items():
            if i % 2:
                out = add(out, mul({(i - 1, j): c}, dx))
            if j % 2:
                out = add(out, mul({(i, j - 1): c}, dy))
        return out

    ddy = apply(dy)
    # find c with ddy = c * dy
    if not dy:
        return 0
    m0 = max(dy)
    c = F.div(ddy.get(m0, 0), dy[m0])
    if add(ddy, {m: F.mul(c, v) for m, v in dy.items()}):
        raise ArithmeticError("delta^2 is not proportional to delta")
    return c
