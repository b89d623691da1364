"""Local resolution of isolated singularities of separated vector fields.

A local field ``delta = P dx + Q dy`` (written with ``dx`` for d/dx) has an
isolated singularity at the origin when both coefficients vanish there.  We
handle the two shapes that occur on products of curves:

* zeros: ``P = x^a u(x)``, ``Q = y^b v(y)``;
* poles: after clearing ``h = x^-a y^-b`` one gets ``P = y^b u(x)``,
  ``Q = x^a v(y)``, and the axes carry divisor coefficients ``-a``, ``-b``.

The engine blows up points until the induced field has only divisorial
singularities, keeping track of self-intersections, mutual intersections and
divisor coefficients of every exceptional curve.  The quotient by the
resolved field is smooth, and the images of the exceptional curves form the
dual graph reported by :func:`resolve`.  An exceptional curve ``E`` that is
integral for the field maps with ``pi^* E' = E`` and ``E'^2 = E^2 / 2``; a
transverse one has ``pi^* E' = 2E`` and ``E'^2 = 2 E^2``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import lcm

from .algebra import GF2k, Poly, irreducible_factor_degrees, poly_gcd, _roots_in_field

__all__ = [
    "LocalVF",
    "DualGraph",
    "SingularityType",
    "A1",
    "D4",
    "D8",
    "E8",
    "ELLIPTIC_19_0",
    "unclassified",
    "classify_pair",
    "blowup_once",
    "resolve",
    "fundamental_cycle",
    "multiplicity",
    "catalog_graph",
    "NotIsolated",
    "ResolutionError",
]

MAX_DEPTH = 32
PRECISION_CAP = 384


class NotIsolated(ValueError):
    """The origin is not an isolated singularity of the field."""


class ResolutionError(RuntimeError):
    """Non-termination, precision exhaustion or an inconsistent intersection count."""


class _NeedExtension(Exception):
    def __init__(self, degree):
        self.degree = degree


# --- singularity types ------------------------------------------------------

@dataclass(frozen=True)
class SingularityType:
    name: str
    rational: bool | None
    a: int = 0
    b: int = 0

    @property
    def classified(self):
        return self.name != "Unclassified"

    @property
    def elliptic(self):
        return self.name == "Elliptic19_0"

    def __str__(self):
        if self.name == "Unclassified":
            return f"Unclassified({self.a},{self.b})"
        return self.name

    def to_json(self):
        return str(self)


A1 = SingularityType("A1", True)
D4 = SingularityType("D4", True)
D8 = SingularityType("D8", True)
E8 = SingularityType("E8", True)
ELLIPTIC_19_0 = SingularityType("Elliptic19_0", False)


def unclassified(a, b):
    return SingularityType("Unclassified", None, a, b)


_TABLE = {(1, 1): A1, (2, 2): D4, (4, 2): D8, (2, 4): D8, (4, 4): ELLIPTIC_19_0}

# At a common pole the (4,2) field y^2 dx + x^4 dy has invariants x^2, y^2 and
# w = x^5 + y^3 with w^2 = u^5 + v^3, an E8 point; the engine agrees.
_POLE_TABLE = dict(_TABLE)
_POLE_TABLE[(4, 2)] = _POLE_TABLE[(2, 4)] = E8


def classify_pair(a: int, b: int, configuration: str = "zeros") -> SingularityType:
    """Table lookup on the absolute orders of the two coefficients.

    The plain table is keyed on the orders only.  Passing
    ``configuration="poles"`` selects the table verified by the blow-up
    engine for common poles, which differs in the (4,2) entry.
    """
    if a < 1 or b < 1:
        raise ValueError("orders must be positive")
    table = _POLE_TABLE if configuration == "poles" else _TABLE
    return table.get((a, b), unclassified(a, b))


# --- local fields -------------------------------------------------------------

@dataclass
class LocalVF:
    """Separated local field with orders ``a``, ``b`` and unit series ``u``, ``v``.

    Units are coefficient lists (constant term first) over ``field``; a unit
    longer than ``precision`` is treated as a truncated power series.
    """

    a: int
    b: int
    configuration: str = "zeros"
    u: tuple = (1,)
    v: tuple = (1,)
    field: GF2k = dc_field(default_factory=lambda: GF2k(1))
    precision: int = 24

    def __post_init__(self):
        if self.configuration not in ("zeros", "poles", "mixed"):
            raise ValueError(f"unknown configuration {self.configuration!r}")
        self.u = tuple(self.u)
        self.v = tuple(self.v)

    def check(self):
        if self.configuration == "mixed" or self.a == 0 or self.b == 0:
            raise NotIsolated("not an isolated singularity")
        if self.a < 0 or self.b < 0:
            raise ValueError("orders must be non-negative")
        if not self.u or not self.v or self.u[0] == 0 or self.v[0] == 0:
            raise ValueError("u and v must be units (nonzero constant term)")
        sign = 1 if self.configuration == "zeros" else -1
        tf = _series_type(sign * self.a, self.u, self.field)
        tg = _series_type(sign * self.b, self.v, self.field)
        if tf != tg or tf == "general":
            raise ValueError(f"field is not p-closed of a single type (f: {tf}, g: {tg})")

    def ptype(self):
        sign = 1 if self.configuration == "zeros" else -1
        return _series_type(sign * self.a, self.u, self.field)

    def truncated(self):
        return len(self.u) > self.precision or len(self.v) > self.precision

    def polys(self, field=None, precision=None):
        """(P, Q, axis coefficients) as bivariate dicts over ``field``."""
        K = field or self.field
        emb = self.field.embedding(K)
        n = precision or self.precision
        u = [emb(c) for c in self.u[:n]]
        v = [emb(c) for c in self.v[:n]]
        if self.configuration == "zeros":
            P = {(self.a + i, 0): c for i, c in enumerate(u) if c}
            Q = {(0, self.b + j): c for j, c in enumerate(v) if c}
            coeffs = (0, 0)
        else:
            P = {(i, self.b): c for i, c in enumerate(u) if c}
            Q = {(self.a, j): c for j, c in enumerate(v) if c}
            coeffs = (-self.a, -self.b)
        return P, Q, coeffs


def _series_type(order, unit, K):
    """p-closure type of x^order * unit(x) d/dx: its eigenfunction is the derivative."""
    odd = {order + i: c for i, c in enumerate(unit) if c and (order + i) % 2}
    if not odd:
        return "additive"
    if list(odd) == [1] and odd[1] == 1:
        return "multiplicative"
    return "general"


# --- bivariate helpers (dicts {(i, j): c}) -------------------------------------

def _add_into(out, m, c):
    if c:
        r = out.get(m, 0) ^ c
        if r:
            out[m] = r
        else:
            out.pop(m, None)


def _chart1(P, Q):
    """x = s y: returns (D(s) * y, D(y)) before division by y."""
    Ps, Qy = {}, {}
    for (i, j), c in Q.items():
        _add_into(Qy, (i, i + j), c)
        _add_into(Ps, (i + 1, i + j), c)  # - s Q, char 2
    for (i, j), c in P.items():
        _add_into(Ps, (i, i + j), c)
    return Ps, Qy


def _chart2(P, Q):
    """y = t x: returns (D(x), D(t) * x) in coordinates (x, t)."""
    Px, Qt = {}, {}
    for (i, j), c in P.items():
        _add_into(Px, (i + j, j), c)
        _add_into(Qt, (i + j, j + 1), c)
    for (i, j), c in Q.items():
        _add_into(Qt, (i + j, j), c)
    return Px, Qt


def _shift(p, di, dj):
    return {(i - di, j - dj): c for (i, j), c in p.items()}


def _saturate(P, Q):
    """Divide out the largest common monomial; returns (P, Q, (i, j))."""
    mons = list(P) + list(Q)
    mi = min(m[0] for m in mons)
    mj = min(m[1] for m in mons)
    return _shift(P, mi, mj), _shift(Q, mi, mj), (mi, mj)


def _translate_first(p, c, K):
    """Substitute s -> s + c in the first variable (Lucas: binom(i, k) odd iff k & i == k)."""
    if c == 0:
        return dict(p)
    out = {}
    for (i, j), a in p.items():
        k = i
        while True:
            # iterate over submasks k of i
            coef = K.mul(a, K.pow(c, i - k))
            _add_into(out, (k, j), coef)
            if k == 0:
                break
            k = (k - 1) & i
    return out


def _restrict(p, axis, K):
    """Restriction to {y=0} (axis 0, a poly in the first variable) or {x=0}."""
    coeffs = {}
    for (i, j), c in p.items():
        if axis == 0 and j == 0:
            coeffs[i] = c
        elif axis == 1 and i == 0:
            coeffs[j] = c
    if not coeffs:
        return Poly(K)
    out = [0] * (max(coeffs) + 1)
    for i, c in coeffs.items():
        out[i] = c
    return Poly(K, out)


def _vanishes_at_origin(p):
    return (0, 0) not in p


# --- blow-up bookkeeping ----------------------------------------------------

@dataclass
class _Curve:
    ident: int
    exceptional: bool
    coeff: int
    selfint: int = 0
    integral: bool | None = None
    e: int = 0
    parent: int | None = None
    point: str = ""


@dataclass
class BlowupNode:
    """One blow-up in the tree; ``point`` says where on the parent it happened."""

    ident: int
    parent: int | None
    point: str
    e: int
    integral: bool
    coeff: int

    def to_json(self):
        return {"id": self.ident, "parent": self.parent, "point": self.point, "e": self.e,
                "integral": self.integral, "coeff": self.coeff}


@dataclass
class ChartData:
    chart: str
    P: dict
    Q: dict
    e: int


@dataclass
class BlowupResult:
    charts: list
    e: int
    integral: bool
    points: list  # (label, P, Q, c) with c the chart-1 coordinate or None for chart 2


def blowup_once(P, Q, K):
    """Blow up the origin of ``P dx + Q dy`` over the field K.

    Returns the two saturated charts, the exceptional order ``e``, whether the
    exceptional curve is integral, and the isolated singular points on it,
    each translated to the origin of its chart.
    """
    if not _vanishes_at_origin(P) or not _vanishes_at_origin(Q):
        raise NotIsolated("not an isolated singularity")
    Ps, Qy = _chart1(P, Q)
    P1, Q1, (m1s, e) = _saturate(_shift(Ps, 0, 1), Qy)
    if m1s != 0:
        raise ResolutionError("non-exceptional common factor in chart 1")
    Px, Qt = _chart2(P, Q)
    P2, Q2, (e2, m2t) = _saturate(Px, _shift(Qt, 1, 0))
    if m2t != 0 or e2 != e:
        raise ResolutionError("charts disagree on the exceptional order")
    integral = _restrict(Q1, 0, K).is_zero()
    points = []
    g = poly_gcd(_restrict(P1, 0, K), _restrict(Q1, 0, K)) if not (
        _restrict(P1, 0, K).is_zero() and _restrict(Q1, 0, K).is_zero()) else None
    if g is None:
        raise ResolutionError("exceptional curve is a common component")
    if g.degree > 0:
        roots = _roots_in_field(g)
        if len(roots) < _distinct_root_count(g):
            degs = irreducible_factor_degrees(g)
            raise _NeedExtension(lcm(*degs))
        for c, _ in roots:
            points.append((f"s={c:#x}", _translate_first(P1, c, K), _translate_first(Q1, c, K), c))
    if _vanishes_at_origin(P2) and _vanishes_at_origin(Q2):
        points.append(("t=0", P2, Q2, None))
    charts = [ChartData("x=sy", P1, Q1, e), ChartData("y=tx", P2, Q2, e)]
    return BlowupResult(charts, e, integral, points)


def _distinct_root_count(g):
    from .algebra import radical

    return radical(g).degree


class _Resolver:
    def __init__(self, K):
        self.K = K
        self.curves = {}
        self.inter = {}
        self.nodes = []
        self.count = 0

    def new_curve(self, exceptional, coeff, **kw):
        ident = len(self.curves)
        self.curves[ident] = _Curve(ident, exceptional, coeff, **kw)
        return ident

    def bump(self, i, j, d):
        key = (min(i, j), max(i, j))
        self.inter[key] = self.inter.get(key, 0) + d

    def meet(self, i, j):
        if i == j:
            return self.curves[i].selfint
        return self.inter.get((min(i, j), max(i, j)), 0)

    def run(self, P, Q, axes, depth, parent=None, label="origin"):
        if depth > MAX_DEPTH:
            raise ResolutionError("resolution did not terminate (depth > 32)")
        self.count += 1
        if self.count > 4096:
            raise ResolutionError("too many blow-ups")
        res = blowup_once(P, Q, self.K)
        through = [c for c in (axes.get("x"), axes.get("y")) if c is not None]
        coeff = sum(self.curves[c].coeff for c in through) + res.e
        E = self.new_curve(True, coeff, selfint=-1, integral=res.integral, e=res.e, parent=parent, point=label)
        for L in through:
            self.curves[L].selfint -= 1
            self.bump(E, L, 1)
        if len(through) == 2:
            self.bump(through[0], through[1], -1)
        self.nodes.append(BlowupNode(E, parent, label, res.e, res.integral, coeff))
        for lab, P1, Q1, c in res.points:
            if c is None:
                sub_axes = {"x": E, "y": axes.get("y")}
            else:
                sub_axes = {"x": axes.get("x") if c == 0 else None, "y": E}
            self.run(P1, Q1, sub_axes, depth + 1, E, lab)


# --- dual graphs -----------------------------------------------------------

@dataclass
class DualGraph:
    """Weighted graph of curves: self-intersections, canonical degrees, edges."""

    selfint: list
    kdeg: list
    edges: dict  # (i, j) with i < j -> intersection number

    def __len__(self):
        return len(self.selfint)

    def matrix(self):
        n = len(self.selfint)
        M = [[0] * n for _ in range(n)]
        for i, s in enumerate(self.selfint):
            M[i][i] = s
        for (i, j), w in self.edges.items():
            M[i][j] = M[j][i] = w
        return M

    def neighbours(self, i):
        out = []
        for (a, b), w in self.edges.items():
            if w:
                if a == i:
                    out.append(b)
                elif b == i:
                    out.append(a)
        return sorted(out)

    def is_connected(self):
        n = len(self)
        if n == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            i = stack.pop()
            for j in self.neighbours(i):
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        return len(seen) == n

    def is_negative_definite(self):
        M = self.matrix()
        n = len(M)
        # -M positive definite iff all leading minors of -M are positive
        for k in range(1, n + 1):
            if _det([[Fraction(-M[i][j]) for j in range(k)] for i in range(k)]) <= 0:
                return False
        return True

    def canonical_form(self):
        """Isomorphism invariant for trees with vertex labels (selfint, kdeg)."""
        n = len(self)
        if n == 0:
            return ""
        if len([w for w in self.edges.values() if w]) != n - 1 or any(w != 1 for w in self.edges.values() if w):
            # not a simple tree: fall back on a sorted description
            return "G" + repr((sorted(zip(self.selfint, self.kdeg)), sorted(self.edges.values())))

        def enc(v, parent):
            kids = sorted(enc(w, v) for w in self.neighbours(v) if w != parent)
            return f"({self.selfint[v]},{self.kdeg[v]}" + "".join(kids) + ")"

        return min(enc(r, None) for r in range(n))

    def isomorphic(self, other):
        return self.canonical_form() == other.canonical_form()

    def to_json(self):
        return {
            "vertices": [{"selfint": s, "kdeg": k} for s, k in zip(self.selfint, self.kdeg)],
            "edges": [[i, j] for (i, j), w in sorted(self.edges.items()) for _ in range(w)],
        }

    def max_independent_minus2(self):
        """Largest set of pairwise disjoint (-2)-curves with K.E = 0."""
        cand = [i for i in range(len(self)) if self.selfint[i] == -2 and self.kdeg[i] == 0]
        adj = {i: set(self.neighbours(i)) for i in cand}
        best = 0
        for r in range(len(cand), 0, -1):
            for sub in itertools.combinations(cand, r):
                if all(b not in adj[a] for a, b in itertools.combinations(sub, 2)):
                    return r
        return best


def _det(M):
    n = len(M)
    M = [row[:] for row in M]
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if M[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            det = -det
        det *= M[c][c]
        for r in range(c + 1, n):
            f = M[r][c] / M[c][c]
            if f:
                for k in range(c, n):
                    M[r][k] -= f * M[c][k]
    return det


def catalog_graph(name):
    """Reference dual graphs for the classified types."""
    if name == "A1":
        return DualGraph([-2], [0], {})
    if name == "D4":
        return DualGraph([-2] * 4, [0] * 4, {(0, 1): 1, (0, 2): 1, (0, 3): 1})
    if name == "D8":
        # chain 0-1-2-3-4-5 with two tips 6, 7 on vertex 5
        edges = {(i, i + 1): 1 for i in range(5)}
        edges[(5, 6)] = 1
        edges[(5, 7)] = 1
        return DualGraph([-2] * 8, [0] * 8, edges)
    if name == "E8":
        # arms of length 1, 2 and 4 around the branch vertex 0
        edges = {(0, 1): 1, (0, 2): 1, (2, 3): 1, (0, 4): 1, (4, 5): 1, (5, 6): 1, (6, 7): 1}
        return DualGraph([-2] * 8, [0] * 8, edges)
    if name == "Elliptic19_0":
        return DualGraph([-3] + [-2] * 5, [1] + [0] * 5, {(0, i): 1 for i in range(1, 6)})
    raise ValueError(f"no catalog graph for {name!r}")


def match_graph(g):
    for name, t in (("A1", A1), ("D4", D4), ("D8", D8), ("E8", E8), ("Elliptic19_0", ELLIPTIC_19_0)):
        if g.isomorphic(catalog_graph(name)):
            return t
    return None


def fundamental_cycle(g: DualGraph):
    """Artin's fundamental cycle: (Z, Z^2, p_a(Z))."""
    if not g.is_negative_definite():
        raise ValueError("graph not negative definite")
    M = g.matrix()
    n = len(M)
    Z = [1] * n
    while True:
        dots = [sum(Z[j] * M[i][j] for j in range(n)) for i in range(n)]
        bad = next((i for i in range(n) if dots[i] > 0), None)
        if bad is None:
            break
        Z[bad] += 1
    Z2 = sum(Z[i] * Z[j] * M[i][j] for i in range(n) for j in range(n))
    KZ = sum(Z[i] * g.kdeg[i] for i in range(n))
    pa = 1 + Fraction(Z2 + KZ, 2)
    if pa.denominator != 1:
        raise ResolutionError("non-integral arithmetic genus")
    return Z, Z2, int(pa)


# --- multiplicity ------------------------------------------------------------------

def _rank(rows, K):
    rows = [dict(r) for r in rows if r]
    rank = 0
    pivots = {}
    for r in rows:
        r = dict(r)
        while r:
            lead = max(r)
            if lead in pivots:
                pr = pivots[lead]
                f = K.div(r[lead], pr[lead])
                for m, c in pr.items():
                    _add_into(r, m, K.mul(f, c))
            else:
                pivots[lead] = r
                rank += 1
                break
    return rank


def multiplicity(P, Q, K, max_order=128):
    """dim_k O/(P, Q) at the origin, by truncation at m^N until it stabilises."""
    prev = None
    for N in range(2, max_order + 1):
        rows = []
        for p in (P, Q):
            low = min((i + j for i, j in p), default=N)
            for d in range(0, max(0, N - low)):
                for i in range(d + 1):
                    row = {}
                    for (a, b), c in p.items():
                        m = (a + i, b + d - i)
                        if m[0] + m[1] < N:
                            row[m] = c
                    rows.append(row)
        dim = N * (N + 1) // 2 - _rank(rows, K)
        # equal consecutive values mean m^(N-1) lies in the ideal (Nakayama)
        if prev is not None and dim == prev:
            return dim
        prev = dim
    raise ResolutionError("multiplicity did not stabilise")


# --- main entry -----------------------------------------------------------------------

@dataclass
class Resolution:
    nodes: list
    upstairs: dict  # exceptional curve id -> (selfint, coeff, integral)
    graph: DualGraph
    type: SingularityType
    blowups: int
    field_degree: int
    multiplicity: int
    matched: bool

    def to_json(self):
        return {
            "type": str(self.type),
            "blowups": self.blowups,
            "multiplicity": self.multiplicity,
            "field_k": self.field_degree,
            "tree": [n.to_json() for n in self.nodes],
            "graph": self.graph.to_json(),
        }


def _resolve_in(v: LocalVF, K, precision):
    P, Q, (cx, cy) = v.polys(K, precision)
    R = _Resolver(K)
    Lx = R.new_curve(False, cx)
    Ly = R.new_curve(False, cy)
    R.bump(Lx, Ly, 1)
    R.run(P, Q, {"x": Lx, "y": Ly}, 0)
    exc = [c for c in R.curves.values() if c.exceptional]
    idx = {c.ident: n for n, c in enumerate(exc)}
    m = {c.ident: (1 if c.integral else 2) for c in exc}
    selfint, kdeg = [], []
    for c in exc:
        s2 = m[c.ident] * m[c.ident] * c.selfint
        if s2 % 2:
            raise ResolutionError("odd self-intersection for an integral curve")
        selfint.append(s2 // 2)
        dot = sum(other.coeff * R.meet(other.ident, c.ident) for other in R.curves.values())
        k2 = m[c.ident] * (-2 - c.selfint - dot)
        if k2 % 2:
            raise ResolutionError("non-integral canonical degree")
        kdeg.append(k2 // 2)
    edges = {}
    for a, b in itertools.combinations(exc, 2):
        w = m[a.ident] * m[b.ident] * R.meet(a.ident, b.ident)
        if w:
            if w % 2:
                raise ResolutionError("non-integral intersection on the quotient")
            edges[(idx[a.ident], idx[b.ident])] = w // 2
    graph = DualGraph(selfint, kdeg, edges)
    upstairs = {c.ident: (c.selfint, c.coeff, c.integral) for c in exc}
    return R.nodes, upstairs, graph


def resolve(v: LocalVF) -> Resolution:
    """Resolve the singularity and classify the quotient dual graph."""
    v.check()
    K = v.field
    precision = v.precision
    results = []
    while True:
        try:
            nodes, upstairs, graph = _resolve_in(v, K, precision)
        except _NeedExtension as ex:
            K = GF2k(K.k * ex.degree)
            continue
        results.append(graph.canonical_form())
        if not v.truncated():
            break
        # units are series: the answer must be stable under doubling the precision
        if len(results) >= 2 and results[-1] == results[-2]:
            break
        precision *= 2
        if precision > PRECISION_CAP:
            raise ResolutionError("precision exhausted")
    if not graph.is_negative_definite() or not graph.is_connected():
        raise ResolutionError("quotient graph is not a connected negative-definite configuration")
    t = match_graph(graph)
    matched = t is not None
    if t is None:
        t = unclassified(v.a, v.b)
    P, Q, _ = v.polys(K, precision)
    mult = multiplicity(P, Q, K)
    return Resolution(nodes, upstairs, graph, t, len(nodes), K.k, mult, matched)
