"""Exact arithmetic over GF(2^k).

Field elements are stored as integers whose bits are the coefficients of a
polynomial in the generator ``g`` modulo a fixed irreducible binary modulus.
Polynomials over a field are tuples of such integers (lowest degree first)
wrapped in :class:`Poly`; rational functions in one variable are reduced
fractions of two polynomials.

Places of the projective line are geometric points: either infinity or a
root living in some finite extension (the *ambient* field).  Every divisor
produced by :func:`divisor_of_ratfun` lives over a single ambient field that
splits the numerator and denominator, so places are directly comparable.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from math import lcm

__all__ = [
    "GF2k",
    "FieldElement",
    "Poly",
    "RationalFunction",
    "PlaceP1",
    "INFINITY",
    "Divisor",
    "field_arith",
    "ratfun_valuation",
    "divisor_of_ratfun",
    "roots_in_splitting_field",
    "irreducible_factor_degrees",
]


# --- binary polynomials packed into ints -----------------------------------

def _clmul(a, b):
    if a < b:
        a, b = b, a
    c = 0
    while b:
        if b & 1:
            c ^= a
        a <<= 1
        b >>= 1
    return c


def _bdeg(a):
    return a.bit_length() - 1


def _bmod(a, m):
    dm = _bdeg(m)
    while a and _bdeg(a) >= dm:
        a ^= m << (_bdeg(a) - dm)
    return a


def _bgcd(a, b):
    while b:
        a, b = b, _bmod(a, b)
    return a


def _bmulmod(a, b, m):
    return _bmod(_clmul(a, b), m)


def is_irreducible_binary(f):
    """Rabin-style irreducibility test for a binary polynomial packed in an int."""
    n = _bdeg(f)
    if n <= 0:
        return False
    if n == 1:
        return True
    if not f & 1:
        return False
    # x^(2^i) mod f for i = 1..n
    x = 0b10
    powers = []
    t = x
    for _ in range(n):
        t = _bmulmod(t, t, f)
        powers.append(t)
    if powers[-1] != _bmod(x, f):
        return False
    for i in range(1, n // 2 + 1):
        if _bgcd(f, powers[i - 1] ^ x) != 1:
            return False
    return True


@functools.lru_cache(maxsize=None)
def lowest_irreducible(k):
    """Smallest (as an integer) irreducible binary polynomial of degree k."""
    if k < 1:
        raise ValueError("degree must be positive")
    for f in range(1 << k, 1 << (k + 1)):
        if is_irreducible_binary(f):
            return f
    raise AssertionError("unreachable")


# --- fields ---------------------------------------------------------------

class GF2k:
    """The finite field with ``2**k`` elements.

    Instances are cached per ``(k, modulus)`` so that fields compare by
    identity.  The default modulus is the lowest irreducible polynomial of
    degree k, which keeps every report reproducible.
    """

    _cache = {}

    def __new__(cls, k, modulus=None):
        if modulus is None:
            modulus = lowest_irreducible(k)
        key = (k, modulus)
        self = cls._cache.get(key)
        if self is None:
            if _bdeg(modulus) != k or not is_irreducible_binary(modulus):
                raise ValueError(f"modulus {modulus:#b} is not irreducible of degree {k}")
            self = super().__new__(cls)
            self.k = k
            self.modulus = modulus
            self.order = 1 << k
            self._inv_cache = {}
            cls._cache[key] = self
        return self

    def __getnewargs__(self):
        return (self.k, self.modulus)

    def __repr__(self):
        return f"GF2k({self.k}, modulus={self.modulus:#b})"

    # arithmetic on raw ints
    def add(self, a, b):
        return a ^ b

    def mul(self, a, b):
        if not a or not b:
            return 0
        return _bmod(_clmul(a, b), self.modulus)

    def square(self, a):
        return self.mul(a, a)

    def pow(self, a, e):
        if e < 0:
            return self.pow(self.inv(a), -e)
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inversion of zero in GF(2^%d)" % self.k)
        r = self._inv_cache.get(a)
        if r is None:
            r = self.pow(a, self.order - 2)
            self._inv_cache[a] = r
        return r

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def sqrt(self, a):
        # Frobenius is bijective; its inverse is a -> a^(2^(k-1)).
        for _ in range(self.k - 1):
            a = self.mul(a, a)
        return a

    def frobenius(self, a, times=1):
        for _ in range(times):
            a = self.mul(a, a)
        return a

    def trace(self, a):
        """Absolute trace to GF(2), returned as 0 or 1."""
        t = 0
        for _ in range(self.k):
            t ^= a
            a = self.mul(a, a)
        return t

    def elements(self):
        return range(self.order)

    def __call__(self, value):
        return FieldElement(self, value)

    @property
    def gen(self):
        return FieldElement(self, 0b10 if self.k > 1 else 1)

    def degree_over(self, a, base):
        """Degree over ``base`` (a subfield) of the smallest field containing ``a``."""
        if self.k % base.k:
            raise ValueError("base is not a subfield")
        d = 1
        b = self.frobenius(a, base.k)
        while b != a:
            b = self.frobenius(b, base.k)
            d += 1
        return d

    def embedding(self, target):
        """Return the canonical embedding of this field into ``target``."""
        return _embedding(self, target)


@functools.lru_cache(maxsize=None)
def _embedding_table(src, dst):
    if dst.k % src.k:
        raise ValueError(f"GF(2^{src.k}) does not embed in GF(2^{dst.k})")
    if src is dst:
        return None
    modpoly = Poly.from_binary(dst, src.modulus)
    roots = sorted(r for r, _ in _roots_in_field(modpoly))
    g = roots[0]
    basis = [dst.pow(g, i) for i in range(src.k)]
    return tuple(basis)


def _embedding(src, dst):
    basis = _embedding_table(src, dst)
    if basis is None:
        return lambda a: a

    def emb(a):
        r = 0
        i = 0
        while a:
            if a & 1:
                r ^= basis[i]
            a >>= 1
            i += 1
        return r

    return emb


def _restriction(src, dst):
    """Inverse of the embedding src -> dst, defined on its image."""
    emb = _embedding(src, dst)
    table = {emb(a): a for a in src.elements()}

    def res(b):
        try:
            return table[b]
        except KeyError:
            raise ValueError("element does not lie in the subfield") from None

    return res


def extension_field(base, degree):
    """The standard field GF(2^(base.k * degree))."""
    return GF2k(base.k * degree)


@functools.total_ordering
class FieldElement:
    """An element of GF(2^k) with operator overloading."""

    __slots__ = ("field", "value")

    def __init__(self, field, value):
        if isinstance(value, FieldElement):
            value = value.value
        if not 0 <= value < field.order:
            raise ValueError("coefficient bits out of range")
        self.field = field
        self.value = value

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise ValueError("modulus mismatch")
            return other.value
        if isinstance(other, int) and other in (0, 1):
            return other
        return NotImplemented

    def __add__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.value ^ b)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.mul(self.value, b))

    __rmul__ = __mul__

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.value))

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.div(self.value, b))

    def __pow__(self, e):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field is other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __lt__(self, other):
        return self.value < self._coerce(other)

    def __hash__(self):
        return hash((self.field.k, self.field.modulus, self.value))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"FieldElement(k={self.field.k}, {self.value:#b})"

    def to_json(self):
        return {"k": self.field.k, "modulus_bits": self.field.modulus, "coeff_bits": self.value}

    @classmethod
    def from_json(cls, data):
        return GF2k(data["k"], data["modulus_bits"])(data["coeff_bits"])


def field_arith(a, b, op):
    """Add, multiply or invert field elements (``op`` in add/mul/inv)."""
    if a.field is not b.field:
        raise ValueError("modulus mismatch")
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inverse()
    raise ValueError(f"unknown operation {op!r}")


# --- univariate polynomials -------------------------------------------------

class Poly:
    """Polynomial over a GF2k field; coefficients are raw ints, lowest first."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs=()):
        coeffs = [c.value if isinstance(c, FieldElement) else c for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.field = field
        self.coeffs = tuple(coeffs)

    @classmethod
    def from_binary(cls, field, bits):
        """Binary polynomial (int-packed) viewed over ``field``."""
        out = []
        while bits:
            out.append(bits & 1)
            bits >>= 1
        return cls(field, out)

    @classmethod
    def x(cls, field):
        return cls(field, (0, 1))

    @classmethod
    def const(cls, field, c):
        return cls(field, (c,))

    @classmethod
    def monomial(cls, field, n, c=1):
        return cls(field, [0] * n + [c])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def lead(self):
        return self.coeffs[-1]

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.field is other.field and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == ((other,) if other else ())
        return NotImplemented

    def __hash__(self):
        return hash((self.field.k, self.coeffs))

    def __repr__(self):
        if not self.coeffs:
            return "Poly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                cs = "" if (c == 1 and i) else (str(c) if c < 10 else f"{c:#x}")
                terms.append(cs + ("" if i == 0 else ("x" if i == 1 else f"x^{i}")))
        return "Poly(" + " + ".join(terms) + ")"

    def _same(self, other):
        if isinstance(other, int):
            return Poly(self.field, (other,))
        if isinstance(other, FieldElement):
            return Poly(self.field, (other.value,))
        if other.field is not self.field:
            raise ValueError("modulus mismatch")
        return other

    def __add__(self, other):
        other = self._same(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] ^= c
        return Poly(self.field, out)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __mul__(self, other):
        other = self._same(other)
        if not self.coeffs or not other.coeffs:
            return Poly(self.field)
        F = self.field
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] ^= F.mul(a, b)
        return Poly(F, out)

    __rmul__ = __mul__

    def scale(self, c):
        F = self.field
        return Poly(F, [F.mul(c, a) for a in self.coeffs])

    def __pow__(self, e):
        r = Poly(self.field, (1,))
        a = self
        while e:
            if e & 1:
                r = r * a
            a = a * a
            e >>= 1
        return r

    def __divmod__(self, other):
        other = self._same(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        F = self.field
        r = list(self.coeffs)
        db = other.degree
        if len(r) - 1 < db:
            return Poly(F), self
        inv_lead = F.inv(other.lead())
        q = [0] * (len(r) - db)
        for i in range(len(r) - 1, db - 1, -1):
            c = r[i]
            if c:
                f = F.mul(c, inv_lead)
                q[i - db] = f
                for j, b in enumerate(other.coeffs):
                    if b:
                        r[i - db + j] ^= F.mul(f, b)
        return Poly(F, q), Poly(F, r[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self):
        if self.is_zero():
            return self
        return self.scale(self.field.inv(self.lead()))

    def __call__(self, a):
        """Horner evaluation at a raw field int."""
        F = self.field
        r = 0
        for c in reversed(self.coeffs):
            r = F.mul(r, a) ^ c
        return r

    def derivative(self):
        # char 2: d/dx x^i = i x^(i-1), i.e. only odd exponents survive
        return Poly(self.field, [c if i % 2 == 1 else 0 for i, c in enumerate(self.coeffs)][1:])

    def is_square(self):
        return all(c == 0 for c in self.coeffs[1::2])

    def sqrt(self):
        """Square root of a polynomial with only even-degree terms."""
        if not self.is_square():
            raise ValueError("not a square")
        F = self.field
        return Poly(F, [F.sqrt(c) for c in self.coeffs[0::2]])

    def map_coeffs(self, field, fn):
        return Poly(field, [fn(c) for c in self.coeffs])

    def compose_frobenius(self, times):
        """Apply the Frobenius power c -> c^(2^times) to each coefficient."""
        F = self.field
        return Poly(F, [F.frobenius(c, times) for c in self.coeffs])

    def square_mod(self, m):
        F = self.field
        sq = [0] * (2 * len(self.coeffs))
        for i, c in enumerate(self.coeffs):
            sq[2 * i] = F.mul(c, c)
        return Poly(F, sq) % m

    def mulmod(self, other, m):
        return (self * other) % m


def poly_gcd(a, b):
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_lcm(a, b):
    if a.is_zero() or b.is_zero():
        return Poly(a.field)
    return (a * b // poly_gcd(a, b)).monic()


def radical(f):
    """Product of the distinct monic irreducible factors of f."""
    f = f.monic()
    if f.degree <= 0:
        return Poly(f.field, (1,))
    d = f.derivative()
    if d.is_zero():
        return radical(f.sqrt())
    g = poly_gcd(f, d)
    return poly_lcm(f // g, radical(g))


def _x_pow_q_mod(m, k):
    """x^(2^k) mod m, by k squarings."""
    t = Poly.x(m.field) % m
    for _ in range(k):
        t = t.square_mod(m)
    return t


def irreducible_factor_degrees(f):
    """Degrees of the distinct irreducible factors of f over its own field."""
    F = f.field
    g = radical(f)
    degs = []
    x = Poly.x(F)
    h = x % g if g.degree > 0 else x
    i = 0
    while g.degree > 0:
        i += 1
        h = _x_pow_q_mod_from(h, g, F.k)
        d = poly_gcd(g, h + x)
        if d.degree > 0:
            degs.extend([i] * (d.degree // i))
            g = g // d
            h = h % g if g.degree > 0 else h
    return sorted(degs)


def _x_pow_q_mod_from(h, m, k):
    for _ in range(k):
        h = h.square_mod(m)
    return h


def _split_roots(g):
    """Distinct roots of g, which must be a product of distinct linear factors."""
    F = g.field
    g = g.monic()
    if g.degree == 0:
        return []
    if g.degree == 1:
        return [g.coeffs[0]]
    x = Poly.x(F)
    for j in range(F.k):
        beta = F.pow(0b10, j) if F.k > 1 else 1
        t = Poly(F, (0, beta)) % g
        acc = t
        for _ in range(F.k - 1):
            t = t.square_mod(g)
            acc = acc + t
        d = poly_gcd(g, acc)
        if 0 < d.degree < g.degree:
            return _split_roots(d) + _split_roots(g // d)
    raise AssertionError("trace splitting failed")


def _roots_in_field(p):
    """All roots of p lying in p's own coefficient field, with multiplicities."""
    F = p.field
    if p.is_zero():
        raise ValueError("zero polynomial")
    m = p.monic()
    if m.degree == 0:
        return []
    xq = _x_pow_q_mod(m, F.k)
    g = poly_gcd(m, xq + Poly.x(F))
    out = []
    for r in sorted(_split_roots(g)):
        lin = Poly(F, (r, 1))
        mult = 0
        q = m
        while True:
            qq, rem = divmod(q, lin)
            if not rem.is_zero():
                break
            q = qq
            mult += 1
        out.append((r, mult))
    return out


# --- places and divisors on P^1 --------------------------------------------

@dataclass(frozen=True)
class PlaceP1:
    """A geometric point of P^1: ``alpha is None`` means infinity.

    ``alpha`` is a raw int in ``ambient``; ``degree`` is the residue degree of
    the closed point under it relative to ``base``.
    """

    alpha: int | None
    ambient: GF2k | None = None
    base: GF2k | None = None
    degree: int = 1

    @property
    def is_infinity(self):
        return self.alpha is None

    def sort_key(self):
        return (1, 0) if self.alpha is None else (0, self.alpha)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __repr__(self):
        if self.alpha is None:
            return "P1(inf)"
        return f"P1({self.alpha:#x} in GF(2^{self.ambient.k}))"

    def minimal_polynomial(self):
        """Minimal polynomial over ``base`` (as a Poly over base) and root index."""
        if self.alpha is None:
            return None, 0
        A, B = self.ambient, self.base
        conj = [self.alpha]
        b = A.frobenius(self.alpha, B.k)
        while b != self.alpha:
            conj.append(b)
            b = A.frobenius(b, B.k)
        poly = Poly(A, (1,))
        for c in conj:
            poly = poly * Poly(A, (c, 1))
        res = _restriction(B, A)
        mp = poly.map_coeffs(B, res)
        return mp, sorted(conj).index(self.alpha)

    def to_json(self):
        if self.alpha is None:
            return "inf"
        mp, idx = self.minimal_polynomial()
        return {"minpoly": list(mp.coeffs), "root": idx}


INFINITY = PlaceP1(None)


class Divisor:
    """Finitely supported integer combination of places (zero entries dropped)."""

    __slots__ = ("support",)

    def __init__(self, support=None):
        s = {}
        for p, m in (support or {}).items():
            if m:
                s[p] = s.get(p, 0) + m
        self.support = {p: m for p, m in s.items() if m}

    def __add__(self, other):
        s = dict(self.support)
        for p, m in other.support.items():
            s[p] = s.get(p, 0) + m
        return Divisor(s)

    def __neg__(self):
        return Divisor({p: -m for p, m in self.support.items()})

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        return isinstance(other, Divisor) and self.support == other.support

    def __getitem__(self, p):
        return self.support.get(p, 0)

    def __len__(self):
        return len(self.support)

    def __iter__(self):
        return iter(sorted(self.support, key=_place_key))

    def items(self):
        return sorted(self.support.items(), key=lambda pm: _place_key(pm[0]))

    def degree(self):
        return sum(self.support.values())

    def zeros(self):
        return Divisor({p: m for p, m in self.support.items() if m > 0})

    def poles(self):
        """The pole divisor, with positive multiplicities."""
        return Divisor({p: -m for p, m in self.support.items() if m < 0})

    def scaled(self, n):
        return Divisor({p: n * m for p, m in self.support.items()})

    def __repr__(self):
        return "Divisor(" + ", ".join(f"{m}*{p!r}" for p, m in self.items()) + ")"

    def to_json(self):
        return [{"place": p.to_json(), "mult": m} for p, m in self.items()]


def _place_key(p):
    return p.sort_key()


class RationalFunction:
    """Reduced fraction num/den over a GF2k field with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        F = num.field
        if den is None:
            den = Poly(F, (1,))
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num, self.den = num, Poly(F, (1,))
            return
        g = poly_gcd(num, den)
        num, den = num // g, den // g
        c = F.inv(den.lead())
        self.num, self.den = num.scale(c), den.scale(c)

    @property
    def field(self):
        return self.num.field

    @classmethod
    def x(cls, field):
        return cls(Poly.x(field))

    @classmethod
    def const(cls, field, c):
        return cls(Poly.const(field, c))

    @classmethod
    def from_coeffs(cls, field, num, den=(1,)):
        return cls(Poly(field, num), Poly(field, den))

    def is_zero(self):
        return self.num.is_zero()

    def _lift(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Poly):
            return RationalFunction(other)
        return RationalFunction(Poly(self.field, (other.value if isinstance(other, FieldElement) else other,)))

    def __add__(self, other):
        o = self._lift(other)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __mul__(self, other):
        o = self._lift(other)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o.is_zero():
            raise ZeroDivisionError("division by zero function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __pow__(self, e):
        if e < 0:
            return RationalFunction(self.den, self.num) ** (-e)
        return RationalFunction(self.num ** e, self.den ** e)

    def __eq__(self, other):
        if isinstance(other, int):
            other = RationalFunction(Poly(self.field, (other,)))
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RationalFunction({self.num!r} / {self.den!r})"

    def derivative(self):
        # (n/d)' = (n'd - nd')/d^2
        n, d = self.num, self.den
        return RationalFunction(n.derivative() * d + n * d.derivative(), d * d)

    def is_square(self):
        return self.num.is_square() and self.den.is_square()

    def valuation_at_infinity(self):
        if self.is_zero():
            raise ValueError("valuation of the zero function")
        return self.den.degree - self.num.degree

    def splitting_degree(self):
        """Degree over the field of the splitting field of num * den."""
        degs = irreducible_factor_degrees(self.num) + irreducible_factor_degrees(self.den)
        return lcm(*degs) if degs else 1

    def to_json(self):
        return {"scale_num": list(self.num.coeffs), "scale_den": list(self.den.coeffs)}


def _mult_of_root(p, r):
    lin = Poly(p.field, (r, 1))
    m = 0
    while not p.is_zero():
        q, rem = divmod(p, lin)
        if not rem.is_zero():
            break
        p = q
        m += 1
    return m


def ratfun_valuation(r, P):
    """Order of vanishing of ``r`` at the place ``P`` (negative for poles)."""
    if r.is_zero():
        raise ValueError("valuation of the zero function")
    if P.is_infinity:
        return r.valuation_at_infinity()
    emb = r.field.embedding(P.ambient)
    num = r.num.map_coeffs(P.ambient, emb)
    den = r.den.map_coeffs(P.ambient, emb)
    return _mult_of_root(num, P.alpha) - _mult_of_root(den, P.alpha)


def roots_in_splitting_field(p, ambient=None):
    """Roots of p with multiplicities, each as a :class:`PlaceP1`.

    The roots are returned in an ambient field splitting p (the smallest
    standard one unless ``ambient`` is given), sorted by their bit pattern.
    Each place records the residue degree of its closed point over p's field.
    """
    if p.is_zero():
        raise ValueError("zero polynomial")
    base = p.field
    if ambient is None:
        degs = irreducible_factor_degrees(p)
        ambient = extension_field(base, lcm(*degs) if degs else 1)
    emb = base.embedding(ambient)
    q = p.map_coeffs(ambient, emb)
    out = []
    for r, m in _roots_in_field(q):
        out.append((PlaceP1(r, ambient, base, ambient.degree_over(r, base)), m))
    total = sum(m for _, m in out)
    if total != p.degree:
        raise ValueError("ambient field does not split the polynomial")
    return out


def divisor_of_ratfun(r, ambient=None):
    """Full divisor of r on P^1 over a splitting field; total degree 0."""
    if r.is_zero():
        raise ValueError("divisor of the zero function")
    base = r.field
    if ambient is None:
        ambient = extension_field(base, r.splitting_degree())
    support = {}
    if r.num.degree > 0:
        for P, m in roots_in_splitting_field(r.num, ambient):
            support[P] = support.get(P, 0) + m
    if r.den.degree > 0:
        for P, m in roots_in_splitting_field(r.den, ambient):
            support[P] = support.get(P, 0) - m
    vinf = r.valuation_at_infinity()
    if vinf:
        support[INFINITY] = vinf
    return Divisor(support)


def place_at(field, value, ambient=None):
    """The place x = value (value a raw int of ``field``) inside ``ambient``."""
    ambient = ambient or field
    a = field.embedding(ambient)(value)
    return PlaceP1(a, ambient, field, ambient.degree_over(a, field))
