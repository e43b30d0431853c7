"""Dense univariate polynomials over F_q, rational functions F_q(x), and
seeded Cantor-Zassenhaus factorization.

DensePoly stores coefficients lowest-degree first with no trailing zeros,
so the empty tuple is the zero polynomial and degree == len - 1.
"""

from __future__ import annotations

import random

from .errors import InputError
from .fields import FiniteField, FqElem

KARATSUBA_THRESHOLD = 32


class DensePoly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: FiniteField, coeffs):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        self.field = field
        self.coeffs = tuple(coeffs)

    # -- constructors ---------------------------------------------------------
    @staticmethod
    def zero(field):
        return DensePoly(field, ())

    @staticmethod
    def one(field):
        return DensePoly(field, (field.one(),))

    @staticmethod
    def const(field, c: FqElem):
        return DensePoly(field, (c,))

    @staticmethod
    def x(field):
        return DensePoly(field, (field.zero(), field.one()))

    @staticmethod
    def from_ints(field, ints):
        return DensePoly(field, [field.from_int(n) for n in ints])

    # -- basic queries ----------------------------------------------------------
    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def is_one(self):
        return len(self.coeffs) == 1 and self.coeffs[0] == self.field.one()

    def lc(self) -> FqElem:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.field.zero()

    def __eq__(self, other):
        return (isinstance(other, DensePoly) and self.field == other.field
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.field.p, self.field.b, self.coeffs))

    # -- arithmetic -------------------------------------------------------------
    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return DensePoly(self.field, out)

    def __sub__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        z = self.field.zero()
        out = [z] * n
        for i, c in enumerate(self.coeffs):
            out[i] = c
        for i, c in enumerate(other.coeffs):
            out[i] = out[i] - c
        return DensePoly(self.field, out)

    def __neg__(self):
        return DensePoly(self.field, [-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, FqElem):
            return DensePoly(self.field, [c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return DensePoly.zero(self.field)
        return DensePoly(self.field, _mul_seq(self.field, a, b))

    def scale(self, c: FqElem):
        return DensePoly(self.field, [x * c for x in self.coeffs])

    def shift(self, k: int):
        """Multiply by x^k (k >= 0)."""
        if self.is_zero() or k == 0:
            return self if k == 0 else self
        return DensePoly(self.field, (self.field.zero(),) * k + self.coeffs)

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("polynomial powers must be nonnegative")
        result = DensePoly.one(self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def divmod(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        a = list(self.coeffs)
        b = other.coeffs
        db = len(b) - 1
        if len(a) - 1 < db:
            return DensePoly.zero(self.field), self
        inv_lead = b[-1].inv()
        q = [self.field.zero()] * (len(a) - db)
        for k in range(len(a) - db - 1, -1, -1):
            c = a[db + k] * inv_lead
            if not c.is_zero():
                q[k] = c
                for i, bi in enumerate(b):
                    a[k + i] = a[k + i] - c * bi
        return DensePoly(self.field, q), DensePoly(self.field, a[:db])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def div_exact(self, other):
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError("division is not exact")
        return q

    def monic(self):
        if self.is_zero():
            return self
        return self.scale(self.lc().inv())

    def gcd(self, other):
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def xgcd(self, other):
        """(g, s, t) with s*self + t*other = g, g monic."""
        f = self.field
        r0, r1 = self, other
        s0, s1 = DensePoly.one(f), DensePoly.zero(f)
        t0, t1 = DensePoly.zero(f), DensePoly.one(f)
        while not r1.is_zero():
            q, r = r0.divmod(r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
            t0, t1 = t1, t0 - q * t1
        if r0.is_zero():
            return r0, s0, t0
        c = r0.lc().inv()
        return r0.scale(c), s0.scale(c), t0.scale(c)

    def powmod(self, e: int, m: "DensePoly"):
        result = DensePoly.one(self.field) % m
        base = self % m
        while e:
            if e & 1:
                result = (result * base) % m
            base = (base * base) % m
            e >>= 1
        return result

    def derivative(self):
        f = self.field
        out = []
        for i in range(1, len(self.coeffs)):
            out.append(self.coeffs[i] * f.from_int(i))
        return DensePoly(f, out)

    def eval(self, x: FqElem) -> FqElem:
        acc = x.field.zero()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_map(self, x, zero, conv):
        """Horner evaluation in any ring: conv lifts coefficients."""
        acc = zero
        for c in reversed(self.coeffs):
            acc = acc * x + conv(c)
        return acc

    def map_coeffs(self, func, field=None):
        return DensePoly(field or self.field, [func(c) for c in self.coeffs])

    def reverse(self, n=None):
        """x^n * f(1/x) for n >= degree."""
        if n is None:
            n = self.degree
        out = [self.field.zero()] * (n + 1)
        for i, c in enumerate(self.coeffs):
            out[n - i] = c
        return DensePoly(self.field, out)

    def shifted_arg(self, c: FqElem):
        """f(x + c) by Horner on the factored form."""
        f = self.field
        out = DensePoly.zero(f)
        xc = DensePoly(f, (c, f.one()))
        for coeff in reversed(self.coeffs):
            out = out * xc + DensePoly.const(f, coeff)
        return out

    def pth_power(self):
        """f^p using the Frobenius on coefficients (exponents times p)."""
        f = self.field
        if self.is_zero():
            return self
        out = [f.zero()] * (self.degree * f.p + 1)
        for i, c in enumerate(self.coeffs):
            out[i * f.p] = c.frobenius()
        return DensePoly(f, out)

    def pth_root(self):
        """Inverse of pth_power; requires support in exponents divisible by p."""
        f = self.field
        if self.is_zero():
            return self
        out = [f.zero()] * (self.degree // f.p + 1)
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            if i % f.p:
                raise ArithmeticError("polynomial is not a p-th power")
            out[i // f.p] = c.pth_root()
        return DensePoly(f, out)

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        ext = self.field.b > 1
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c.is_zero():
                continue
            cs = str(c)
            if i == 0:
                parts.append(f"({cs})" if ext and ("+" in cs or "*" in cs) else cs)
                continue
            xp = "x" if i == 1 else f"x^{i}"
            if cs == "1":
                parts.append(xp)
            elif ext and ("+" in cs or "*" in cs):
                parts.append(f"({cs})*{xp}")
            else:
                parts.append(f"{cs}*{xp}")
        return " + ".join(parts)

    def __repr__(self):
        return f"DensePoly({self})"


def _mul_seq(field, a, b):
    if min(len(a), len(b)) >= KARATSUBA_THRESHOLD:
        return _mul_karatsuba(field, list(a), list(b))
    out = [field.zero()] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai.is_zero():
            continue
        for j, bj in enumerate(b):
            out[i + j] = out[i + j] + ai * bj
    return out


def _mul_karatsuba(field, a, b):
    n = max(len(a), len(b))
    if min(len(a), len(b)) < KARATSUBA_THRESHOLD:
        return _mul_seq(field, a, b)
    h = n // 2
    a0, a1 = a[:h], a[h:]
    b0, b1 = b[:h], b[h:]
    z = field.zero()
    p0 = _mul_karatsuba(field, a0, b0) if a0 and b0 else []
    p2 = _mul_karatsuba(field, a1, b1) if a1 and b1 else []
    sa = [x + y for x, y in _zip_pad(a0, a1, z)]
    sb = [x + y for x, y in _zip_pad(b0, b1, z)]
    p1 = _mul_karatsuba(field, sa, sb) if sa and sb else []
    out = [z] * (len(a) + len(b) - 1)
    for i, c in enumerate(p0):
        out[i] = out[i] + c
    for i, c in enumerate(p1):
        out[h + i] = out[h + i] + c
    for i, c in enumerate(p0):
        out[h + i] = out[h + i] - c
    for i, c in enumerate(p2):
        out[h + i] = out[h + i] - c
    for i, c in enumerate(p2):
        out[2 * h + i] = out[2 * h + i] + c
    return out


def _zip_pad(a, b, z):
    n = max(len(a), len(b))
    for i in range(n):
        yield (a[i] if i < len(a) else z), (b[i] if i < len(b) else z)


# ---------------------------------------------------------------------------
# factorization

def poly_factor(f: DensePoly, seed: int = 0):
    """Monic irreducible factors of f with multiplicities, sorted canonically.

    The product of factor^mult equals f up to its leading coefficient.
    Cantor-Zassenhaus splitting draws from random.Random(seed), so runs are
    reproducible; the output ordering is canonical regardless.
    """
    if f.is_zero():
        raise InputError("cannot factor the zero polynomial")
    rng = random.Random(seed)
    work = f.monic()
    found: dict = {}
    _factor_sqfree_tower(work, 1, found, rng)
    items = [(poly, mult) for poly, mult in found.items()]
    items.sort(key=lambda t: (t[0].degree, tuple(c.c for c in t[0].coeffs)))
    return items


def _factor_sqfree_tower(f, mult, found, rng):
    """Char-p squarefree decomposition, recursing into p-th-power parts."""
    if f.degree < 1:
        return
    fld = f.field
    d = f.derivative()
    if d.is_zero():
        _factor_sqfree_tower(f.pth_root(), mult * fld.p, found, rng)
        return
    c = f.gcd(d)
    w = f.div_exact(c)
    i = 1
    while w.degree >= 1:
        y = w.gcd(c)
        z = w.div_exact(y)
        if z.degree >= 1:
            for irr in _factor_squarefree(z, rng):
                found[irr] = found.get(irr, 0) + i * mult
        w = y
        c = c.div_exact(y)
        i += 1
    if c.degree >= 1:
        # remaining factors all have multiplicity divisible by p
        _factor_sqfree_tower(c.pth_root(), mult * fld.p, found, rng)


def _factor_squarefree(f, rng):
    """Irreducible factors of a squarefree monic polynomial."""
    out = []
    fld = f.field
    x = DensePoly.x(fld)
    h = x
    d = 0
    rem = f
    while rem.degree > 2 * (d + 1) - 1 and rem.degree > 0:
        d += 1
        h = h.powmod(fld.q, rem)
        g = rem.gcd(h - x)
        if g.degree > 0:
            out.extend(_equal_degree_split(g, d, rng))
            rem = rem.div_exact(g)
            h = h % rem
    if rem.degree > 0:
        out.append(rem.monic())
    return out


def _equal_degree_split(f, d, rng):
    """Split a product of distinct irreducibles of equal degree d."""
    if f.degree == d:
        return [f.monic()]
    fld = f.field
    n = f.degree
    while True:
        r = DensePoly(fld, [fld.random(rng) for _ in range(n)])
        if r.degree < 1:
            continue
        if fld.p == 2:
            g = r
            acc = r % f
            cur = acc
            bits = d * _log2_int(fld.q)
            for _ in range(bits - 1):
                cur = (cur * cur) % f
                acc = acc + cur
            g = f.gcd(acc)
        else:
            e = (fld.q ** d - 1) // 2
            h = r.powmod(e, f)
            g = f.gcd(h - DensePoly.one(fld))
        if 0 < g.degree < n:
            return _equal_degree_split(g, d, rng) + \
                _equal_degree_split(f.div_exact(g), d, rng)


def _log2_int(n):
    k = 0
    while (1 << (k + 1)) <= n:
        k += 1
    return k


def is_irreducible(f: DensePoly) -> bool:
    """gcd probes against x^(q^i) - x, as in Rabin's test."""
    if f.degree < 1:
        return False
    if f.degree == 1:
        return True
    fld = f.field
    x = DensePoly.x(fld)
    n = f.degree
    xq = x.powmod(fld.q ** n, f)
    if not (xq - x).is_zero():
        return False
    for ell in sorted(set(_prime_divisors(n))):
        xe = x.powmod(fld.q ** (n // ell), f)
        if f.gcd(xe - x).degree > 0:
            return False
    return True


def _prime_divisors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# rational functions

class RatFunc:
    """Element of F_q(x): num/den with den monic and gcd(num, den) = 1."""

    __slots__ = ("num", "den")

    def __init__(self, num: DensePoly, den: DensePoly = None, reduce=True):
        if den is None:
            den = DensePoly.one(num.field)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if reduce:
            if num.is_zero():
                den = DensePoly.one(num.field)
            else:
                g = num.gcd(den)
                if g.degree > 0:
                    num = num.div_exact(g)
                    den = den.div_exact(g)
                c = den.lc()
                if not (c == num.field.one()):
                    ci = c.inv()
                    num = num.scale(ci)
                    den = den.scale(ci)
        self.num = num
        self.den = den

    @property
    def field(self):
        return self.num.field

    @staticmethod
    def zero(field):
        return RatFunc(DensePoly.zero(field), DensePoly.one(field), reduce=False)

    @staticmethod
    def one(field):
        return RatFunc(DensePoly.one(field), DensePoly.one(field), reduce=False)

    @staticmethod
    def from_poly(p: DensePoly):
        return RatFunc(p, DensePoly.one(p.field), reduce=False)

    @staticmethod
    def x(field):
        return RatFunc.from_poly(DensePoly.x(field))

    @staticmethod
    def const(field, c: FqElem):
        return RatFunc.from_poly(DensePoly.const(field, c))

    def is_zero(self):
        return self.num.is_zero()

    def is_poly(self):
        return self.den.degree == 0

    @property
    def degree(self):
        """max(deg num, deg den); -1 for zero."""
        return max(self.num.degree, self.den.degree)

    def __add__(self, other):
        return RatFunc(self.num * other.den + other.num * self.den,
                       self.den * other.den)

    def __sub__(self, other):
        return RatFunc(self.num * other.den - other.num * self.den,
                       self.den * other.den)

    def __neg__(self):
        return RatFunc(-self.num, self.den, reduce=False)

    def __mul__(self, other):
        if isinstance(other, FqElem):
            return RatFunc(self.num.scale(other), self.den)
        return RatFunc(self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def inv(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFunc(self.den, self.num)

    def __pow__(self, e):
        if e < 0:
            return self.inv() ** (-e)
        result = RatFunc.one(self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def derive(self):
        """d/dx via the quotient rule."""
        n, d = self.num, self.den
        return RatFunc(n.derivative() * d - n * d.derivative(), d * d)

    def pth_power(self):
        return RatFunc(self.num.pth_power(), self.den.pth_power(), reduce=False)

    def pth_root(self):
        return RatFunc(self.num.pth_root(), self.den.pth_root(), reduce=False)

    def eval(self, x: FqElem) -> FqElem:
        dv = self.den.eval(x)
        if dv.is_zero():
            raise ZeroDivisionError("pole at evaluation point")
        return self.num.eval(x) / dv

    def __eq__(self, other):
        return (isinstance(other, RatFunc) and self.num == other.num
                and self.den == other.den)

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def __repr__(self):
        return f"RatFunc({self})"


class RatFuncField:
    """Field context for F_q(x); satisfies the coefficient-field protocol
    used by UPoly and OrePoly (zero/one/characteristic)."""

    __slots__ = ("base",)

    def __init__(self, base: FiniteField):
        self.base = base

    @property
    def characteristic(self):
        return self.base.p

    def zero(self):
        return RatFunc.zero(self.base)

    def one(self):
        return RatFunc.one(self.base)

    def coerce(self, v):
        if isinstance(v, RatFunc):
            return v
        if isinstance(v, DensePoly):
            return RatFunc.from_poly(v)
        if isinstance(v, FqElem):
            return RatFunc.const(self.base, v)
        raise TypeError(f"cannot coerce {v!r} into F_q(x)")

    def __eq__(self, other):
        return isinstance(other, RatFuncField) and self.base == other.base

    def __hash__(self):
        return hash(("ratfunc", self.base))

    def __repr__(self):
        return f"FractionField({self.base!r}[x])"


# ---------------------------------------------------------------------------
# generic univariate polynomials over any of our field-like elements
# (FqElem, RatFunc, FFElem); used for curve arithmetic and Hensel lifting

class UPoly:
    """Univariate polynomial with coefficients in a field given by a context
    object exposing zero()/one()."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx, coeffs):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        self.ctx = ctx
        self.coeffs = tuple(coeffs)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def lc(self):
        return self.coeffs[-1]

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UPoly(self.ctx, out)

    def __sub__(self, other):
        out = list(self.coeffs)
        out += [self.ctx.zero()] * (len(other.coeffs) - len(out))
        for i, c in enumerate(other.coeffs):
            out[i] = out[i] - c
        return UPoly(self.ctx, out)

    def __neg__(self):
        return UPoly(self.ctx, [-c for c in self.coeffs])

    def __mul__(self, other):
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UPoly(self.ctx, ())
        out = [self.ctx.zero()] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai.is_zero():
                continue
            for j, bj in enumerate(b):
                out[i + j] = out[i + j] + ai * bj
        return UPoly(self.ctx, out)

    def scale(self, c):
        return UPoly(self.ctx, [x * c for x in self.coeffs])

    def divmod(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        a = list(self.coeffs)
        b = other.coeffs
        db = len(b) - 1
        if len(a) - 1 < db:
            return UPoly(self.ctx, ()), self
        inv_lead = self.ctx.one() / b[-1]
        q = [self.ctx.zero()] * (len(a) - db)
        for k in range(len(a) - db - 1, -1, -1):
            c = a[db + k] * inv_lead
            if not c.is_zero():
                q[k] = c
                for i, bi in enumerate(b):
                    a[k + i] = a[k + i] - c * bi
        return UPoly(self.ctx, q), UPoly(self.ctx, a[:db])

    def __mod__(self, other):
        return self.divmod(other)[1]

    def monic(self):
        if self.is_zero():
            return self
        inv = self.ctx.one() / self.lc()
        return self.scale(inv)

    def gcd(self, other):
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def xgcd(self, other):
        one, zero = self.ctx.one(), self.ctx.zero()
        r0, r1 = self, other
        s0, s1 = UPoly(self.ctx, (one,)), UPoly(self.ctx, ())
        t0, t1 = UPoly(self.ctx, ()), UPoly(self.ctx, (one,))
        while not r1.is_zero():
            q, r = r0.divmod(r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
            t0, t1 = t1, t0 - q * t1
        if r0.is_zero():
            return r0, s0, t0
        inv = one / r0.lc()
        return r0.scale(inv), s0.scale(inv), t0.scale(inv)

    def derivative_map(self, derive):
        """Formal derivative in the coefficient direction is not meaningful
        here; this maps coefficients through a derivation (used for d/dx of
        Y-polynomials)."""
        return UPoly(self.ctx, [derive(c) for c in self.coeffs])

    def eval(self, v):
        acc = self.ctx.zero()
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def __eq__(self, other):
        return isinstance(other, UPoly) and self.coeffs == other.coeffs

    def __repr__(self):
        return f"UPoly({list(self.coeffs)!r})"


# ---------------------------------------------------------------------------
# bivariate helpers: polynomials in Y with DensePoly (in x) coefficients are
# represented as plain lists [A_0, ..., A_d]; only what the curve layer needs

def biv_degree_x(ycoeffs) -> int:
    return max((c.degree for c in ycoeffs if not c.is_zero()), default=-1)


def biv_eval_y(ycoeffs, x0: FqElem):
    """Specialize x := x0, returning the Y-polynomial coefficient list."""
    return [c.eval(x0) for c in ycoeffs]


def biv_derivative_y(ycoeffs):
    fld = ycoeffs[0].field
    out = []
    for i in range(1, len(ycoeffs)):
        out.append(ycoeffs[i].scale(fld.from_int(i)))
    return out


def biv_derivative_x(ycoeffs):
    return [c.derivative() for c in ycoeffs]


def biv_content_y(ycoeffs) -> DensePoly:
    fld = ycoeffs[0].field
    g = DensePoly.zero(fld)
    for c in ycoeffs:
        g = g.gcd(c)
        if g.degree == 0 and not g.is_zero():
            break
    return g


def resultant_y(acoeffs, bcoeffs, field) -> DensePoly:
    """Resultant of two Y-polynomials with DensePoly coefficients, computed
    as a Bareiss (fraction-free) determinant of the Sylvester matrix."""
    m = len(acoeffs) - 1
    n = len(bcoeffs) - 1
    if m < 0 or n < 0:
        return DensePoly.zero(field)
    size = m + n
    if size == 0:
        return DensePoly.one(field)
    rows = []
    for i in range(n):
        row = [DensePoly.zero(field)] * size
        for j, c in enumerate(reversed(acoeffs)):
            row[i + j] = c
        rows.append(row)
    for i in range(m):
        row = [DensePoly.zero(field)] * size
        for j, c in enumerate(reversed(bcoeffs)):
            row[i + j] = c
        rows.append(row)
    return _bareiss_det(rows, field)


def _bareiss_det(rows, field):
    n = len(rows)
    sign = 1
    prev = DensePoly.one(field)
    for k in range(n - 1):
        if rows[k][k].is_zero():
            for i in range(k + 1, n):
                if not rows[i][k].is_zero():
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return DensePoly.zero(field)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = rows[i][j] * rows[k][k] - rows[i][k] * rows[k][j]
                rows[i][j] = num.div_exact(prev)
            rows[i][k] = DensePoly.zero(field)
        prev = rows[k][k]
    det = rows[n - 1][n - 1]
    if sign < 0:
        det = -det
    return det
