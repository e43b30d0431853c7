"""Truncated Laurent series over a finite field.

A series is (valuation, coefficients, precision): coefficients[k] is the
coefficient of t^(valuation + k), and all exponents >= precision are
unknown.  Precision is absolute and exclusive and is tracked pessimistically
through arithmetic.  A series that is zero to its precision has an empty
coefficient tuple and valuation == precision.
"""

from __future__ import annotations

from .errors import PrecisionError
from .fields import FiniteField, FqElem

BIG = 1 << 60  # effectively-exact precision sentinel


class LaurentSeries:
    __slots__ = ("field", "val", "coeffs", "prec")

    def __init__(self, field: FiniteField, val: int, coeffs, prec: int):
        coeffs = list(coeffs)
        # clip to precision
        if val + len(coeffs) > prec:
            coeffs = coeffs[:max(0, prec - val)]
        # strip leading zeros
        lead = 0
        while lead < len(coeffs) and coeffs[lead].is_zero():
            lead += 1
        if lead:
            coeffs = coeffs[lead:]
            val += lead
        # strip trailing zeros (cosmetic only; precision already recorded)
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        if not coeffs:
            val = prec
        self.field = field
        self.val = val
        self.coeffs = tuple(coeffs)
        self.prec = prec

    # -- constructors -----------------------------------------------------------
    @staticmethod
    def zero(field, prec=BIG):
        return LaurentSeries(field, prec, (), prec)

    @staticmethod
    def const(field, c: FqElem, prec=BIG):
        return LaurentSeries(field, 0, (c,), prec)

    @staticmethod
    def one(field, prec=BIG):
        return LaurentSeries.const(field, field.one(), prec)

    @staticmethod
    def monomial(field, c: FqElem, k: int, prec=BIG):
        return LaurentSeries(field, k, (c,), prec)

    @staticmethod
    def t(field, prec=BIG):
        return LaurentSeries.monomial(field, field.one(), 1, prec)

    # -- queries ----------------------------------------------------------------
    def is_zero(self):
        """Zero to working precision."""
        return not self.coeffs

    def valuation(self):
        """Exact valuation; PrecisionError if zero to precision."""
        if not self.coeffs:
            raise PrecisionError("valuation of a series that vanishes to precision")
        return self.val

    def valuation_or(self, default=None):
        return self.val if self.coeffs else default

    def coeff(self, k: int) -> FqElem:
        """Coefficient of t^k; PrecisionError for k >= precision."""
        if k >= self.prec:
            raise PrecisionError(f"coefficient t^{k} beyond precision {self.prec}")
        if k < self.val or k >= self.val + len(self.coeffs):
            return self.field.zero()
        return self.coeffs[k - self.val]

    def __eq__(self, other):
        return (isinstance(other, LaurentSeries) and self.val == other.val
                and self.coeffs == other.coeffs and self.prec == other.prec)

    def agrees_with(self, other, upto: int) -> bool:
        """Coefficientwise equality for all exponents < upto."""
        if min(self.prec, other.prec) < upto:
            raise PrecisionError("comparison beyond known precision")
        lo = min(self.val, other.val)
        for k in range(lo, upto):
            if not (self.coeff(k) == other.coeff(k)):
                return False
        return True

    # -- arithmetic ---------------------------------------------------------------
    def __add__(self, other):
        prec = min(self.prec, other.prec)
        if not self.coeffs:
            return other.truncate(prec)
        if not other.coeffs:
            return self.truncate(prec)
        lo = min(self.val, other.val)
        hi = min(prec, max(self.val + len(self.coeffs),
                           other.val + len(other.coeffs)))
        z = self.field.zero()
        out = [z] * max(0, hi - lo)
        for i, c in enumerate(self.coeffs):
            k = self.val + i
            if k < hi:
                out[k - lo] = out[k - lo] + c
        for i, c in enumerate(other.coeffs):
            k = other.val + i
            if k < hi:
                out[k - lo] = out[k - lo] + c
        return LaurentSeries(self.field, lo, out, prec)

    def __neg__(self):
        return LaurentSeries(self.field, self.val,
                             [-c for c in self.coeffs], self.prec)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, FqElem):
            return LaurentSeries(self.field, self.val,
                                 [c * other for c in self.coeffs], self.prec)
        prec = min(self.prec + other.valuation_or(other.prec),
                   other.prec + self.valuation_or(self.prec))
        if not self.coeffs or not other.coeffs:
            return LaurentSeries.zero(self.field, prec)
        n_out = min(prec - self.val - other.val,
                    len(self.coeffs) + len(other.coeffs) - 1)
        if n_out <= 0:
            return LaurentSeries.zero(self.field, prec)
        z = self.field.zero()
        out = [z] * n_out
        for i, a in enumerate(self.coeffs):
            if a.is_zero() or i >= n_out:
                continue
            jmax = min(len(other.coeffs), n_out - i)
            for j in range(jmax):
                b = other.coeffs[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return LaurentSeries(self.field, self.val + other.val, out, prec)

    def inv(self):
        """Series inverse of a unit-times-t^v; PrecisionError when zero."""
        if not self.coeffs:
            raise PrecisionError("inverting a series that vanishes to precision")
        if self.prec >= BIG:
            if len(self.coeffs) == 1:
                return LaurentSeries.monomial(self.field, self.coeffs[0].inv(),
                                              -self.val)
            raise PrecisionError("truncate an exact series before inverting")
        n = self.prec - self.val
        z = self.field.zero()
        a = list(self.coeffs) + [z] * (n - len(self.coeffs))
        lead_inv = a[0].inv()
        out = [z] * n
        out[0] = lead_inv
        for k in range(1, n):
            s = z
            for j in range(1, min(k, len(self.coeffs) - 1) + 1):
                if not a[j].is_zero():
                    s = s + a[j] * out[k - j]
            out[k] = -lead_inv * s
        return LaurentSeries(self.field, -self.val, out, self.prec - 2 * self.val)

    def __truediv__(self, other):
        return self * other.inv()

    def __pow__(self, e: int):
        if e < 0:
            return self.inv() ** (-e)
        if e == 0:
            return LaurentSeries.one(self.field,
                                     self.prec - self.valuation_or(0) if self.coeffs else BIG)
        result = None
        base = self
        while e:
            if e & 1:
                result = base if result is None else result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def shift(self, k: int):
        """Multiply by t^k."""
        return LaurentSeries(self.field, self.val + k, self.coeffs, self.prec + k)

    def truncate(self, prec: int):
        if prec >= self.prec:
            return self
        return LaurentSeries(self.field, self.val, self.coeffs, prec)

    def derivative(self):
        """d/dt."""
        f = self.field
        out = []
        for i, c in enumerate(self.coeffs):
            k = self.val + i
            out.append(c * f.from_int(k % f.p))
        return LaurentSeries(f, self.val - 1, out, self.prec - 1)

    def integrate(self):
        """The t-primitive with no constant term; requires no t^(-1) term
        and no coefficients at exponents == -1 mod p (non-integrable)."""
        f = self.field
        out = []
        for i, c in enumerate(self.coeffs):
            k = self.val + i
            if (k + 1) % f.p == 0:
                if not c.is_zero():
                    raise ArithmeticError(
                        f"series not integrable: t^{k} coefficient nonzero")
                out.append(f.zero())
            else:
                out.append(c / f.from_int((k + 1) % f.p))
        return LaurentSeries(f, self.val + 1, out, self.prec + 1)

    def pth_power(self):
        """Frobenius: exponents scale by p, coefficients by x -> x^p."""
        f = self.field
        p = f.p
        if not self.coeffs:
            return LaurentSeries.zero(f, p * self.prec)
        z = f.zero()
        out = [z] * ((len(self.coeffs) - 1) * p + 1)
        for i, c in enumerate(self.coeffs):
            if not c.is_zero():
                out[i * p] = c.frobenius()
        return LaurentSeries(f, self.val * p, out, p * self.prec)

    def pth_root(self):
        """Inverse Frobenius; requires support at exponents == 0 mod p."""
        f = self.field
        p = f.p
        if not self.coeffs:
            return LaurentSeries.zero(f, -(-self.prec // p))
        if self.val % p:
            raise ArithmeticError("series valuation not divisible by p")
        n = (len(self.coeffs) + p - 1) // p
        out = [f.zero()] * n
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            if i % p:
                raise ArithmeticError("series is not a p-th power")
            out[i // p] = c.pth_root()
        return LaurentSeries(f, self.val // p, out, -(-self.prec // p))

    def remove_multiples_of_p(self):
        """Drop all terms t^(pk); used when choosing Newton-step primitives."""
        f = self.field
        out = [c if (self.val + i) % f.p else f.zero()
               for i, c in enumerate(self.coeffs)]
        return LaurentSeries(f, self.val, out, self.prec)

    def only_multiples_of_p(self):
        f = self.field
        out = [f.zero() if (self.val + i) % f.p else c
               for i, c in enumerate(self.coeffs)]
        return LaurentSeries(f, self.val, out, self.prec)

    def map_coeffs(self, func, field=None):
        return LaurentSeries(field or self.field, self.val,
                             [func(c) for c in self.coeffs], self.prec)

    def __str__(self):
        if not self.coeffs:
            return f"O(t^{self.prec})"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            k = self.val + i
            cs = str(c)
            if k == 0:
                parts.append(cs)
            else:
                tp = "t" if k == 1 else f"t^{k}"
                parts.append(tp if cs == "1" else f"({cs})*{tp}")
        body = " + ".join(parts) if parts else "0"
        if self.prec >= BIG:
            return body
        return f"{body} + O(t^{self.prec})"

    def __repr__(self):
        return f"LaurentSeries({self})"


def eval_poly(poly, s: LaurentSeries, conv=None) -> LaurentSeries:
    """Evaluate a DensePoly at a series by Horner; conv maps coefficients
    into the series' field (defaults to identity)."""
    f = s.field
    if conv is None:
        conv = lambda c: c
    acc = LaurentSeries.zero(f, BIG)
    for c in reversed(poly.coeffs):
        acc = acc * s + LaurentSeries.const(f, conv(c), BIG)
    return acc


def eval_ratfunc(r, s: LaurentSeries, conv=None) -> LaurentSeries:
    num = eval_poly(r.num, s, conv)
    den = eval_poly(r.den, s, conv)
    return num * den.inv()
