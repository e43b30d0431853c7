"""The function field K_N = F_q(x)[a] cut out by an irreducible separable
bivariate polynomial N_*(x, Y), with its canonical derivation d/dx, the
Frobenius endomorphism, and the map f |-> f^(p-1) + f^p.

Elements are coordinate vectors on the basis 1, a, ..., a^(d_y - 1) with
rational-function entries.  The derivation extends d/dx through implicit
differentiation: a' = -(dN/dx)(x,a) / (dN/dY)(x,a), which is well defined
because N_* is separable in Y.
"""

from __future__ import annotations

import itertools

from .errors import InputError
from .fields import FiniteField, FqElem, field, embedding
from .linalg import solve_fp
from .polys import (DensePoly, RatFunc, RatFuncField, UPoly, biv_content_y,
                    biv_derivative_x, biv_derivative_y, biv_degree_x,
                    is_irreducible, poly_factor, resultant_y)


class FFElem:
    """Element of K_N: coords[i] is the coefficient of a^i."""

    __slots__ = ("curve", "coords")

    def __init__(self, curve, coords):
        coords = tuple(coords)
        if len(coords) != curve.d_y:
            raise ValueError("coordinate vector has wrong length")
        self.curve = curve
        self.coords = coords

    def is_zero(self):
        return all(c.is_zero() for c in self.coords)

    def __add__(self, other):
        return FFElem(self.curve, [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        return FFElem(self.curve, [a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return FFElem(self.curve, [-a for a in self.coords])

    def __mul__(self, other):
        if isinstance(other, RatFunc):
            return FFElem(self.curve, [a * other for a in self.coords])
        return self.curve._mul(self, other)

    def __truediv__(self, other):
        return self * self.curve._inv(other)

    def inv(self):
        return self.curve._inv(self)

    def __pow__(self, e):
        if e < 0:
            return self.inv() ** (-e)
        result = self.curve.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def derive(self):
        return self.curve.derive(self)

    def __eq__(self, other):
        return (isinstance(other, FFElem) and self.curve is other.curve
                and self.coords == other.coords)

    def __hash__(self):
        return hash(self.coords)

    def degree_measure(self):
        """max over coordinates of max(deg num, deg den)."""
        return max((c.degree for c in self.coords), default=-1)

    def __str__(self):
        parts = []
        for i, c in enumerate(self.coords):
            if c.is_zero():
                continue
            ap = "" if i == 0 else ("a" if i == 1 else f"a^{i}")
            cs = f"({c.num}) / ({c.den})" if c.den.degree > 0 else f"({c.num})"
            parts.append(cs if not ap else f"{cs} * {ap}")
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"FFElem({self})"


class CurveField:
    """F_q(x)[Y] / (N_*) together with cached derivation and Frobenius data.

    ycoeffs holds the coefficients of Y^0 .. Y^(d_y) as polynomials in x.
    Construction checks that N_* has unit content, is separable in Y and is
    irreducible over F_q(x); violations raise InputError.
    """

    def __init__(self, base: FiniteField, ycoeffs, seed: int = 0,
                 check_irreducible: bool = True):
        ycoeffs = list(ycoeffs)
        while ycoeffs and ycoeffs[-1].is_zero():
            ycoeffs.pop()
        if len(ycoeffs) < 2:
            raise InputError("N_* must have degree >= 1 in Y")
        self.base = base
        self.ycoeffs = tuple(ycoeffs)
        self.d_y = len(ycoeffs) - 1
        self.d_x = biv_degree_x(ycoeffs)
        self.lc = ycoeffs[-1]
        self.seed = seed
        self.ratfield = RatFuncField(base)
        content = biv_content_y(ycoeffs)
        if content.degree > 0:
            raise InputError("N_* must have unit content in Y "
                             f"(common factor {content})")
        # separability: gcd(N_*, dN_*/dY) over F_q(x)
        np_u = self._as_upoly(ycoeffs)
        ndy = biv_derivative_y(ycoeffs)
        if self.d_y >= 2:
            g = np_u.gcd(self._as_upoly(ndy))
            if g.degree > 0:
                raise InputError("N_* is not separable in Y")
        # discriminant Disc_Y(N_*) = +/- Res(N_*, dN_*/dY) / lc
        if self.d_y == 1:
            self.disc = DensePoly.one(base)
        else:
            res = resultant_y(list(ycoeffs), ndy, base)
            d = self.d_y
            disc = res.div_exact(self.lc)
            if (d * (d - 1) // 2) % 2:
                disc = -disc
            self.disc = disc
        if self.disc.is_zero():
            raise InputError("vanishing discriminant: N_* not separable")
        if check_irreducible and self.d_y >= 2:
            if not _is_irreducible_bivariate(self):
                raise InputError("N_* is reducible over F_q(x)")
        # reduction table: a^(d_y + k) for k = 0 .. d_y - 2
        d = self.d_y
        lc_r = RatFunc.from_poly(self.lc)
        top = [RatFunc.from_poly(-c) / lc_r for c in ycoeffs[:-1]]
        red = [top]
        for _ in range(d - 2):
            prev = red[-1]
            nxt = [RatFunc.zero(base)] + prev[:-1]
            if not prev[-1].is_zero():
                nxt = [nc + prev[-1] * tc for nc, tc in zip(nxt, top)]
            red.append(nxt)
        self._red = red
        self._zero = RatFunc.zero(base)
        # a' = -(dN/dx)(x,a) / (dN/dY)(x,a)
        ndx = biv_derivative_x(ycoeffs)
        num = self._from_ypolys(ndx)
        den = self._from_ypolys(ndy)
        self.aprime = (-num) * self._inv(den)
        self.ap = self.gen() ** base.p  # a^p on the basis

    # -- element constructors ---------------------------------------------------
    def zero(self):
        return FFElem(self, [self._zero] * self.d_y)

    def one(self):
        return self.from_ratfunc(RatFunc.one(self.base))

    @property
    def characteristic(self):
        return self.base.p

    def from_ratfunc(self, r: RatFunc):
        return FFElem(self, [r] + [self._zero] * (self.d_y - 1))

    def from_coords(self, coords):
        coords = list(coords)
        coords += [self._zero] * (self.d_y - len(coords))
        return FFElem(self, coords)

    def gen(self):
        """The element a (root of N_*)."""
        if self.d_y == 1:
            lc_r = RatFunc.from_poly(self.lc)
            return FFElem(self, [RatFunc.from_poly(-self.ycoeffs[0]) / lc_r])
        coords = [self._zero] * self.d_y
        coords[1] = RatFunc.one(self.base)
        return FFElem(self, coords)

    def x_elem(self):
        return self.from_ratfunc(RatFunc.x(self.base))

    def _as_upoly(self, ycoeffs):
        return UPoly(self.ratfield, [RatFunc.from_poly(c) for c in ycoeffs])

    def _from_ypolys(self, ycoeffs):
        """Image of a Y-polynomial under Y -> a."""
        acc = self.zero()
        a = self.gen()
        for c in reversed(ycoeffs):
            acc = acc * a + self.from_ratfunc(RatFunc.from_poly(c))
        return acc

    # -- ring operations ----------------------------------------------------------
    def _mul(self, f: FFElem, g: FFElem):
        d = self.d_y
        if d == 1:
            return FFElem(self, [f.coords[0] * g.coords[0]])
        conv = [self._zero] * (2 * d - 1)
        for i, a in enumerate(f.coords):
            if a.is_zero():
                continue
            for j, b in enumerate(g.coords):
                if not b.is_zero():
                    conv[i + j] = conv[i + j] + a * b
        out = conv[:d]
        for k in range(d, 2 * d - 1):
            c = conv[k]
            if not c.is_zero():
                red = self._red[k - d]
                out = [o + c * r for o, r in zip(out, red)]
        return FFElem(self, out)

    def _inv(self, f: FFElem):
        if f.is_zero():
            raise ZeroDivisionError("inverse of zero in K_N")
        if self.d_y == 1:
            return FFElem(self, [f.coords[0].inv()])
        fu = UPoly(self.ratfield, f.coords)
        nu = self._as_upoly(self.ycoeffs)
        g, s, _ = fu.xgcd(nu)
        if g.degree != 0:
            raise ArithmeticError("non-invertible element: N_* is reducible?")
        ginv = g.coeffs[0].inv()
        coords = [c * ginv for c in s.coeffs]
        coords += [self._zero] * (self.d_y - len(coords))
        return FFElem(self, coords[: self.d_y])

    # -- the differential structure -------------------------------------------------
    def derive(self, f: FFElem):
        """Extension of d/dx to K_N (Leibniz, derive(x) = 1)."""
        d = self.d_y
        dcoords = [c.derive() for c in f.coords]
        out = FFElem(self, dcoords)
        if d > 1:
            fa = [self._zero] * d
            for i in range(1, d):
                fa[i - 1] = f.coords[i] * RatFunc.const(self.base,
                                                        self.base.from_int(i))
            out = out + FFElem(self, fa) * self.aprime
        return out

    def frobenius(self, f: FFElem):
        """f^p expressed on the a-basis; a^p is cached."""
        p = self.base.p
        acc = self.zero()
        for c in reversed(f.coords):
            acc = acc * self.ap + self.from_ratfunc(c.pth_power())
        return acc

    def riccati_map(self, f: FFElem):
        """f^(p-1) + f^p via p-1 iterated derivations plus one Frobenius."""
        g = f
        for _ in range(self.base.p - 1):
            g = self.derive(g)
        return g + self.frobenius(f)

    def is_solution(self, f: FFElem) -> bool:
        return (self.riccati_map(f) - self.frobenius(self.gen())).is_zero()

    def y_n(self):
        """a^p, the right-hand side of the equation."""
        return self.frobenius(self.gen())

    def log_derivative(self, g: FFElem):
        if g.is_zero():
            raise ZeroDivisionError("log derivative of zero")
        return self.derive(g) * self._inv(g)

    def trace(self, f: FFElem) -> RatFunc:
        """Tr_{K_N/F_q(x)} as the trace of the multiplication matrix."""
        acc = RatFunc.zero(self.base)
        g = f
        a = self.gen()
        for j in range(self.d_y):
            acc = acc + g.coords[j]
            if j + 1 < self.d_y:
                g = g * a
        return acc

    def coeff_via_trace(self, f: FFElem, i: int) -> RatFunc:
        """Coordinate f_i recovered as Tr(Q_i(x,a) f / (dN/dY)(x,a)) where
        Q_i is the quotient of N_* by Y^(i+1)."""
        if not 0 <= i < self.d_y:
            raise IndexError(f"coordinate index {i} out of range")
        qi = list(self.ycoeffs[i + 1:])
        qelem = self._from_ypolys(qi)
        ndy = self._from_ypolys(biv_derivative_y(list(self.ycoeffs)))
        return self.trace(qelem * f * self._inv(ndy))

    # -- misc ----------------------------------------------------------------------
    def nstar_str(self):
        parts = []
        for i in range(self.d_y, -1, -1):
            c = self.ycoeffs[i]
            if c.is_zero():
                continue
            yp = "" if i == 0 else ("Y" if i == 1 else f"Y^{i}")
            if not yp:
                parts.append(f"({c})")
            elif c.is_one():
                parts.append(yp)
            else:
                parts.append(f"({c})*{yp}")
        return " + ".join(parts)

    def __repr__(self):
        return f"CurveField({self.nstar_str()} over {self.base!r})"


# ---------------------------------------------------------------------------
# full bivariate irreducibility over F_q(x): cheap specialization probe, then
# Hensel lifting plus factor recombination over a squarefree specialization

def _is_irreducible_bivariate(curve: CurveField) -> bool:
    base = curve.base
    d_y = curve.d_y
    # monic integral model Q(x, Z) = lc^(d_y - 1) N_*(x, Z / lc)
    qcoeffs = [curve.ycoeffs[i] * curve.lc ** (d_y - 1 - i)
               for i in range(d_y)]
    qcoeffs.append(DensePoly.one(base))
    dq = biv_degree_x(qcoeffs)

    for s in itertools.count(1):
        big = field(base.p, base.b * s)
        emb = embedding(base, big)
        qc_big = [c.map_coeffs(emb, big) for c in qcoeffs]
        for c0 in big.elements():
            spec = [cp.eval(c0) for cp in qc_big]
            if _squarefree_spec(big, spec):
                fac = poly_factor(DensePoly(big, spec), curve.seed)
                if len(fac) == 1:
                    return True  # an irreducible specialization certifies N_*
                return _hensel_recombine(curve, qcoeffs, big, emb, c0,
                                         [g for g, _ in fac], dq)
        # no squarefree specialization over this field; enlarge
        if s > 4 + dq:
            raise InputError("could not certify irreducibility of N_*")


def _squarefree_spec(fld, spec):
    f = DensePoly(fld, spec)
    if f.degree < 1:
        return False
    return f.gcd(f.derivative()).degree == 0


def _ztrunc(zpoly, k):
    """Truncate every x-coefficient of a Z-polynomial modulo x^k."""
    return [DensePoly(c.field, c.coeffs[:k]) for c in zpoly]


def _zmul(a, b, fld, k):
    out = [DensePoly.zero(fld)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai.is_zero():
            continue
        for j, bj in enumerate(b):
            if not bj.is_zero():
                prod = ai * bj
                out[i + j] = out[i + j] + DensePoly(fld, prod.coeffs[:k])
    return _znorm(out)


def _zadd(a, b, fld):
    n = max(len(a), len(b))
    out = [DensePoly.zero(fld)] * n
    for i, c in enumerate(a):
        out[i] = out[i] + c
    for i, c in enumerate(b):
        out[i] = out[i] + c
    return _znorm(out)


def _zsub(a, b, fld):
    n = max(len(a), len(b))
    out = [DensePoly.zero(fld)] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = out[i] - c
    return _znorm(out)


def _znorm(a):
    while a and a[-1].is_zero():
        a.pop()
    return a


def _zdivmod_monic(a, b, fld, k):
    """Divide by a Z-monic polynomial with truncated x-arithmetic."""
    a = list(a)
    db = len(b) - 1
    if len(a) - 1 < db:
        return [], _znorm(a)
    q = [DensePoly.zero(fld)] * (len(a) - db)
    for t in range(len(a) - db - 1, -1, -1):
        c = a[db + t]
        if not c.is_zero():
            q[t] = c
            for i, bi in enumerate(b):
                prod = c * bi
                a[t + i] = a[t + i] - DensePoly(fld, prod.coeffs[:k])
    return _znorm(q), _znorm(a[:db])


def _hensel_recombine(curve, qcoeffs, big, emb, c0, local_factors, dq):
    """True iff Q stays irreducible after lifting the specialized factors
    to precision x^(dq+1) and testing every balanced recombination."""
    base = curve.base
    k = dq + 1
    # shift to the origin: work in X = x - c0
    fq = [c.map_coeffs(emb, big).shifted_arg(c0) for c in qcoeffs]
    fq = _ztrunc(fq, k)
    lifted = _hensel_tree(fq, [list(g.coeffs) for g in local_factors], big, k)
    n = len(lifted)
    idx = list(range(n))
    for size in range(1, n // 2 + 1):
        for subset in itertools.combinations(idx, size):
            if size == n - size and subset[0] != 0:
                continue  # avoid testing both halves of a bisection
            cand = [DensePoly.one(big)]
            for i in subset:
                cand = _zmul(cand, lifted[i], big, k)
            if _is_rational_factor(curve, qcoeffs, cand, big, emb, c0, k):
                return False
    return True


def _hensel_tree(f, locals_, fld, k):
    """Lift the pairwise-coprime monic factorization f = prod locals_ mod X
    to precision X^k (quadratic Hensel on a balanced split)."""
    if len(locals_) == 1:
        return [_ztrunc(f, k)]
    h = len(locals_) // 2
    ctx = _FqCtx(fld)
    g0 = [fld.one()]
    for lf in locals_[:h]:
        g0 = _fq_mul(g0, lf, fld)
    h0 = [fld.one()]
    for lf in locals_[h:]:
        h0 = _fq_mul(h0, lf, fld)
    gu, hu = UPoly(ctx, g0), UPoly(ctx, h0)
    _, s0, t0 = gu.xgcd(hu)
    g, hh, s, t = _hensel_pair(f, g0, h0, list(s0.coeffs), list(t0.coeffs), fld, k)
    return _hensel_tree(g, locals_[:h], fld, k) + _hensel_tree(hh, locals_[h:], fld, k)


class _FqCtx:
    __slots__ = ("fld",)

    def __init__(self, fld):
        self.fld = fld

    def zero(self):
        return self.fld.zero()

    def one(self):
        return self.fld.one()


def _fq_mul(a, b, fld):
    out = [fld.zero()] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if not ai.is_zero():
            for j, bj in enumerate(b):
                out[i + j] = out[i + j] + ai * bj
    while out and out[-1].is_zero():
        out.pop()
    return out


def _const_z(coeffs, fld):
    """Lift constant-coefficient Z-polynomial to DensePoly coefficients."""
    return [DensePoly.const(fld, c) for c in coeffs]


def _hensel_pair(f, g0, h0, s0, t0, fld, kmax):
    """Quadratic lift of f = g*h from precision 1 to kmax; g, h monic."""
    g = _const_z(g0, fld)
    h = _const_z(h0, fld)
    s = _const_z(s0, fld)
    t = _const_z(t0, fld)
    k = 1
    while k < kmax:
        k2 = min(2 * k, kmax)
        e = _zsub(_ztrunc(f, k2), _zmul(g, h, fld, k2), fld)
        se = _zmul(s, e, fld, k2)
        q, r = _zdivmod_monic(se, h, fld, k2)
        g = _znorm(_zadd(_zadd(g, _zmul(t, e, fld, k2), fld),
                         _zmul(q, g, fld, k2), fld))
        h = _znorm(_zadd(h, r, fld))
        g = _ztrunc(g, k2)
        h = _ztrunc(h, k2)
        if k2 < kmax:
            b = _zsub(_zadd(_zmul(s, g, fld, k2), _zmul(t, h, fld, k2), fld),
                      [DensePoly.one(fld)], fld)
            sb = _zmul(s, b, fld, k2)
            c, d = _zdivmod_monic(sb, h, fld, k2)
            s = _ztrunc(_zsub(s, d, fld), k2)
            t = _ztrunc(_zsub(_zsub(t, _zmul(t, b, fld, k2), fld),
                              _zmul(c, g, fld, k2), fld), k2)
        k = k2
    return g, h, s, t


def _is_rational_factor(curve, qcoeffs, cand, big, emb, c0, k):
    """Check whether a lifted candidate (in X = x - c0, over the big field)
    descends to F_q[x] and exactly divides the integral model Q."""
    base = curve.base
    # back to the x variable
    cand_x = [c.shifted_arg(-c0) for c in cand]
    # Galois stability: every coefficient fixed by the q-power Frobenius
    sec = _EmbSection(emb)
    desc = []
    for cpoly in cand_x:
        down = []
        for ce in cpoly.coeffs:
            pre = sec(ce)
            if pre is None:
                return False
            down.append(pre)
        desc.append(DensePoly(base, down))
    # exact trial division of Q in F_q[x][Z]
    ctx = curve.ratfield
    qu = UPoly(ctx, [RatFunc.from_poly(c) for c in qcoeffs])
    cu = UPoly(ctx, [RatFunc.from_poly(c) for c in desc])
    if cu.degree < 1:
        return False
    _, rem = qu.divmod(cu)
    return rem.is_zero()


class _EmbSection:
    """Partial inverse of a field embedding, built once per use."""

    def __init__(self, emb):
        from .linalg import MatrixFp
        self.emb = emb
        src, dst = emb.src, emb.dst
        imgs = [emb(_unit_vec(src, i)) for i in range(src.b)]
        entries = []
        for r in range(dst.b):
            entries.extend(imgs[c].c[r] for c in range(src.b))
        self.matrix = MatrixFp(dst.b, src.b, dst.p, entries)
        self.src, self.dst = src, dst

    def __call__(self, w):
        sol, _ = solve_fp(self.matrix, list(w.c))
        if sol is None:
            return None
        cand = self.src.elem(sol)
        if self.emb(cand) == w:
            return cand
        return None


def _unit_vec(fld, i):
    c = [0] * fld.b
    c[i] = 1
    return fld.elem(c)
