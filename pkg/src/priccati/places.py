"""Places of K_N above points of P^1, built by Newton-Puiseux expansion.

A place above a center (a monic irreducible P(x), or infinity) carries its
residue field G_P, ramification index e, and truncated series x(t), a(t),
t'(t) in the local parameter t.  The parameterization is kept rational over
the true residue field by scaling the Puiseux parameter, Duval style:

    finite center:  x = x0 + mu * t^e      (x0 = chosen root of P in G_P)
    infinity:       x = mu * t^(-e)

so t' = dt/dx is an exact monomial and nu(t') is 1 - e resp. e + 1.
Edge polynomials are factored instead of split into roots, and the Bezout
substitution X = c^v T^e, Y = c^u T^m (1 + Y1) with u*e - v*m = 1 avoids
taking e-th roots, so residue fields are never over-extended and the degree
identity  sum e(P|center) * [G_P : G_center] = d_y  holds exactly.

Wild ramification (p | e) is reported as unsupported rather than guessed.
"""

from __future__ import annotations

import math

from .curve import CurveField, FFElem
from .errors import InputError, PrecisionError, UnsupportedInstanceError
from .fields import FqElem, field, embedding, compose, poly_roots, Embedding
from .polys import DensePoly, is_irreducible, poly_factor
from .series import BIG, LaurentSeries, eval_ratfunc

INF = "inf"


class Place:
    __slots__ = ("curve", "center", "branch_index", "residue", "emb",
                 "e", "mu", "x0", "x_series", "a_series", "tprime", "prec")

    def __init__(self, curve, center, branch_index, residue, emb, e, mu, x0,
                 a_series, prec):
        self.curve = curve
        self.center = center
        self.branch_index = branch_index
        self.residue = residue
        self.emb = emb              # F_q -> G_P
        self.e = e
        self.mu = mu                # scale of the parameterization
        self.x0 = x0                # None for the infinite center
        self.a_series = a_series
        self.prec = prec
        if center == INF:
            self.x_series = LaurentSeries.monomial(residue, mu, -e)
            lead = (residue.from_int(-e % residue.p) * mu).inv()
            self.tprime = LaurentSeries.monomial(residue, lead, e + 1)
        else:
            self.x_series = (LaurentSeries.const(residue, x0)
                             + LaurentSeries.monomial(residue, mu, e))
            lead = (residue.from_int(e % residue.p) * mu).inv()
            self.tprime = LaurentSeries.monomial(residue, lead, 1 - e)

    # -- numerology --------------------------------------------------------------
    @property
    def nu_tprime(self) -> int:
        return self.e + 1 if self.center == INF else 1 - self.e

    def nu_a(self):
        """Valuation of a at this place (None when a = 0 identically)."""
        return self.a_series.valuation_or(None)

    @property
    def eta(self) -> int:
        nu = self.nu_a()
        if nu is None:
            return -BIG
        return self.nu_tprime - nu

    @property
    def residue_degree(self) -> int:
        """[G_P : F_q]."""
        return self.residue.b // self.curve.base.b

    def center_degree(self) -> int:
        return 1 if self.center == INF else self.center.degree

    def rel_degree(self) -> int:
        """[G_P : residue field of the center]."""
        return self.residue_degree // self.center_degree()

    def center_str(self) -> str:
        return "infinity" if self.center == INF else str(self.center)

    def with_precision(self, prec: int) -> "Place":
        if prec <= self.prec:
            return self
        return places_above(self.curve, self.center, prec)[self.branch_index]

    def __repr__(self):
        return (f"Place(center={self.center_str()}, e={self.e}, "
                f"deg={self.residue_degree}, prec={self.prec})")


# ---------------------------------------------------------------------------
# dict-based exact Laurent polynomials used during the polygon recursion

def _dadd(a, b):
    out = dict(a)
    for k, v in b.items():
        w = out.get(k)
        out[k] = v if w is None else w + v
    return {k: v for k, v in out.items() if not v.is_zero()}


def _dmap(a, func):
    out = {}
    for k, v in a.items():
        w = func(v)
        if not w.is_zero():
            out[k] = w
    return out


def _dsubst_monomial(a, c, e):
    """X -> c * X^e on a dict-poly: exponent k contributes c^k at e*k."""
    out = {}
    for k, v in a.items():
        w = v * (c ** k)
        if not w.is_zero():
            out[e * k] = w
    return out


def _dshift(a, k):
    return {kk + k: v for kk, v in a.items()}


def _dscale(a, c):
    return _dmap(a, lambda v: v * c)


def _poly_to_dict(p: DensePoly):
    return {i: c for i, c in enumerate(p.coeffs) if not c.is_zero()}


# ---------------------------------------------------------------------------

def places_above(curve: CurveField, center, prec: int = None):
    """All places of K_N above the given center, deterministically ordered.

    center: monic irreducible DensePoly over the curve's base field, or the
    module constant INF.  Raises UnsupportedInstanceError on wild
    ramification.
    """
    base = curve.base
    if prec is None:
        prec = 4 * (base.p + curve.d_x * curve.d_y)
    if center == INF:
        g0 = base
        emb0 = embedding(base, base)
        x0 = None
        fcoeffs = [_poly_to_dict(c.reverse(curve.d_x)) for c in curve.ycoeffs]
    else:
        if not isinstance(center, DensePoly) or center.is_zero():
            raise InputError("center must be a monic irreducible polynomial or INF")
        if not (center.lc() == base.one()) or not is_irreducible(center):
            raise InputError(f"center {center} is not monic irreducible")
        s = center.degree
        g0 = field(base.p, base.b * s)
        emb0 = embedding(base, g0)
        roots = poly_roots(g0, [emb0(c) for c in center.coeffs])
        x0 = roots[0]
        fcoeffs = [_poly_to_dict(c.map_coeffs(emb0, g0).shifted_arg(x0))
                   for c in curve.ycoeffs]

    slack = 8 + 2 * curve.d_x * (curve.d_y + 1)
    while True:
        leaves = _branches(fcoeffs, g0, prec + slack, False, 0)
        if all(y.prec >= prec for _, _, _, _, y in leaves):
            break
        slack *= 2
        if slack > (prec + 1) * 64:
            raise PrecisionError("Newton-Puiseux expansion failed to converge")

    total = sum(e * (gl.b // g0.b) for gl, _, e, _, _ in leaves)
    if total != curve.d_y:
        raise AssertionError(
            f"branch degrees sum to {total}, expected {curve.d_y}")

    places = []
    for idx, (gl, emb_l, e, lam, yser) in enumerate(leaves):
        if e % base.p == 0:
            raise UnsupportedInstanceError(
                f"wildly ramified place (e = {e}) above {center!r}")
        emb_total = compose(emb0, emb_l) if center != INF else emb_l
        if center == INF:
            mu = lam.inv()   # X = 1/x = lam t^e, so x = lam^-1 t^-e
            x0_l = None
        else:
            mu = lam
            x0_l = emb_l(x0)
        pl = Place(curve, center, idx, gl, emb_total, e, mu, x0_l,
                   yser.truncate(prec), prec)
        _verify_place(pl)
        places.append(pl)
    return places


def _verify_place(pl: Place):
    """Substituting (x(t), a(t)) into N_* must vanish to working precision."""
    curve = pl.curve
    acc = LaurentSeries.zero(pl.residue, BIG)
    for c in reversed(curve.ycoeffs):
        cs = _eval_poly_series(c, pl.x_series, pl.emb)
        acc = acc * pl.a_series + cs
    if not acc.is_zero():
        raise AssertionError(
            f"place verification failed at {pl!r}: N(x(t),a(t)) has "
            f"valuation {acc.valuation()} < precision {acc.prec}")


def _eval_poly_series(p: DensePoly, s: LaurentSeries, emb) -> LaurentSeries:
    acc = LaurentSeries.zero(s.field, BIG)
    for c in reversed(p.coeffs):
        acc = acc * s + LaurentSeries.const(s.field, emb(c))
    return acc


# ---------------------------------------------------------------------------
# the polygon recursion

def _branches(fcoeffs, g, prec, positive_only, depth):
    """Expand all branches (roots y(t) in extensions of g((t))) of the
    Y-polynomial with dict-coefficients fcoeffs.

    Returns a list of (G_leaf, emb g->G_leaf, e, lam, y_series) meaning the
    branch is parameterized by X = lam * t^e, Y = y_series(t).  With
    positive_only, only branches with positive valuation are expanded.
    """
    if depth > 200:
        raise AssertionError("Newton-Puiseux recursion failed to terminate")
    d = len(fcoeffs) - 1
    while d >= 0 and not fcoeffs[d]:
        d -= 1
        fcoeffs = fcoeffs[:d + 1]
    if d <= 0:
        return []
    leaves = []
    # exact zero root (Y | F); separability keeps its multiplicity at 1
    if not fcoeffs[0]:
        leaves.append((g, embedding(g, g), 1, g.one(),
                       LaurentSeries.zero(g, BIG)))
        fcoeffs = fcoeffs[1:]
        d -= 1
        if d <= 0:
            return leaves

    pts = [(i, min(fc)) for i, fc in enumerate(fcoeffs) if fc]
    hull = _lower_hull(pts)
    for (i1, v1), (i2, v2) in zip(hull, hull[1:]):
        lam_num = v1 - v2          # lambda = (v1 - v2) / (i2 - i1)
        lam_den = i2 - i1
        if positive_only and lam_num <= 0:
            continue
        gg = math.gcd(abs(lam_num), lam_den)
        m = lam_num // gg
        e = lam_den // gg
        delta = (i2 - i1) // e
        ecoeffs = []
        for k in range(delta + 1):
            ecoeffs.append(fcoeffs[i1 + k * e].get(v1 - k * m, g.zero()))
        epoly = DensePoly(g, ecoeffs)
        for h, rho in poly_factor(epoly, 0):
            if h.coeffs[0].is_zero():
                continue   # the zero root of the edge polynomial is spurious
            if h.degree == 1:
                g2, emb2 = g, embedding(g, g)
                chat = -h.coeffs[0]
            else:
                g2 = field(g.p, g.b * h.degree)
                emb2 = embedding(g, g2)
                hroots = poly_roots(g2, [emb2(c) for c in h.coeffs])
                chat = hroots[0]
            bu, bv = _bezout(e, m)
            f2 = _edge_substitute(fcoeffs, g, g2, emb2, chat, e, m, bu, bv)
            if rho == 1:
                yroot = _hensel_root(f2, g2, prec)
                subs = [(g2, embedding(g2, g2), 1, g2.one(), yroot)]
            else:
                subs = _branches(f2, g2, prec, True, depth + 1)
            for (g3, emb3, e3, lam3, y3) in subs:
                chat3 = emb3(chat)
                e_tot = e * e3
                lam_tot = (chat3 ** bv) * (lam3 ** e)
                # Y = chat^bu * X2^m * (1 + Y1) with X2 = lam3 t^e3
                scale = (chat3 ** bu) * (lam3 ** m)
                one_plus = LaurentSeries.one(g3, BIG) + y3
                yser = one_plus * scale
                yser = yser.shift(m * e3)
                emb_tot = compose(emb2, emb3)
                leaves.append((g3, emb_tot, e_tot, lam_tot, yser))
    return leaves


def _lower_hull(pts):
    """Lower convex hull of (i, v) points, left to right."""
    pts = sorted(pts)
    hull = []
    for pt in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            if (x2 - x1) * (pt[1] - y1) <= (pt[0] - x1) * (y2 - y1):
                hull.pop()
            else:
                break
        hull.append(pt)
    return hull


def _bezout(e, m):
    """(u, v) with u*e - v*m = 1."""
    g, u, w = _ext_gcd(e, m)
    if g != 1:
        raise AssertionError("edge slope not in lowest terms")
    return u, -w


def _ext_gcd(a, b):
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _edge_substitute(fcoeffs, g, g2, emb2, chat, e, m, bu, bv):
    """F(chat^bv X^e, chat^bu X^m (1 + Y1)), normalized to min exponent 0."""
    d = len(fcoeffs) - 1
    p = g.p
    cv = chat ** bv
    mapped = []
    for fc in fcoeffs:
        fc2 = _dmap(fc, emb2) if g2 is not g else fc
        mapped.append(_dsubst_monomial(fc2, cv, e))
    out = [{} for _ in range(d + 1)]
    for i in range(d + 1):
        if not mapped[i]:
            continue
        block = _dshift(_dscale(mapped[i], chat ** (bu * i)), m * i)
        for j in range(i + 1):
            cij = math.comb(i, j) % p
            if cij == 0:
                continue
            term = block if cij == 1 else _dscale(block, g2.from_int(cij))
            out[j] = _dadd(out[j], term)
    w = min(min(fc) for fc in out if fc)
    return [_dshift(fc, -w) if fc else fc for fc in out]


def _hensel_root(fcoeffs, g, prec):
    """The unique series root with positive valuation; assumes Y1 = 0 is a
    simple root of F(0, Y1)."""
    coeffs = [_dict_to_series(fc, g) for fc in fcoeffs]
    dcoeffs = _series_derivative_y(coeffs, g)
    y = LaurentSeries.zero(g, prec)
    for _ in range(prec.bit_length() + 50):
        fy = _series_horner(coeffs, y, prec)
        if fy.is_zero() and fy.prec >= prec:
            return LaurentSeries(g, y.val if y.coeffs else prec,
                                 y.coeffs, prec)
        dfy = _series_horner(dcoeffs, y, prec)
        y = (y - fy * dfy.inv()).truncate(prec)
    raise PrecisionError("Hensel iteration failed to converge")


def _dict_to_series(fc, g):
    if not fc:
        return LaurentSeries.zero(g, BIG)
    lo = min(fc)
    hi = max(fc)
    coeffs = [fc.get(k, g.zero()) for k in range(lo, hi + 1)]
    return LaurentSeries(g, lo, coeffs, BIG)


def _series_horner(coeffs, y, prec):
    acc = LaurentSeries.zero(y.field, BIG)
    for c in reversed(coeffs):
        acc = (acc * y + c).truncate(prec)
    return acc


def _series_derivative_y(coeffs, g):
    out = []
    for j in range(1, len(coeffs)):
        out.append(coeffs[j] * g.from_int(j % g.p))
    return out


# ---------------------------------------------------------------------------

def expand(f: FFElem, place: Place, prec: int) -> LaurentSeries:
    """Laurent expansion of f at the place to absolute precision >= prec."""
    pl = place
    for _ in range(12):
        try:
            ser = _expand_at(f, pl)
        except PrecisionError:
            ser = None
        if ser is not None and (ser.prec >= prec or
                                (not ser.coeffs and ser.prec >= prec)):
            return ser.truncate(prec) if ser.prec > prec else ser
        pl = pl.with_precision(max(2 * pl.prec, prec + 8))
    raise PrecisionError(f"expansion of {f} at {place!r} did not reach "
                         f"precision {prec}")


def _expand_at(f: FFElem, pl: Place) -> LaurentSeries:
    acc = LaurentSeries.zero(pl.residue, BIG)
    for c in reversed(f.coords):
        num = _eval_poly_series(c.num, pl.x_series, pl.emb)
        den = _eval_poly_series(c.den, pl.x_series, pl.emb)
        cut = pl.prec + 2 * abs(den.valuation_or(0)) + 2
        cs = (num.truncate(cut) * den.truncate(cut).inv()).truncate(pl.prec)
        acc = acc * pl.a_series + cs
    return acc
