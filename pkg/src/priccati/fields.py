"""Prime and extension finite fields F_q = F_p[z]/(m).

A field element is an immutable tuple of ``b`` integers in ``[0, p)``,
the coordinates on the basis ``1, z, ..., z^(b-1)``.  The modulus ``m``
is a monic irreducible polynomial of degree ``b`` over F_p; when none is
supplied the first irreducible in a fixed enumeration of monic degree-b
polynomials is used, so that fields built in different runs are identical.

Subfield embeddings F_{p^b} -> F_{p^(b*s)} are computed by locating a
deterministic root of the source modulus in the target field.
"""

from __future__ import annotations

from .errors import InputError


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for d in range(2, n):
        if d * d > n:
            break
        if n % d == 0:
            return False
    return True


# ---------------------------------------------------------------------------
# bootstrap arithmetic for polynomials over F_p (integer lists, low first)

def _pp_trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _pp_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _pp_trim(out)


def _pp_mod(a, m, p):
    a = list(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm and a:
        q = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - q * mi) % p
        _pp_trim(a)
    return a


def _pp_powmod(a, e, m, p):
    result = [1]
    base = _pp_mod(a, m, p)
    while e:
        if e & 1:
            result = _pp_mod(_pp_mul(result, base, p), m, p)
        base = _pp_mod(_pp_mul(base, base, p), m, p)
        e >>= 1
    return result


def _pp_gcd(a, b, p):
    a, b = _pp_trim(list(a)), _pp_trim(list(b))
    while b:
        inv_lead = pow(b[-1], p - 2, p)
        monic = [c * inv_lead % p for c in b]
        a, b = b, _pp_mod(a, monic, p)
    return a


def _pp_is_irreducible(m, p):
    """Rabin test for a monic polynomial over F_p given as an int list."""
    b = len(m) - 1
    if b <= 0:
        return False
    x = [0, 1]
    xq = _pp_powmod(x, p ** b, m, p)
    diff = _pp_trim([(c - d) % p for c, d in
                     zip(xq + [0] * len(x), x + [0] * len(xq))])
    if diff:
        return False
    for ell in set(_prime_factors(b)):
        xe = _pp_powmod(x, p ** (b // ell), m, p)
        diff = _pp_trim([(c - d) % p for c, d in
                         zip(xe + [0] * len(x), x + [0] * len(xe))])
        g = _pp_gcd(list(m), diff, p)
        if len(g) - 1 > 0:
            return False
    return True


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.append(d)
            n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def default_modulus(p: int, b: int) -> tuple:
    """First monic irreducible of degree b over F_p in the fixed enumeration.

    Candidates are scanned by the integer whose base-p digits are the
    non-leading coefficients, lowest digit = constant term.
    """
    if b == 1:
        return (0, 1)
    for n in range(p ** b):
        digits = []
        k = n
        for _ in range(b):
            digits.append(k % p)
            k //= p
        cand = digits + [1]
        if _pp_is_irreducible(cand, p):
            return tuple(cand)
    raise AssertionError("no irreducible polynomial found")


class FqElem:
    """Element of a FiniteField; a thin immutable wrapper over a tuple."""

    __slots__ = ("field", "c")

    def __init__(self, field, c):
        self.field = field
        self.c = c

    def __add__(self, other):
        return FqElem(self.field, self.field.radd(self.c, other.c))

    def __sub__(self, other):
        return FqElem(self.field, self.field.rsub(self.c, other.c))

    def __neg__(self):
        return FqElem(self.field, self.field.rneg(self.c))

    def __mul__(self, other):
        return FqElem(self.field, self.field.rmul(self.c, other.c))

    def __truediv__(self, other):
        return FqElem(self.field, self.field.rmul(self.c, self.field.rinv(other.c)))

    def __pow__(self, e):
        return FqElem(self.field, self.field.rpow(self.c, e))

    def inv(self):
        return FqElem(self.field, self.field.rinv(self.c))

    def frobenius(self):
        return FqElem(self.field, self.field.rpow(self.c, self.field.p))

    def pth_root(self):
        return FqElem(self.field, self.field.rfrob_root(self.c))

    def is_zero(self):
        return not any(self.c)

    def in_prime_field(self):
        return not any(self.c[1:])

    def to_int(self):
        """Integer of a prime-field element (error otherwise)."""
        if not self.in_prime_field():
            raise ValueError("element not in the prime field")
        return self.c[0]

    def __eq__(self, other):
        return (isinstance(other, FqElem) and self.c == other.c
                and (self.field is other.field or self.field == other.field))

    def __hash__(self):
        return hash((self.field.p, self.field.b, self.c))

    def __repr__(self):
        return f"FqElem({self})"

    def __str__(self):
        if self.field.b == 1:
            return str(self.c[0])
        terms = []
        for i in range(self.field.b - 1, -1, -1):
            a = self.c[i]
            if a == 0:
                continue
            if i == 0:
                terms.append(str(a))
            else:
                zp = "z" if i == 1 else f"z^{i}"
                terms.append(zp if a == 1 else f"{a}*{zp}")
        return " + ".join(terms) if terms else "0"


_FIELD_CACHE: dict = {}


def field(p: int, b: int = 1, modulus=None) -> "FiniteField":
    """Shared-instance FiniteField constructor."""
    if modulus is None:
        modulus = default_modulus(p, b)
    else:
        modulus = tuple(c % p for c in modulus)
    key = (p, b, modulus)
    f = _FIELD_CACHE.get(key)
    if f is None:
        f = FiniteField(p, b, modulus)
        _FIELD_CACHE[key] = f
    return f


class FiniteField:
    """F_{p^b} with explicit modulus; raw ops work on coordinate tuples."""

    def __init__(self, p, b=1, modulus=None):
        if not is_prime(p):
            raise InputError(f"{p} is not prime")
        if b < 1:
            raise InputError("extension degree must be >= 1")
        if modulus is None:
            modulus = default_modulus(p, b)
        else:
            modulus = tuple(c % p for c in modulus)
            if len(modulus) != b + 1 or modulus[b] != 1:
                raise InputError("modulus must be monic of degree b")
            if b > 1 and not _pp_is_irreducible(list(modulus), p):
                raise InputError("modulus is not irreducible over F_p")
        self.p = p
        self.b = b
        self.q = p ** b
        self.modulus = modulus
        # reductions of z^b .. z^(2b-2) modulo m
        red = []
        cur = [(-modulus[i]) % p for i in range(b)]
        for _ in range(b - 1):
            red.append(tuple(cur))
            cur = [0] + cur
            top = cur.pop()
            if top:
                cur = [(cur[i] - top * modulus[i]) % p for i in range(b)]
        self._red = red
        self._zero = (0,) * b
        self._one = tuple([1] + [0] * (b - 1))

    # -- raw tuple arithmetic -------------------------------------------------
    def radd(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def rsub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def rneg(self, a):
        p = self.p
        return tuple((-x) % p for x in a)

    def rmul(self, a, b):
        p, deg = self.p, self.b
        if deg == 1:
            return (a[0] * b[0] % p,)
        prod = [0] * (2 * deg - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] = (prod[i + j] + ai * bj) % p
        out = list(prod[:deg])
        for k in range(deg, 2 * deg - 1):
            c = prod[k]
            if c:
                r = self._red[k - deg]
                for i in range(deg):
                    out[i] = (out[i] + c * r[i]) % p
        return tuple(out)

    def rinv(self, a):
        if not any(a):
            raise ZeroDivisionError("inverse of zero in finite field")
        if self.b == 1:
            return (pow(a[0], self.p - 2, self.p),)
        return self.rpow(a, self.q - 2)

    def rpow(self, a, e):
        if e < 0:
            a = self.rinv(a)
            e = -e
        result = self._one
        base = a
        while e:
            if e & 1:
                result = self.rmul(result, base)
            base = self.rmul(base, base)
            e >>= 1
        return result

    def rfrob_root(self, a):
        # Frobenius is bijective; its inverse is x -> x^(p^(b-1))
        return self.rpow(a, self.p ** (self.b - 1))

    # -- element constructors --------------------------------------------------
    def elem(self, coeffs) -> FqElem:
        c = list(coeffs)[: self.b]
        c += [0] * (self.b - len(c))
        return FqElem(self, tuple(x % self.p for x in c))

    def zero(self) -> FqElem:
        return FqElem(self, self._zero)

    def one(self) -> FqElem:
        return FqElem(self, self._one)

    def gen(self) -> FqElem:
        if self.b == 1:
            return self.one()
        return self.elem([0, 1])

    def from_int(self, n: int) -> FqElem:
        """Element whose coordinates are the base-p digits of n (mod q)."""
        n %= self.q
        digits = []
        for _ in range(self.b):
            digits.append(n % self.p)
            n //= self.p
        return FqElem(self, tuple(digits))

    def elements(self):
        """All field elements in the fixed enumeration order."""
        for n in range(self.q):
            yield self.from_int(n)

    def random(self, rng) -> FqElem:
        return self.from_int(rng.randrange(self.q))

    def trace_to_prime(self, a: FqElem) -> int:
        acc = a
        cur = a
        for _ in range(self.b - 1):
            cur = cur.frobenius()
            acc = acc + cur
        return acc.to_int()

    def __eq__(self, other):
        return (isinstance(other, FiniteField) and self.p == other.p
                and self.b == other.b and self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.p, self.b, self.modulus))

    def __repr__(self):
        return f"GF({self.p}^{self.b})" if self.b > 1 else f"GF({self.p})"


# ---------------------------------------------------------------------------
# embeddings

class Embedding:
    """Ring embedding src -> dst determined by the image of src's generator."""

    __slots__ = ("src", "dst", "zimg")

    def __init__(self, src, dst, zimg):
        self.src = src
        self.dst = dst
        self.zimg = zimg

    def __call__(self, a: FqElem) -> FqElem:
        if a.field is not self.src and a.field != self.src:
            raise ValueError("element not in the embedding's source field")
        acc = self.dst.zero()
        for coeff in reversed(a.c):
            acc = acc * self.zimg + self.dst.from_int(coeff)
        return acc


def _identity_embedding(f):
    return Embedding(f, f, f.gen())


_EMB_CACHE: dict = {}


def embedding(src: FiniteField, dst: FiniteField) -> Embedding:
    """Deterministic subfield embedding; requires src.b | dst.b."""
    if src == dst:
        return _identity_embedding(src)
    if src.p != dst.p or dst.b % src.b != 0:
        raise InputError("no embedding: source degree does not divide target")
    key = (src.p, src.b, src.modulus, dst.b, dst.modulus)
    emb = _EMB_CACHE.get(key)
    if emb is None:
        coeffs = [dst.from_int(c) for c in src.modulus]
        root = min(poly_roots(dst, coeffs), key=lambda r: r.c)
        emb = Embedding(src, dst, root)
        _EMB_CACHE[key] = emb
    return emb


def compose(e1: Embedding, e2: Embedding) -> Embedding:
    """e2 after e1."""
    return Embedding(e1.src, e2.dst, e2(e1.zimg))


# ---------------------------------------------------------------------------
# root extraction over a finite field (self-contained; used for embeddings
# and by higher layers through polys.poly_factor as well)

def _r_trim(c):
    while c and c[-1].is_zero():
        c.pop()
    return c


def _r_mod(a, m):
    a = list(a)
    dm = len(m) - 1
    lead_inv = m[-1].inv()
    while len(a) - 1 >= dm and a:
        q = a[-1] * lead_inv
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = a[shift + i] - q * mi
        _r_trim(a)
    return a


def _r_mul(a, b):
    if not a or not b:
        return []
    fld = a[0].field
    out = [fld.zero()] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if not ai.is_zero():
            for j, bj in enumerate(b):
                out[i + j] = out[i + j] + ai * bj
    return _r_trim(out)


def _r_gcd(a, b):
    a, b = _r_trim(list(a)), _r_trim(list(b))
    while b:
        a, b = b, _r_mod(a, b)
    return a


def _r_powmod(a, e, m):
    fld = m[0].field
    result = [fld.one()]
    base = _r_mod(a, m)
    while e:
        if e & 1:
            result = _r_mod(_r_mul(result, base), m)
        base = _r_mod(_r_mul(base, base), m)
        e >>= 1
    return result


def poly_roots(fld: FiniteField, coeffs) -> list:
    """All roots in fld of the polynomial with the given FqElem coefficients.

    Deterministic: the splitting randomness is driven by a fixed counter,
    and the result is sorted by coordinate tuple.
    """
    coeffs = _r_trim(list(coeffs))
    if not coeffs:
        raise ValueError("zero polynomial")
    roots = []
    while len(coeffs) > 1 and coeffs[0].is_zero():
        roots.append(fld.zero())
        coeffs = coeffs[1:]
    if len(coeffs) <= 1:
        return sorted(set(roots), key=lambda r: r.c)
    # keep only the part splitting into linear factors: gcd(f, x^q - x)
    xq = _r_powmod([fld.zero(), fld.one()], fld.q, coeffs)
    n = max(len(xq), 2)
    diff = [fld.zero()] * n
    for i, c in enumerate(xq):
        diff[i] = c
    diff[1] = diff[1] - fld.one()
    lin = _r_gcd(coeffs, _r_trim(diff))
    roots.extend(_split_linear(fld, lin, 1))
    return sorted(set(roots), key=lambda r: r.c)


def _split_linear(fld, f, counter):
    f = _r_trim(list(f))
    if len(f) <= 1:
        return []
    lead_inv = f[-1].inv()
    f = [c * lead_inv for c in f]
    if len(f) == 2:
        return [-f[0]]
    # equal-degree splitting, all factors linear
    while True:
        shift = fld.from_int(counter)
        counter += 1
        base = [shift, fld.one()]
        if fld.p == 2:
            # trace map splitting for characteristic 2
            acc = list(base)
            cur = list(base)
            for _ in range(_int_log2(fld.q) - 1):
                cur = _r_mod(_r_mul(cur, cur), f)
                n = max(len(acc), len(cur))
                merged = [fld.zero()] * n
                for i, c in enumerate(acc):
                    merged[i] = merged[i] + c
                for i, c in enumerate(cur):
                    merged[i] = merged[i] + c
                acc = _r_trim(merged)
            g = _r_gcd(f, acc)
        else:
            h = _r_powmod(base, (fld.q - 1) // 2, f)
            h = list(h)
            if not h:
                h = [fld.zero()]
            h[0] = h[0] - fld.one()
            g = _r_gcd(f, _r_trim(h))
        if 0 < len(g) - 1 < len(f) - 1:
            quo = _r_div_exact(f, g)
            return _split_linear(fld, g, counter) + _split_linear(fld, quo, counter)


def _r_div_exact(a, b):
    a = list(a)
    out = [None] * (len(a) - len(b) + 1)
    lead_inv = b[-1].inv()
    for k in range(len(out) - 1, -1, -1):
        q = a[len(b) - 1 + k] * lead_inv
        out[k] = q
        for i, bi in enumerate(b):
            a[k + i] = a[k + i] - q * bi
    return _r_trim(out)


def _int_log2(n):
    k = 0
    while (1 << (k + 1)) <= n:
        k += 1
    return k
