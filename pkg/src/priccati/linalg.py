"""Exact linear algebra: dense systems over F_p and over F_q(x).

Elimination uses deterministic pivoting (first nonzero entry scanning rows
from the top), so solutions and kernel bases are reproducible.
"""

from __future__ import annotations


class MatrixFp:
    """Dense row-major matrix over F_p with integer entries in [0, p)."""

    __slots__ = ("rows", "cols", "p", "entries")

    def __init__(self, rows: int, cols: int, p: int, entries=None):
        self.rows = rows
        self.cols = cols
        self.p = p
        if entries is None:
            entries = [0] * (rows * cols)
        else:
            entries = [e % p for e in entries]
            if len(entries) != rows * cols:
                raise ValueError("entry count does not match dimensions")
        self.entries = entries

    @staticmethod
    def identity(n, p):
        m = MatrixFp(n, n, p)
        for i in range(n):
            m.entries[i * n + i] = 1
        return m

    def __getitem__(self, rc):
        r, c = rc
        return self.entries[r * self.cols + c]

    def __setitem__(self, rc, v):
        r, c = rc
        self.entries[r * self.cols + c] = v % self.p

    def row(self, r):
        return self.entries[r * self.cols:(r + 1) * self.cols]

    def mul_vec(self, v):
        p = self.p
        out = []
        for r in range(self.rows):
            base = r * self.cols
            s = 0
            for c in range(self.cols):
                s += self.entries[base + c] * v[c]
            out.append(s % p)
        return out

    def __repr__(self):
        return f"MatrixFp({self.rows}x{self.cols} mod {self.p})"


def solve_fp(m: MatrixFp, rhs=None):
    """Solve m*x = rhs over F_p.

    Returns (solution_or_None, kernel_basis).  The particular solution sets
    all free variables to zero; the kernel basis is the standard one read
    off the reduced row echelon form.  rhs=None solves the homogeneous
    system (solution is the zero vector).
    """
    p = m.p
    rows, cols = m.rows, m.cols
    a = [m.row(r) + ([0] if rhs is None else [rhs[r] % p]) for r in range(rows)]
    width = cols + 1
    pivots = []
    r = 0
    for c in range(cols):
        pr = None
        for i in range(r, rows):
            if a[i][c] % p:
                pr = i
                break
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        inv = pow(a[r][c], p - 2, p)
        a[r] = [(x * inv) % p for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c]:
                f = a[i][c]
                ri, rr = a[i], a[r]
                a[i] = [(ri[k] - f * rr[k]) % p for k in range(width)]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    solution = None
    consistent = True
    for i in range(r, rows):
        if a[i][cols] % p:
            consistent = False
            break
    if consistent:
        solution = [0] * cols
        for i, c in enumerate(pivots):
            solution[c] = a[i][cols]
    pivot_set = set(pivots)
    kernel = []
    for free in range(cols):
        if free in pivot_set:
            continue
        vec = [0] * cols
        vec[free] = 1
        for i, c in enumerate(pivots):
            vec[c] = (-a[i][free]) % p
        kernel.append(vec)
    return solution, kernel


def solve_field(rows, rhs, ctx):
    """Solve an exact linear system over any of our field elements.

    rows: list of lists of field elements; rhs: list or None.
    Returns (solution_or_None, kernel_basis) just like solve_fp.
    """
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    zero, one = ctx.zero(), ctx.one()
    a = [list(r) + [rhs[i] if rhs is not None else zero]
         for i, r in enumerate(rows)]
    width = ncols + 1
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, nrows):
            if not a[i][c].is_zero():
                pr = i
                break
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        inv = one / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(nrows):
            if i != r and not a[i][c].is_zero():
                f = a[i][c]
                ri, rr = a[i], a[r]
                a[i] = [ri[k] - f * rr[k] for k in range(width)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    solution = None
    consistent = True
    for i in range(r, nrows):
        if not a[i][ncols].is_zero():
            consistent = False
            break
    if consistent:
        solution = [zero] * ncols
        for i, c in enumerate(pivots):
            solution[c] = a[i][ncols]
    pivot_set = set(pivots)
    kernel = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [zero] * ncols
        vec[free] = one
        for i, c in enumerate(pivots):
            vec[c] = -a[i][free]
        kernel.append(vec)
    return solution, kernel


def solve_fqx(rows, rhs, ctx):
    """solve_field specialization for F_q(x); kept as its own entry point
    because callers treat rational-function systems as a distinct facility."""
    return solve_field(rows, rhs, ctx)


def kernel_reduce_fp(solution, kernel, p):
    """Canonical representative of solution + span(kernel).

    Kernel vectors are put in reduced echelon form pivoting on the highest
    coordinate indices first; the returned vector has zeros in all those
    pivot coordinates.  With basis columns ordered by ascending degree this
    picks the affine element supported on the lowest-degree coordinates.
    """
    if not kernel:
        return list(solution)
    n = len(solution)
    basis = [list(v) for v in kernel]
    reduced = []
    used = set()
    for v in basis:
        w = list(v)
        for pos, u in reduced:
            if w[pos]:
                f = w[pos]
                w = [(wk - f * uk) % p for wk, uk in zip(w, u)]
        lead = None
        for k in range(n - 1, -1, -1):
            if w[k]:
                lead = k
                break
        if lead is None:
            continue
        inv = pow(w[lead], p - 2, p)
        w = [(wk * inv) % p for wk in w]
        # back-eliminate previous vectors
        new_reduced = []
        for pos, u in reduced:
            if u[lead]:
                f = u[lead]
                u = [(uk - f * wk) % p for uk, wk in zip(u, w)]
            new_reduced.append((pos, u))
        reduced = new_reduced
        reduced.append((lead, w))
        used.add(lead)
    out = list(solution)
    for pos, u in sorted(reduced, key=lambda t: -t[0]):
        if out[pos]:
            f = out[pos]
            out = [(ok - f * uk) % p for ok, uk in zip(out, u)]
    return out
