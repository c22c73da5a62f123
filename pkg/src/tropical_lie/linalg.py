"""Small exact linear algebra over Q and Z (Fractions and Python ints)."""
from __future__ import annotations

from fractions import Fraction


def rref(rows):
    """Reduced row echelon form over Q. Returns (matrix, pivot columns)."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return m, []
    ncol = len(m[0])
    piv = []
    r = 0
    for c in range(ncol):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        piv.append(c)
        r += 1
        if r == len(m):
            break
    return m, piv


def rank(rows) -> int:
    return len(rref(rows)[1])


def solve(cols, v):
    """Solve sum x_i cols[i] = v over Q; return one solution (free vars 0) or None."""
    n = len(v)
    k = len(cols)
    aug = [[Fraction(cols[i][j]) for i in range(k)] + [Fraction(v[j])] for j in range(n)]
    m, piv = rref(aug)
    if k in piv:
        return None
    x = [Fraction(0)] * k
    for r, c in enumerate(piv):
        x[c] = m[r][k]
    return x


def nullspace(rows, ncol):
    """Basis of {x : rows x = 0} over Q, scaled to primitive integer vectors."""
    m, piv = rref(rows) if rows else ([], [])
    free = [c for c in range(ncol) if c not in piv]
    out = []
    for f in free:
        x = [Fraction(0)] * ncol
        x[f] = Fraction(1)
        for r, c in enumerate(piv):
            x[c] = -m[r][f]
        out.append(_primitive(x))
    return out


def _primitive(x):
    from math import gcd, lcm
    den = 1
    for q in x:
        den = lcm(den, q.denominator)
    ints = [int(q * den) for q in x]
    g = 0
    for a in ints:
        g = gcd(g, a)
    return [a // g for a in ints] if g else ints


def int_span_solve(gens, v):
    """Find integer c with sum c_i gens[i] = v, or None. Echelon form with unimodular tracking."""
    k = len(gens)
    n = len(v)
    rows = [list(g) + [1 if j == i else 0 for j in range(k)] for i, g in enumerate(gens)]
    piv_rows = []
    r = 0
    for c in range(n):
        while True:
            nz = [i for i in range(r, k) if rows[i][c] != 0]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(rows[i][c]))
            rows[r], rows[p] = rows[p], rows[r]
            done = True
            for i in range(r + 1, k):
                if rows[i][c]:
                    q = rows[i][c] // rows[r][c]
                    rows[i] = [a - q * b for a, b in zip(rows[i], rows[r])]
                    if rows[i][c]:
                        done = False
            if done:
                break
        if r < k and rows[r][c] != 0:
            piv_rows.append((r, c))
            r += 1
    rem = list(v)
    coef = [0] * k
    for r_i, c in piv_rows:
        a = rows[r_i][c]
        if rem[c] % a:
            return None
        q = rem[c] // a
        rem = [x - q * y for x, y in zip(rem, rows[r_i][:n])]
        for j in range(k):
            coef[j] += q * rows[r_i][n + j]
    if any(rem):
        return None
    return coef


def in_span_mod_p(gens, v, p):
    """Is v in the F_p-span of gens?  Entries are integers, reduced mod the prime p."""
    basis = {}   # pivot column -> row with a 1 there
    for g in gens:
        r = _reduce_mod(basis, [x % p for x in g], p)
        c = next((i for i, x in enumerate(r) if x), None)
        if c is not None:
            inv = pow(r[c], -1, p)
            basis[c] = [x * inv % p for x in r]
    return not any(_reduce_mod(basis, [x % p for x in v], p))


def _reduce_mod(basis, r, p):
    for c, b in basis.items():
        if r[c]:
            f = r[c]
            r = [(x - f * y) % p for x, y in zip(r, b)]
    return r
