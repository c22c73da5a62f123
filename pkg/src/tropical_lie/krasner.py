"""Krasner-type pairs: unions of cosets R/G of a finite semiring, with set-lifted addition and
bracket, null = sets meeting a declared ideal (default {0}), surpassing = inclusion.

Sets of elements of R are int bitmasks over the table indices."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product as iproduct

from .reports import CheckReport
from .semiring import SemiringSpec


class KrasnerError(ValueError):
    pass


def matrix_table_f2(n: int = 2) -> SemiringSpec:
    """M_n over the two-element field as a FiniteTable.  A matrix is indexed by its entries read
    row by row as binary digits, most significant first; for n = 2, [[a,b],[c,d]] -> 8a+4b+2c+d."""
    N = n * n
    size = 1 << N

    def mat(k):
        bits = [(k >> (N - 1 - t)) & 1 for t in range(N)]
        return [bits[i * n:(i + 1) * n] for i in range(n)]

    def idx(m):
        k = 0
        for row in m:
            for x in row:
                k = 2 * k + x
        return k

    add = [[a ^ b for b in range(size)] for a in range(size)]
    mul = []
    for a in range(size):
        A = mat(a)
        row = []
        for b in range(size):
            B = mat(b)
            row.append(idx([[sum(A[i][k] * B[k][j] for k in range(n)) % 2 for j in range(n)]
                            for i in range(n)]))
        mul.append(row)
    one = idx([[int(i == j) for j in range(n)] for i in range(n)])
    return SemiringSpec.from_tables(add, mul, 0, one, label=f"M{n}(F2)")


def f2_transpose(n: int = 2):
    """The transpose on M_n(F2) as a permutation of table indices."""
    N = n * n
    out = []
    for k in range(1 << N):
        bits = [(k >> (N - 1 - t)) & 1 for t in range(N)]
        tb = [bits[j * n + i] for i in range(n) for j in range(n)]
        v = 0
        for x in tb:
            v = 2 * v + x
        out.append(v)
    return tuple(out)


@dataclass
class KrasnerModel:
    R: SemiringSpec
    G: tuple
    eps: int | None = None
    M: tuple | None = None            # multiplicative ideal for the null; default {0}
    involution: tuple | None = None   # permutation of R for the involution variants
    cosets: list = field(default_factory=list, init=False)
    coset_of: dict = field(default_factory=dict, init=False)

    def __post_init__(self):
        R = self.R
        if R.kind != "finite_table":
            raise KrasnerError("Krasner models need a FiniteTable semiring")
        self.size = len(R.add_table)
        self.G = tuple(sorted(set(self.G)))
        if self.eps is None:
            inv = [e for e in range(self.size) if R.add(e, R.one) == R.zero]
            if not inv:
                raise KrasnerError("1 has no additive inverse; pass eps explicitly")
            self.eps = inv[0]
        self._validate_group()
        seen = set()
        for a in range(self.size):
            if a in seen:
                continue
            c = frozenset(R.mul(a, g) for g in self.G)
            for x in c:
                self.coset_of[x] = len(self.cosets)
            self.cosets.append(c)
            seen |= c
        if self.M is not None:
            self._validate_ideal()
        self.null_mask = self.mask(self.M if self.M is not None else [R.zero])
        # element-level tables
        n = self.size
        self._br = [[self._bracket_elem(a, b) for b in range(n)] for a in range(n)]

    # -- validation ---------------------------------------------------
    def _validate_group(self):
        R, G = self.R, self.G
        if not G:
            raise KrasnerError("G is empty")
        for g in G:
            if not 0 <= g < self.size:
                raise KrasnerError(f"G element {g} out of range")
            if not any(R.mul(g, h) == R.one for h in G):
                raise KrasnerError(f"G element {g} has no inverse in G")
        if R.one not in G:
            raise KrasnerError("G does not contain 1")
        for g, h in iproduct(G, repeat=2):
            if R.mul(g, h) not in G:
                raise KrasnerError(f"G is not closed: {g}*{h} = {R.mul(g, h)}")
        for a in range(self.size):
            if {R.mul(a, g) for g in G} != {R.mul(g, a) for g in G}:
                raise KrasnerError(f"G is not normal: aG != Ga for a = {a}")
        if self.involution is not None:
            s = self.involution
            if sorted(s) != list(range(self.size)) or any(s[s[a]] != a for a in range(self.size)):
                raise KrasnerError("involution is not an order-2 permutation")
            for a, b in iproduct(range(self.size), repeat=2):
                if s[R.mul(a, b)] != R.mul(s[b], s[a]) or s[R.add(a, b)] != R.add(s[a], s[b]):
                    raise KrasnerError(f"involution is not an anti-automorphism at ({a},{b})")
            if {s[g] for g in G} != set(G):
                raise KrasnerError("G is not symmetric under the involution")

    def _validate_ideal(self):
        R = self.R
        M = set(self.M)
        for m in M:
            for r in range(self.size):
                if R.mul(r, m) not in M or R.mul(m, r) not in M:
                    raise KrasnerError(f"M is not a multiplicative ideal at ({r},{m})")

    # -- element level ---------------------------------------------------
    def _bracket_elem(self, a, b):
        R = self.R
        if self.involution is None:
            return R.add(R.mul(a, b), R.mul(self.eps, R.mul(b, a)))
        return R.add(R.mul(a, b), R.mul(self.eps, R.mul(self.involution[b], a)))

    def mask(self, elems):
        m = 0
        for e in elems:
            m |= 1 << e
        return m

    def elems(self, S):
        return [a for a in range(self.size) if S >> a & 1]

    def coset_mask(self, i):
        return self.mask(self.cosets[i])

    def close(self, S):
        """Smallest union of cosets containing S."""
        out = 0
        for a in self.elems(S):
            out |= self.coset_mask(self.coset_of[a])
        return out

    # -- set level ---------------------------------------------------
    def boxplus(self, *sets):
        acc = 1 << self.R.zero
        for S in sets:
            nxt = 0
            for a in self.elems(acc):
                for b in self.elems(S):
                    nxt |= 1 << self.R.add(a, b)
            acc = nxt
        return self.close(acc)

    def bracket(self, S, T):
        out = 0
        for a in self.elems(S):
            for b in self.elems(T):
                out |= 1 << self._br[a][b]
        return self.close(out)

    def product(self, S, T):
        R = self.R
        out = 0
        for a in self.elems(S):
            for b in self.elems(T):
                out |= 1 << R.mul(a, b)
        return self.close(out)

    def is_null(self, S):
        return bool(S & self.null_mask)

    def preceq(self, S, T):
        return S & ~T == 0

    def describe_set(self, S):
        return "{" + ",".join(map(str, self.elems(S))) + "}"


def _rec(rep, model, axiom, idx, ok, sets=()):
    rep.add(axiom, idx, "pass" if ok else "fail",
            None if ok else " ".join(model.describe_set(s) for s in sets))


def check_krasner(model: KrasnerModel, samples: int = 2000, seed: int = 0) -> CheckReport:
    """Weak surpassing-Lie axioms with surpassing = inclusion.

    Exhaustive over coset tuples (the elements of R/G); the unary axioms are also checked over
    every nonempty union of cosets; binary and ternary set-level instances on seeded samples.
    """
    rep = CheckReport(mode="exhaustive over cosets", seed=seed)
    k = len(model.cosets)
    C = [model.coset_mask(i) for i in range(k)]
    br, bp = model.bracket, model.boxplus
    null, le = model.is_null, model.preceq
    for i in range(k):
        _rec(rep, model, "lie-a", (i,), null(br(C[i], C[i])), (C[i],))
    for i, j in iproduct(range(k), repeat=2):
        x, y = C[i], C[j]
        _rec(rep, model, "lie-b", (i, j), null(bp(br(x, y), br(y, x))), (x, y))
        if null(br(x, y)):
            _rec(rep, model, "reversible", (i, j), null(br(y, x)), (x, y))
    for i, j, l in iproduct(range(k), repeat=3):
        x, y, z = C[i], C[j], C[l]
        _rec(rep, model, "jacobi", (i, j, l),
             null(bp(br(br(x, y), z), br(x, br(y, z)), br(y, br(z, x)))), (x, y, z))
        _rec(rep, model, "jacobi-reflected", (i, j, l),
             null(bp(br(z, br(y, x)), br(x, br(z, y)), br(y, br(x, z)))), (x, y, z))
        _rec(rep, model, "jacobi-preceq", (i, j, l),
             le(br(br(x, y), z), bp(br(x, br(y, z)), br(y, br(z, x)))), (x, y, z))
        s = bp(x, y)
        _rec(rep, model, "ad-sum", (i, j, l), le(br(s, z), bp(br(x, z), br(y, z))), (x, y, z))
        _rec(rep, model, "ad-dagger-sum", (i, j, l), le(br(z, s), bp(br(z, x), br(z, y))), (x, y, z))
        if null(s):
            _rec(rep, model, "null-sum-left", (i, j, l), null(bp(br(z, x), br(z, y))), (x, y, z))
            _rec(rep, model, "null-sum-right", (i, j, l), null(bp(br(x, z), br(y, z))), (x, y, z))
    # sub-multiplicativity: (a1 + a2)(b1 + b2) inside the boxplus of the four products
    for a1, a2, b1, b2 in iproduct(range(k), repeat=4):
        A = [C[a1], C[a2]]
        B = [C[b1], C[b2]]
        lhs = model.product(bp(*A), bp(*B))
        rhs = bp(*[model.product(a, b) for a in A for b in B])
        _rec(rep, model, "submultiplicative", (a1, a2, b1, b2), le(lhs, rhs), (lhs, rhs))
    # unary axioms on every nonempty union of cosets
    bad = None
    for bits in range(1, 1 << k):
        S = 0
        for i in range(k):
            if bits >> i & 1:
                S |= C[i]
        if not null(br(S, S)):
            bad = S
            break
    _rec(rep, model, "lie-a-sets", (), bad is None, (bad,) if bad else ())
    # set-level samples
    rng = random.Random(seed)

    def rand_set():
        S = 0
        while not S:
            for i in range(k):
                if rng.random() < 0.25:
                    S |= C[i]
        return S

    for t in range(samples):
        x, y, z = rand_set(), rand_set(), rand_set()
        x2 = x | rand_set()
        ok = (null(bp(br(x, y), br(y, x)))
              and null(bp(br(br(x, y), z), br(x, br(y, z)), br(y, br(z, x))))
              and le(br(x, y), br(x2, y)) and le(br(y, x), br(y, x2)))
        rep.add("sets-sampled", (t,), "pass" if ok else "fail",
                None if ok else " ".join(model.describe_set(s) for s in (x, y, z, x2)))
    return rep


def build_krasner(R: SemiringSpec, G, eps=None, M=None, involution=None, samples=2000, seed=0):
    """Returns (KrasnerModel, CheckReport)."""
    model = KrasnerModel(R, tuple(G), eps, tuple(M) if M is not None else None, involution)
    return model, check_krasner(model, samples, seed)
