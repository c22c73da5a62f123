"""Truncated tensor algebras.

Letters are ints (basis of the underlying module) or Slack generators.  A nonassociative word is
a letter or a pair (left, right); an associative word is a tuple of letters.  Products of degree
above the truncation D go to an overflow bucket instead of being dropped."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as iproduct

from .lie import LiePairDef, StructureConstants
from .modules import PairDef, Submodule, make_pair
from .semiring import BasePair

NONASSOC, ASSOC = "nonassoc", "assoc"


@dataclass(frozen=True)
class Slack:
    """A fresh null generator; `index` names what it balances."""
    kind: str
    index: tuple
    weight: int = 2

    def name(self, names=None):
        nm = [names[i] if names and isinstance(i, int) and i < len(names) else str(i) for i in self.index]
        return f"y[{','.join(nm)}]"


def is_letter(w):
    return isinstance(w, (int, Slack))


def weight(letter):
    return 1 if isinstance(letter, int) else letter.weight


def degree(w, mode=NONASSOC):
    if mode == ASSOC:
        return sum(weight(a) for a in w)
    if is_letter(w):
        return weight(w)
    return degree(w[0]) + degree(w[1])


def letters(w, mode=NONASSOC):
    if mode == ASSOC:
        return list(w)
    if is_letter(w):
        return [w]
    return letters(w[0]) + letters(w[1])


def x_degree(w, mode=NONASSOC):
    """Number of basis letters (slacks not counted)."""
    return sum(1 for a in letters(w, mode) if isinstance(a, int))


def _lkey(a):
    return (0, a) if isinstance(a, int) else (1, a.kind, a.index)


def word_key(w, mode=NONASSOC):
    if mode == ASSOC:
        return (degree(w, mode), tuple(_lkey(a) for a in w))

    def k(t):
        return (0, _lkey(t)) if is_letter(t) else (2, k(t[0]), k(t[1]))
    return (degree(w), k(w))


def fmt_word(w, names=None, mode=NONASSOC):
    def let(a):
        if isinstance(a, Slack):
            return a.name(names)
        return names[a] if names else f"x{a}"
    if mode == ASSOC:
        return "*".join(let(a) for a in w) if w else "1"
    if is_letter(w):
        return let(w)
    return f"({fmt_word(w[0], names)}{fmt_word(w[1], names)})"


def words_nonassoc(n, D, min_degree=1):
    """All nonassociative words over letters 0..n-1 of degree min_degree..D."""
    by = {1: list(range(n))}
    for d in range(2, D + 1):
        by[d] = [(a, b) for k in range(1, d) for a in by[k] for b in by[d - k]]
    return [w for d in range(min_degree, D + 1) for w in by.get(d, [])]


def words_assoc(n, D, min_degree=1):
    return [tuple(t) for d in range(min_degree, D + 1) for t in iproduct(range(n), repeat=d)]


@dataclass
class Tensor:
    sr: object
    mode: str = NONASSOC
    D: int | None = None
    terms: dict = field(default_factory=dict)
    overflow: dict = field(default_factory=dict)

    @staticmethod
    def word(sr, w, mode=NONASSOC, D=None, c=None):
        t = Tensor(sr, mode, D)
        t._acc(w, sr.one if c is None else sr.coerce(c))
        return t

    @staticmethod
    def from_vector(sr, v, mode=NONASSOC, D=None):
        """The degree-one tensor sum v_i x_i."""
        t = Tensor(sr, mode, D)
        for i, c in enumerate(v):
            t._acc(i if mode == NONASSOC else (i,), c)
        return t

    def _acc(self, w, c):
        if self.sr.is_zero(c):
            return
        tgt = self.overflow if self.D is not None and degree(w, self.mode) > self.D else self.terms
        s = self.sr.add(tgt.get(w, self.sr.zero), c)
        if self.sr.is_zero(s):
            tgt.pop(w, None)
        else:
            tgt[w] = s

    def copy(self):
        return Tensor(self.sr, self.mode, self.D, dict(self.terms), dict(self.overflow))

    def __add__(self, o: "Tensor"):
        out = self.copy()
        for w, c in o.terms.items():
            out._acc(w, c)
        for w, c in o.overflow.items():
            s = self.sr.add(out.overflow.get(w, self.sr.zero), c)
            out.overflow[w] = s
        return out

    def scale(self, c):
        out = Tensor(self.sr, self.mode, self.D)
        c = self.sr.coerce(c)
        for w, a in self.terms.items():
            out._acc(w, self.sr.mul(c, a))
        for w, a in self.overflow.items():
            out.overflow[w] = self.sr.mul(c, a)
        return out

    def __mul__(self, o: "Tensor"):
        return tensor_mul(self, o, self.mode, self.D)

    def __eq__(self, o):
        return isinstance(o, Tensor) and self.terms == o.terms and self.overflow == o.overflow

    def is_zero(self):
        return not self.terms

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: word_key(kv[0], self.mode))

    def by_degree(self):
        out = {}
        for w, c in self.terms.items():
            out.setdefault(degree(w, self.mode), {})[w] = c
        return out

    def fmt(self, names=None):
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.items():
            s = fmt_word(w, names, self.mode)
            parts.append(s if c == self.sr.one else f"{self.sr.format(c)}*{s}")
        return " + ".join(parts)


def tensor_mul(a: Tensor, b: Tensor, mode=None, D=None) -> Tensor:
    """Juxtaposition under a new root (nonassoc) or concatenation (assoc), bilinearly."""
    mode = mode or a.mode
    D = a.D if D is None else D
    sr = a.sr
    out = Tensor(sr, mode, D)
    for (wa, ca), (wb, cb) in iproduct(a.terms.items(), b.terms.items()):
        w = (wa, wb) if mode == NONASSOC else tuple(wa) + tuple(wb)
        out._acc(w, sr.mul(ca, cb))
    if a.overflow or b.overflow:
        # products involving overflowed terms stay in overflow
        for (wa, ca), (wb, cb) in iproduct(list(a.overflow.items()) + list(a.terms.items()),
                                           list(b.overflow.items()) + list(b.terms.items())):
            if wa in a.terms and wb in b.terms:
                continue
            w = (wa, wb) if mode == NONASSOC else tuple(wa) + tuple(wb)
            out.overflow[w] = sr.add(out.overflow.get(w, sr.zero), sr.mul(ca, cb))
    return out


@dataclass
class TensorModule:
    """Coordinates for tensors over a fixed finite list of words."""
    sr: object
    words: list
    mode: str = NONASSOC

    def __post_init__(self):
        self.index = {w: i for i, w in enumerate(self.words)}

    @property
    def rank(self):
        return len(self.words)

    def vector(self, t: Tensor):
        v = [self.sr.zero] * len(self.words)
        for w, c in t.terms.items():
            if w not in self.index:
                raise KeyError(f"word {fmt_word(w, mode=self.mode)} is outside the module")
            v[self.index[w]] = c
        return tuple(v)

    def tensor(self, v, D=None):
        t = Tensor(self.sr, self.mode, D)
        for i, c in enumerate(v):
            t._acc(self.words[i], c)
        return t

    def names(self, base_names=None):
        return tuple(fmt_word(w, base_names, self.mode) for w in self.words)


# -- free Lie pairs ---------------------------------------------------------------------------


@dataclass
class FreeLieNull:
    module: TensorModule
    null: Submodule
    labels: list          # generator family per null generator, parallel to the raw list
    raw: list             # (label, tensor) before deduplication


def substitute_leaf(sr, w, pos, vec, D=None):
    """Replace the pos-th leaf (left to right) of w by the degree-one tensor vec."""
    counter = [0]

    def go(t):
        if is_letter(t):
            k = counter[0]
            counter[0] += 1
            if k == pos:
                return Tensor.from_vector(sr, vec, NONASSOC, D)
            return Tensor.word(sr, t, NONASSOC, D)
        return tensor_mul(go(t[0]), go(t[1]), NONASSOC, D)
    return go(w)


def free_lie_null(V: PairDef, D: int, paper_only: bool = False) -> FreeLieNull:
    """Null of the free L0-additive Lie pair on V, truncated at degree D.

    Generators: simple tensors with a factor in V0 or a coefficient in C0, (uu), (uv)+(vu) and
    ((uv)w)+((vw)u)+((wu)v) over pure words.  Unless paper_only, also the reflected sums
    (w(vu))+(u(wv))+(v(uw)) and products of every generator with words up to degree D, which the
    reflected Jacobi axiom and the null-linearity axiom require."""
    if D < 1:
        raise ValueError("D must be at least 1")
    sr, n = V.sr, V.rank
    words = words_nonassoc(n, D)
    mod = TensorModule(sr, words, NONASSOC)
    W = {w: Tensor.word(sr, w, NONASSOC, D) for w in words}
    raw = []
    for w in words:
        for pos in range(degree(w)):
            for g in V.null.generators:
                raw.append(("V0-factor", substitute_leaf(sr, w, pos, g, D)))
        for c in V.base.c0_generators:
            if not sr.is_zero(c):
                raw.append(("C0-coefficient", W[w].scale(c)))
    for u in words:
        if 2 * degree(u) <= D:
            raw.append(("square", W[u] * W[u]))
    for u, v in iproduct(words, repeat=2):
        if word_key(u) < word_key(v) and degree(u) + degree(v) <= D:
            raw.append(("antisymmetry", W[u] * W[v] + W[v] * W[u]))
    for u, v, w in iproduct(words, repeat=3):
        if degree(u) + degree(v) + degree(w) > D:
            continue
        raw.append(("jacobi", (W[u] * W[v]) * W[w] + (W[v] * W[w]) * W[u] + (W[w] * W[u]) * W[v]))
        if not paper_only:
            raw.append(("jacobi-reflected", W[w] * (W[v] * W[u]) + W[u] * (W[w] * W[v]) + W[v] * (W[u] * W[w])))
    if not paper_only:
        frontier = [t for _, t in raw]
        while frontier:
            nxt = []
            for t in frontier:
                dt = min(degree(w) for w in t.terms) if t.terms else D + 1
                for w in words:
                    if dt + degree(w) > D:
                        continue
                    for p in (t * W[w], W[w] * t):
                        if p.terms:
                            raw.append(("ideal", p))
                            nxt.append(p)
            frontier = nxt
    vecs, labels, seen = [], [], set()
    for lab, t in raw:
        if t.is_zero():
            continue
        v = mod.vector(t)
        if v not in seen:
            seen.add(v)
            vecs.append(v)
            labels.append(lab)
    null = Submodule(sr, mod.rank, tuple(vecs), not paper_only)
    return FreeLieNull(mod, null, labels, raw)


def free_lie_pair(base: BasePair, rank: int, D: int, null_gens=(), paper_only: bool = False) -> LiePairDef:
    """The free Lie pair on `rank` letters, as the quotient by words of degree above D: basis =
    nonassociative words of degree <= D, bracket = juxtaposition (zero above D)."""
    V = make_pair(base, rank, null_gens)
    fl = free_lie_null(V, D, paper_only)
    mod = fl.module
    sr = base.semiring

    def entry(i, j):
        u, v = mod.words[i], mod.words[j]
        if degree(u) + degree(v) > D:
            return tuple(sr.zero for _ in range(mod.rank))
        return mod.vector(Tensor.word(sr, (u, v), NONASSOC, D))

    sc = StructureConstants.from_function(sr, mod.rank, entry)
    pair = PairDef(base, mod.rank, fl.null, mod.names())
    return LiePairDef(pair, sc, frozenset({"bilinear"}), None,
                      {"family": "free", "letters": rank, "degree": D, "paper_only": paper_only})
