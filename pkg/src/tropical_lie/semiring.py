"""Commutative semirings with exact arithmetic, and base pairs (C, C0)."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iproduct
from pathlib import Path

from .reports import CheckReport


class SemiringError(ValueError):
    pass


class TableError(SemiringError):
    pass


class MixedSpecError(TypeError):
    pass


class _Bottom:
    """The max-plus zero, printed as -inf."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "-inf"

    def __reduce__(self):
        return (_Bottom, ())


BOTTOM = _Bottom()

KINDS = ("naturals", "booleans", "maxplus", "nonneg_rationals", "integers", "finite_table")

_ALIASES = {
    "nat": "naturals", "n": "naturals", "naturals": "naturals",
    "bool": "booleans", "b": "booleans", "booleans": "booleans",
    "maxplus": "maxplus", "max-plus": "maxplus", "tropical": "maxplus",
    "qplus": "nonneg_rationals", "nonneg_rationals": "nonneg_rationals", "q+": "nonneg_rationals",
    "int": "integers", "z": "integers", "integers": "integers",
    "finite_table": "finite_table", "table": "finite_table",
}


def _frac(x) -> Fraction:
    if isinstance(x, bool):
        x = int(x)
    if isinstance(x, float):
        raise SemiringError(f"floats are not exact: {x!r}")
    return Fraction(x)


@dataclass(frozen=True)
class SemiringSpec:
    kind: str
    add_table: tuple | None = None
    mul_table: tuple | None = None
    zero_index: int | None = None
    one_index: int | None = None
    label: str | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise SemiringError(f"unknown semiring kind {self.kind!r}")

    # -- construction -------------------------------------------------
    @staticmethod
    def named(name: str) -> "SemiringSpec":
        k = _ALIASES.get(name.lower())
        if k is None or k == "finite_table":
            raise SemiringError(f"unknown semiring {name!r}")
        return SemiringSpec(k)

    @staticmethod
    def from_tables(add, mul, zero, one, label=None) -> "SemiringSpec":
        n = len(add)
        if n == 0:
            raise TableError("empty table")
        for nm, t in (("add", add), ("mul", mul)):
            if len(t) != n:
                raise TableError(f"{nm} table has {len(t)} rows, expected {n}")
            for i, row in enumerate(t):
                if len(row) != n:
                    raise TableError(f"{nm} row {i} has {len(row)} entries, expected {n}")
                for j, v in enumerate(row):
                    if not isinstance(v, int) or not 0 <= v < n:
                        raise TableError(f"{nm}[{i}][{j}] = {v!r} is out of range 0..{n - 1}")
        for nm, v in (("zero", zero), ("one", one)):
            if not isinstance(v, int) or not 0 <= v < n:
                raise TableError(f"{nm} index {v!r} out of range")
        return SemiringSpec("finite_table", tuple(tuple(r) for r in add),
                            tuple(tuple(r) for r in mul), zero, one, label)

    # -- basic data ---------------------------------------------------
    @property
    def name(self) -> str:
        if self.kind == "finite_table":
            return self.label or f"table{len(self.add_table)}"
        return self.kind

    @property
    def is_finite(self) -> bool:
        return self.kind in ("booleans", "finite_table")

    @property
    def is_ring(self) -> bool:
        return self.kind == "integers"

    @property
    def zero(self):
        return {"naturals": 0, "booleans": 0, "maxplus": BOTTOM, "nonneg_rationals": Fraction(0),
                "integers": 0, "finite_table": self.zero_index}[self.kind]

    @property
    def one(self):
        return {"naturals": 1, "booleans": 1, "maxplus": Fraction(0), "nonneg_rationals": Fraction(1),
                "integers": 1, "finite_table": self.one_index}[self.kind]

    def elements(self):
        if self.kind == "booleans":
            return [0, 1]
        if self.kind == "finite_table":
            return list(range(len(self.add_table)))
        raise SemiringError(f"{self.name} is infinite")

    # -- arithmetic on raw values -----------------------------------------
    def add(self, a, b):
        k = self.kind
        if k in ("naturals", "integers", "nonneg_rationals"):
            return a + b
        if k == "booleans":
            return a | b
        if k == "maxplus":
            if a is BOTTOM:
                return b
            if b is BOTTOM:
                return a
            return a if a >= b else b
        return self.add_table[a][b]

    def mul(self, a, b):
        k = self.kind
        if k in ("naturals", "integers", "nonneg_rationals"):
            return a * b
        if k == "booleans":
            return a & b
        if k == "maxplus":
            if a is BOTTOM or b is BOTTOM:
                return BOTTOM
            return a + b
        return self.mul_table[a][b]

    def is_zero(self, a) -> bool:
        if self.kind == "maxplus":
            return a is BOTTOM
        return a == self.zero

    def sum(self, values):
        acc = self.zero
        for v in values:
            acc = self.add(acc, v)
        return acc

    def neg(self, a):
        if self.kind != "integers":
            raise SemiringError(f"{self.name} has no additive inverses")
        return -a

    def coerce(self, x):
        k = self.kind
        if k == "naturals":
            if isinstance(x, Fraction) and x.denominator == 1:
                x = int(x)
            if not isinstance(x, int) or x < 0:
                raise SemiringError(f"{x!r} is not a natural number")
            return int(x)
        if k == "booleans":
            if x in (0, 1, True, False):
                return int(x)
            raise SemiringError(f"{x!r} is not boolean")
        if k == "integers":
            if isinstance(x, Fraction) and x.denominator == 1:
                x = int(x)
            if not isinstance(x, int):
                raise SemiringError(f"{x!r} is not an integer")
            return int(x)
        if k == "nonneg_rationals":
            q = _frac(x)
            if q < 0:
                raise SemiringError(f"{x!r} is negative")
            return q
        if k == "maxplus":
            if x is BOTTOM or x == "-inf":
                return BOTTOM
            return _frac(x)
        if not isinstance(x, int) or not 0 <= x < len(self.add_table):
            raise SemiringError(f"{x!r} is not a table index")
        return x

    def parse(self, lit: str):
        s = lit.strip()
        if self.kind == "maxplus" and s == "-inf":
            return BOTTOM
        try:
            if "/" in s:
                if self.kind not in ("maxplus", "nonneg_rationals"):
                    raise SemiringError(f"rational literal {s!r} for {self.name}")
                return self.coerce(Fraction(s))
            return self.coerce(int(s))
        except ValueError as e:
            raise SemiringError(f"bad literal {lit!r} for {self.name}: {e}") from None

    def format(self, a) -> str:
        if a is BOTTOM:
            return "-inf"
        if isinstance(a, Fraction):
            return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"
        return str(a)

    def sample(self, rng: random.Random, size: int = 5):
        k = self.kind
        if self.is_finite:
            return rng.choice(self.elements())
        if k == "naturals":
            return rng.randint(0, size)
        if k == "integers":
            return rng.randint(-size, size)
        if k == "nonneg_rationals":
            return Fraction(rng.randint(0, size), rng.randint(1, 3))
        if rng.random() < 0.15:
            return BOTTOM
        return Fraction(rng.randint(-size, size), rng.randint(1, 3))

    def le(self, a, b) -> bool:
        """Natural order a <= b where it is total (max-plus, naturals, rationals)."""
        if self.kind == "maxplus":
            return a is BOTTOM or (b is not BOTTOM and a <= b)
        return a <= b

    def scalar(self, x) -> "Scalar":
        return Scalar(self, self.coerce(x))


@dataclass(frozen=True)
class Scalar:
    spec: SemiringSpec
    value: object

    def _check(self, other):
        if not isinstance(other, Scalar):
            other = Scalar(self.spec, self.spec.coerce(other))
        if other.spec != self.spec:
            raise MixedSpecError(f"cannot combine {self.spec.name} with {other.spec.name}")
        return other

    def __add__(self, other):
        o = self._check(other)
        return Scalar(self.spec, self.spec.add(self.value, o.value))

    __radd__ = __add__

    def __mul__(self, other):
        o = self._check(other)
        return Scalar(self.spec, self.spec.mul(self.value, o.value))

    __rmul__ = __mul__

    def __repr__(self):
        return self.spec.format(self.value)


def load_table(path) -> SemiringSpec:
    """Read a finite table: n, n addition rows, n multiplication rows, `zero=i one=j`."""
    lines = [ln.split("#")[0].strip() for ln in Path(path).read_text().splitlines()]
    lines = [ln for ln in lines if ln]
    return parse_table(lines, label=Path(path).stem)


def parse_table(lines, label=None) -> SemiringSpec:
    try:
        n = int(lines[0])
    except (IndexError, ValueError):
        raise TableError("first line must be the table size") from None
    if len(lines) < 2 * n + 2:
        raise TableError(f"expected {2 * n + 2} lines, got {len(lines)}")

    def rows(off):
        out = []
        for i in range(n):
            try:
                out.append([int(t) for t in lines[off + i].split()])
            except ValueError:
                raise TableError(f"non-integer entry on table line {off + i + 1}") from None
        return out

    add, mul = rows(1), rows(1 + n)
    units = dict(tok.split("=") for tok in lines[1 + 2 * n].split())
    try:
        zero, one = int(units["zero"]), int(units["one"])
    except (KeyError, ValueError):
        raise TableError("last line must read `zero=<i> one=<j>`") from None
    return SemiringSpec.from_tables(add, mul, zero, one, label)


def format_table(spec: SemiringSpec) -> str:
    n = len(spec.add_table)
    out = [str(n)]
    out += [" ".join(map(str, r)) for r in spec.add_table]
    out += [" ".join(map(str, r)) for r in spec.mul_table]
    out.append(f"zero={spec.zero_index} one={spec.one_index}")
    return "\n".join(out) + "\n"


def verify_semiring_laws(spec: SemiringSpec, samples: int = 200, seed: int = 0,
                         commutative: bool = True) -> CheckReport:
    """Check the semiring axioms, exhaustively for finite carriers and on seeded samples otherwise.

    One entry per law; a failing law carries its first counterexample.
    """
    if spec.is_finite:
        els = spec.elements()
        singles = [(a,) for a in els]
        pairs = list(iproduct(els, repeat=2))
        triples = list(iproduct(els, repeat=3))
        mode = "exhaustive"
    else:
        rng = random.Random(seed)
        triples = [(spec.sample(rng), spec.sample(rng), spec.sample(rng)) for _ in range(samples)]
        pairs = [t[:2] for t in triples]
        singles = [t[:1] for t in triples] + [(spec.zero,), (spec.one,)]
        mode = "sampled"
    z, o = spec.zero, spec.one
    ad, mu = spec.add, spec.mul
    laws = [
        ("add-identity", singles, lambda a: ad(a, z) == a and ad(z, a) == a, lambda a: (a, z)),
        ("mul-identity", singles, lambda a: mu(a, o) == a and mu(o, a) == a, lambda a: (a, o)),
        ("zero-absorbing", singles, lambda a: mu(a, z) == z and mu(z, a) == z, lambda a: (a, z)),
        ("add-commutative", pairs, lambda a, b: ad(a, b) == ad(b, a), None),
        ("add-associative", triples, lambda a, b, c: ad(ad(a, b), c) == ad(a, ad(b, c)), None),
        ("mul-associative", triples, lambda a, b, c: mu(mu(a, b), c) == mu(a, mu(b, c)), None),
        ("distributive", triples,
         lambda a, b, c: mu(a, ad(b, c)) == ad(mu(a, b), mu(a, c))
         and mu(ad(b, c), a) == ad(mu(b, a), mu(c, a)), None),
    ]
    if commutative:
        laws.insert(4, ("mul-commutative", pairs, lambda a, b: mu(a, b) == mu(b, a), None))
    rep = CheckReport(mode=mode, seed=None if spec.is_finite else seed)
    for law, cases, pred, wit in laws:
        bad = next((c for c in cases if not pred(*c)), None)
        if bad is None:
            rep.add(law, (), "pass")
        else:
            w = wit(*bad) if wit else bad
            rep.add(law, (), "fail", "(" + ", ".join(spec.format(x) for x in w) + ")")
    return rep


# -- base pairs ----------------------------------------------------------------


@dataclass(frozen=True)
class NullPart:
    """Description of C0 inside C: zero, principal m*C, an explicit finite set, or generators."""

    kind: str  # zero | principal | set | generators
    values: tuple = ()

    @staticmethod
    def zero_only():
        return NullPart("zero")

    @staticmethod
    def principal(m):
        return NullPart("principal", (m,))

    def generators(self, spec: SemiringSpec) -> tuple:
        if self.kind == "zero":
            return ()
        return tuple(v for v in self.values if not spec.is_zero(v))


@dataclass(frozen=True)
class BasePair:
    semiring: SemiringSpec
    null_part: NullPart = field(default_factory=NullPart.zero_only)

    def __post_init__(self):
        sr, np_ = self.semiring, self.null_part
        vals = tuple(sr.coerce(v) for v in np_.values)
        object.__setattr__(self, "null_part", NullPart(np_.kind, vals))
        if np_.kind == "principal" and len(vals) != 1:
            raise SemiringError("principal C0 needs exactly one generator")
        if np_.kind == "set":
            s = set(vals)
            if sr.zero not in s:
                raise SemiringError("C0 must contain 0")
            if sr.is_finite:
                for a in vals:
                    for b in vals:
                        if sr.add(a, b) not in s:
                            raise SemiringError(f"C0 not closed under addition at ({sr.format(a)}, {sr.format(b)})")
                    for c in sr.elements():
                        if sr.mul(c, a) not in s:
                            raise SemiringError(f"C0 not an ideal at ({sr.format(c)}, {sr.format(a)})")
            elif any(not sr.is_zero(v) for v in vals):
                raise SemiringError("explicit finite C0 over an infinite semiring must be {0}")

    @staticmethod
    def from_eps(semiring: SemiringSpec, eps) -> "BasePair":
        """(C, (1+eps)C); the point is that 1 + eps lies in C0 by construction."""
        e = semiring.coerce(eps)
        return BasePair(semiring, NullPart.principal(semiring.add(semiring.one, e)))

    @property
    def c0_generators(self) -> tuple:
        return self.null_part.generators(self.semiring)

    def describe(self) -> str:
        sr, np_ = self.semiring, self.null_part
        if np_.kind == "zero":
            return f"({sr.name}, 0)"
        return f"({sr.name}, {np_.kind} " + " ".join(sr.format(v) for v in np_.values) + ")"


def scalar_in_C0(base: BasePair, c):
    """Decide c in C0 exactly; the witness recombines the C0 generators to c."""
    from .membership import membership, MembershipVerdict

    sr = base.semiring
    c = sr.coerce(c)
    if base.null_part.kind == "set":
        vals = base.null_part.values
        if c in vals:
            return MembershipVerdict.member(tuple(sr.one if v == c else sr.zero for v in vals))
        return MembershipVerdict.not_member("not listed")
    gens = [(g,) for g in base.c0_generators]
    return membership(sr, gens, (c,))
