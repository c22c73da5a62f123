"""Line-oriented pair files.

    tropical-lie-pair v1
    kind lie                     (or krasner)
    semiring naturals            (naturals, booleans, maxplus, nonneg_rationals, integers, table)
    null-part principal 2        (zero | principal m | set a b .. | generators a b ..)
    rank 3
    names x1 x2 x3
    flags bilinear
    negation scalar 1            (scalar e | switch | matrix, rows in [negation])
    [table]                      (finite tables only)
    [null]                       one coefficient vector per line
    [bracket]                    `i j : v` for each nonzero [b_i b_j]
    [involution]                 one image vector per line

Krasner files carry `G`, `M`, `eps` and an optional `involution` permutation instead of a
bracket.  `save` writes the canonical form; `load(save(x))` reproduces x and `save` of a canonical
text reproduces the text byte for byte.  Indices are 0-based."""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .lie import LiePairDef, StructureConstants
from .modules import NegationSpec, PairDef, Submodule, is_zero_vec
from .semiring import BasePair, NullPart, SemiringError, SemiringSpec, format_table, parse_table

HEADER = "tropical-lie-pair v1"
MAP_HEADER = "tropical-lie-map v1"
KEYS = ("kind", "semiring", "null-part", "rank", "names", "flags", "negation", "G", "M", "eps", "label")
SECTIONS = ("table", "null", "bracket", "negation", "involution")


class PairFileError(ValueError):
    def __init__(self, msg, line=None, col=None):
        self.line, self.col = line, col
        where = f"line {line}" + (f", column {col}" if col else "") + ": " if line else ""
        super().__init__(where + msg)


@dataclass
class KrasnerSpec:
    table: SemiringSpec
    G: tuple
    M: tuple | None = None
    eps: int | None = None
    involution: tuple | None = None
    label: str = ""


@dataclass
class ParsedFile:
    keys: dict = field(default_factory=dict)
    sections: dict = field(default_factory=dict)   # name -> list of (lineno, text)
    key_lines: dict = field(default_factory=dict)


def _split(text: str) -> ParsedFile:
    lines = text.splitlines()
    if not lines or lines[0].strip() != HEADER:
        raise PairFileError(f"missing header {HEADER!r}", 1, 1)
    pf = ParsedFile()
    cur = None
    for no, raw in enumerate(lines[1:], start=2):
        s = raw.split("#")[0].rstrip()
        if not s.strip():
            continue
        if s.startswith("["):
            name = s.strip()[1:-1] if s.strip().endswith("]") else None
            if name not in SECTIONS:
                raise PairFileError(f"unknown section {s.strip()!r}", no, 1)
            if name in pf.sections:
                raise PairFileError(f"section [{name}] repeated", no, 1)
            cur = name
            pf.sections[cur] = []
            continue
        if cur is not None:
            pf.sections[cur].append((no, s.strip()))
            continue
        key, _, val = s.strip().partition(" ")
        if key not in KEYS:
            raise PairFileError(f"unknown key {key!r}", no, len(raw) - len(raw.lstrip()) + 1)
        if key in pf.keys:
            raise PairFileError(f"key {key!r} repeated", no, 1)
        pf.keys[key] = val.strip()
        pf.key_lines[key] = no
    return pf


def _need(pf, key):
    if key not in pf.keys:
        raise PairFileError(f"missing key {key!r}")
    return pf.keys[key]


def _semiring(pf):
    name = _need(pf, "semiring")
    if name == "table":
        if "table" not in pf.sections:
            raise PairFileError("semiring table needs a [table] section", pf.key_lines["semiring"])
        try:
            return parse_table([t for _, t in pf.sections["table"]], label=pf.keys.get("label") or None)
        except SemiringError as e:
            raise PairFileError(str(e), pf.sections["table"][0][0] if pf.sections["table"] else None) from None
    try:
        return SemiringSpec.named(name)
    except SemiringError as e:
        raise PairFileError(str(e), pf.key_lines["semiring"], len("semiring ") + 1) from None


def _literal(sr, tok, no, col):
    try:
        return sr.parse(tok)
    except SemiringError as e:
        raise PairFileError(str(e), no, col) from None


def _vector(sr, text, no, rank, offset=0):
    toks, out, col = text.split(), [], offset + 1
    pos = 0
    for t in toks:
        pos = text.index(t, pos)
        out.append(_literal(sr, t, no, offset + pos + 1))
        pos += len(t)
    if rank is not None and len(out) != rank:
        raise PairFileError(f"expected {rank} coefficients, got {len(out)}", no, col)
    return tuple(out)


def _int(pf, key):
    try:
        return int(_need(pf, key))
    except ValueError:
        raise PairFileError(f"{key} must be an integer", pf.key_lines[key], len(key) + 2) from None


def _base(pf, sr):
    np_ = pf.keys.get("null-part", "zero").split()
    kind = np_[0] if np_ else "zero"
    no = pf.key_lines.get("null-part")
    if kind not in ("zero", "principal", "set", "generators"):
        raise PairFileError(f"unknown null-part {kind!r}", no, len("null-part ") + 1)
    vals = tuple(_literal(sr, t, no, None) for t in np_[1:])
    try:
        return BasePair(sr, NullPart(kind, vals))
    except SemiringError as e:
        raise PairFileError(str(e), no) from None


def loads(text: str):
    """Parse a pair file into a LiePairDef or a KrasnerSpec."""
    pf = _split(text)
    kind = pf.keys.get("kind", "lie")
    sr = _semiring(pf)
    if kind == "krasner":
        return _load_krasner(pf, sr)
    if kind != "lie":
        raise PairFileError(f"unknown kind {kind!r}", pf.key_lines.get("kind"))
    base = _base(pf, sr)
    n = _int(pf, "rank")
    names = tuple(pf.keys["names"].split()) if "names" in pf.keys else ()
    if names and len(names) != n:
        raise PairFileError(f"{len(names)} names for rank {n}", pf.key_lines["names"])
    nulls = tuple(_vector(sr, t, no, n) for no, t in pf.sections.get("null", []))
    flags = frozenset(pf.keys.get("flags", "bilinear").split())
    entries = {}
    for no, t in pf.sections.get("bracket", []):
        head, sep, vec = t.partition(":")
        if not sep:
            raise PairFileError("bracket line must read `i j : vector`", no, 1)
        try:
            i, j = (int(x) for x in head.split())
        except ValueError:
            raise PairFileError("bracket indices must be two integers", no, 1) from None
        if not (0 <= i < n and 0 <= j < n):
            raise PairFileError(f"bracket index ({i},{j}) out of range", no, 1)
        if (i, j) in entries:
            raise PairFileError(f"bracket entry ({i},{j}) repeated", no, 1)
        entries[i, j] = _vector(sr, vec, no, n, len(head) + 1)
    neg = None
    if "negation" in pf.keys:
        nk = pf.keys["negation"].split()
        no = pf.key_lines["negation"]
        if nk[0] == "scalar" and len(nk) == 2:
            neg = NegationSpec.scalar(_literal(sr, nk[1], no, len("negation scalar ") + 1))
        elif nk == ["switch"]:
            neg = NegationSpec.switch()
        elif nk == ["matrix"]:
            rows = tuple(_vector(sr, t, r, n) for r, t in pf.sections.get("negation", []))
            if len(rows) != n:
                raise PairFileError(f"negation matrix needs {n} rows", no)
            neg = NegationSpec("matrix", matrix=rows)
        else:
            raise PairFileError(f"bad negation {pf.keys['negation']!r}", no)
    doubled = [f for f in flags if f.startswith("doubled-")]
    if doubled:
        null = _doubled_null(base, n, nulls, "ideal" in flags, doubled[0][len("doubled-"):])
    else:
        null = Submodule(sr, n, nulls, "ideal" in flags)
    pair = PairDef(base, n, null, names)
    sc = StructureConstants.from_dict(sr, n, entries)
    meta = {"allow_degenerate": True} if "degenerate" in flags else {}
    meta["source"] = "file"
    rest = frozenset(f for f in flags if f not in ("ideal", "degenerate") and not f.startswith("doubled-"))
    return LiePairDef(pair, sc, rest or frozenset({"bilinear"}), neg, meta)


def _doubled_null(base, n, gens, ideal, mode):
    """Rebuild the doubled null: the half null is spanned by first halves of (g, 0) generators."""
    from .doubling import NULL_MODES, DoubledNull
    if mode not in NULL_MODES or n % 2:
        raise PairFileError(f"bad doubled flag doubled-{mode} for rank {n}")
    sr, h = base.semiring, n // 2
    half = [g[:h] for g in gens if is_zero_vec(sr, g[h:]) and not is_zero_vec(sr, g[:h])]
    return DoubledNull(sr, n, gens, ideal, Submodule(sr, h, tuple(half), ideal), mode)


def _load_krasner(pf, sr):
    if sr.kind != "finite_table":
        raise PairFileError("krasner files need semiring table", pf.key_lines.get("semiring"))

    def ints(key):
        if key not in pf.keys:
            return None
        try:
            return tuple(int(x) for x in pf.keys[key].split())
        except ValueError:
            raise PairFileError(f"{key} must list integers", pf.key_lines[key]) from None
    G = ints("G")
    if G is None:
        raise PairFileError("missing key 'G'")
    eps = ints("eps")
    inv = None
    if "involution" in pf.sections:
        rows = pf.sections["involution"]
        inv = tuple(int(x) for _, t in rows for x in t.split())
    return KrasnerSpec(sr, G, ints("M"), eps[0] if eps else None, inv, pf.keys.get("label", ""))


def load(path):
    return loads(Path(path).read_text())


def _fmt_vec(sr, v):
    return " ".join(sr.format(x) for x in v)


def dumps(obj) -> str:
    if isinstance(obj, KrasnerSpec):
        return _dump_krasner(obj)
    lp: LiePairDef = obj
    sr = lp.sr
    base = lp.pair.base
    out = [HEADER, "kind lie"]
    out += _sr_lines(sr)
    np_ = base.null_part
    out.append("null-part " + " ".join([np_.kind] + [sr.format(v) for v in np_.values]))
    out.append(f"rank {lp.rank}")
    out.append("names " + " ".join(lp.names))
    flags = set(lp.flags)
    if lp.null.ideal_closed:
        flags.add("ideal")
    if lp.meta.get("allow_degenerate"):
        flags.add("degenerate")
    mode = getattr(lp.null, "mode", None)
    if mode is not None:
        flags.add(f"doubled-{mode}")
    out.append("flags " + " ".join(sorted(flags)))
    if lp.negation is not None:
        ng = lp.negation
        if ng.kind == "scalar":
            out.append(f"negation scalar {sr.format(sr.coerce(ng.eps))}")
        else:
            out.append(f"negation {ng.kind}")
    if sr.kind == "finite_table":
        out.append("[table]")
        out += format_table(sr).splitlines()
    out.append("[null]")
    out += [_fmt_vec(sr, g) for g in lp.null.generators]
    out.append("[bracket]")
    for i in range(lp.rank):
        for j in range(lp.rank):
            v = lp.sc.table[i][j]
            if not is_zero_vec(sr, v):
                out.append(f"{i} {j} : {_fmt_vec(sr, v)}")
    if lp.negation is not None and lp.negation.kind == "matrix":
        out.append("[negation]")
        out += [_fmt_vec(sr, r) for r in lp.negation.matrix]
    return "\n".join(out) + "\n"


def _sr_lines(sr):
    if sr.kind == "finite_table":
        return ["semiring table"] + ([f"label {sr.label}"] if sr.label else [])
    return [f"semiring {sr.kind}"]


def _dump_krasner(ks: KrasnerSpec) -> str:
    out = [HEADER, "kind krasner"] + _sr_lines(ks.table)
    out.append("G " + " ".join(map(str, ks.G)))
    if ks.M is not None:
        out.append("M " + " ".join(map(str, ks.M)))
    if ks.eps is not None:
        out.append(f"eps {ks.eps}")
    out.append("[table]")
    out += format_table(ks.table).splitlines()
    if ks.involution is not None:
        out.append("[involution]")
        out.append(" ".join(map(str, ks.involution)))
    return "\n".join(out) + "\n"


def save(obj, path):
    Path(path).write_text(dumps(obj))


# -- target maps for the eps enveloping pair ----------------------------------------------------


def loads_map(text: str, lp: LiePairDef):
    """tropical-lie-map v1 / target matrix k / eps e / image i : v.  The target is M_k over the
    pair's base with null C0 M_k + (1+eps) M_k."""
    from .constructions import matrix_algebra
    from .pbw import TargetMap
    lines = text.splitlines()
    if not lines or lines[0].strip() != MAP_HEADER:
        raise PairFileError(f"missing header {MAP_HEADER!r}", 1, 1)
    sr = lp.sr
    k, eps, images = None, None, {}
    for no, raw in enumerate(lines[1:], start=2):
        s = raw.split("#")[0].strip()
        if not s:
            continue
        key, _, val = s.partition(" ")
        if key == "target":
            parts = val.split()
            if len(parts) != 2 or parts[0] != "matrix" or not parts[1].isdigit():
                raise PairFileError("target must read `target matrix <k>`", no, 8)
            k = int(parts[1])
        elif key == "eps":
            eps = _literal(sr, val, no, 5)
        elif key == "image":
            head, sep, vec = val.partition(":")
            if not sep or not head.strip().isdigit():
                raise PairFileError("image line must read `image i : vector`", no, 7)
            if k is None:
                raise PairFileError("target must come before images", no, 1)
            images[int(head)] = _vector(sr, vec, no, k * k, len("image ") + len(head) + 1)
        else:
            raise PairFileError(f"unknown key {key!r}", no, 1)
    if k is None:
        raise PairFileError("missing target")
    missing = [i for i in range(lp.rank) if i not in images]
    if missing:
        raise PairFileError(f"no image for basis index {missing[0]}")
    alg = matrix_algebra(lp.pair.base, k, eps=eps)
    return TargetMap(alg, [images[i] for i in range(lp.rank)])


def dumps_map(f, eps, k) -> str:
    sr = f.target.sr
    out = [MAP_HEADER, f"target matrix {k}", f"eps {sr.format(sr.coerce(eps))}"]
    out += [f"image {i} : {_fmt_vec(sr, v)}" for i, v in enumerate(f.images)]
    return "\n".join(out) + "\n"
