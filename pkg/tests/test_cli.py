import contextlib
import io
from pathlib import Path

import pytest

from tropical_lie.cli import main
from tropical_lie.lie import check_lie_axioms
from tropical_lie.pairfile import PairFileError, dumps, load, loads

FIX = Path(__file__).parent / "fixtures"
PAIRS = sorted(p.name for p in FIX.glob("*.pair"))


def run(*args):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main([str(a) for a in args])
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("name", PAIRS)
def test_pair_file_round_trip(name):
    text = (FIX / name).read_text()
    assert dumps(loads(text)) == text


@pytest.mark.parametrize("old,new,line,col", [
    ("0 1 : 0 0 1 0", "0 1 : 0 x 1 0", 12, 9),
    ("rank 4", "rank four", 5, 6),
    ("0 1 : 0 0 1 0", "0 1 : 0 0 1", 12, 6),
])
def test_parse_errors_carry_position(old, new, line, col):
    text = (FIX / "heisenberg.pair").read_text().replace(old, new)
    with pytest.raises(PairFileError) as ei:
        loads(text)
    assert ei.value.line == line and f"line {line}, column {col}" in str(ei.value)


def test_check_exit_codes(tmp_path):
    assert run("check", FIX / "heisenberg.pair")[0] == 0
    code, out, _ = run("check", FIX / "mut01-filiform-c0zero.pair")
    assert code == 1 and "fgen-1 (0,0) fail" in out
    assert run("check", FIX / "qplus-exhaust.pair")[0] == 2
    bad = tmp_path / "bad.pair"
    bad.write_text((FIX / "heisenberg.pair").read_text().replace("rank 4", "rank four"))
    code, _, err = run("check", bad)
    assert code == 3 and "line 5" in err
    assert run("check", tmp_path / "missing.pair")[0] == 3


def test_verdict_line_format():
    _, out, _ = run("check", FIX / "heisenberg.pair")
    first = out.splitlines()[0].split()
    assert first[0] == "fgen-1" and first[1] == "(0)" and first[2] == "pass"
    assert out.splitlines()[-1].startswith("# ")


@pytest.mark.parametrize("args", [
    ["filiform", "--n", "4", "--eps", "1"],
    ["classical", "sl", "--n", "2", "--base", "int", "--eps", "-1"],
    ["cross-product", "--classical"],
    ["cross-product", "--random", "--base", "nat", "--c0", "2", "--seed", "5"],
    ["cross-product", "--c=-1,-1,-1", "--base", "int"],
    ["abelian", "--n", "3"],
])
def test_construct_writes_a_valid_pair(tmp_path, args):
    out = tmp_path / "p.pair"
    code, _, err = run("construct", *args, "--out", out)
    assert code == 0, err
    assert check_lie_axioms(load(out)).ok
    assert run("check", out)[0] == 0


def test_construct_degenerate_cross_product(tmp_path):
    out = tmp_path / "p.pair"
    code, stdout, err = run("construct", "cross-product", "--c", "0,0,0", "--d", "0,0,0", "--out", out)
    assert code == 0 and "degenerate" in stdout + err
    assert "degenerate" in out.read_text()


def test_construct_krasner(tmp_path):
    out = tmp_path / "k.pair"
    assert run("construct", "krasner", "--table", FIX / "f2m2.tbl", "--G", "9", "--out", out)[0] == 0
    code, _, err = run("construct", "krasner", "--table", FIX / "f2m2.tbl", "--G", "0")
    assert code == 3 and "no inverse" in err


def test_double_and_catalog(tmp_path):
    out = tmp_path / "d.pair"
    assert run("double", FIX / "heisenberg.pair", "--out", out)[0] == 0
    assert load(out).rank == 8 and run("check", out)[0] == 0
    code, stdout, _ = run("catalog", "--list")
    assert code == 0 and "dim4-heisenberg" in stdout
    assert run("catalog", "dim4-1", "--out", tmp_path / "c.pair")[0] == 0


def test_pbw_commands():
    code, out, _ = run("pbw", "weak", FIX / "abelian2-nat.pair")
    assert code == 0 and "established (LZS)" in out
    assert run("pbw", "preceq", FIX / "abelian2-nat.pair")[0] == 0
    # with a good map the fix condition holds; the only failures are the refuted literal surpassing form
    code, out, _ = run("pbw", "eps", FIX / "filiform-eps1.pair", "--eps", "1", "--target", FIX / "f-good.map")
    fails = [ln for ln in out.splitlines() if " fail" in ln and not ln.startswith("#")]
    assert code == 1 and len(fails) == 8
    assert all(ln.startswith("surpassing-literal ") and "refuted mod 2" in ln for ln in fails)
    code, out, _ = run("pbw", "eps", FIX / "filiform-eps1.pair", "--eps", "1", "--target", FIX / "f-bad.map")
    assert code == 1 and "fix (0,1) fail" in out
