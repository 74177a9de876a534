import io
import json
import subprocess
import sys

import pytest

from rectdist import Barcode, parse_barcode
from rectdist.cli import main


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def files(tmp_path):
    def make(name, text):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)
    return make


def test_dist_examples():
    assert run("dist", "(0,2) x (0,2)", "(1,3) x (1,3)")[:2] == (0, "1\n")
    assert run("dist", "(0,1)", "(0,1)")[:2] == (0, "0\n")
    code, out, err = run("dist", "(0,1)", "(0,1) x (0,1)")
    assert code == 3 and out == "" and "dimension" in err


def test_dist_parse_error_exits_2():
    code, _, err = run("dist", "(0,1", "(0,1)")
    assert code == 2 and "column" in err
    assert run("dist", "(2,1)", "(0,1)")[0] == 2


def test_bottleneck_examples(files, tmp_path):
    a = files("a.txt", "(0,2) x (0,2)\n")
    b = files("b.txt", "(1,3) x (1,3)\n")
    long_bar = files("c.txt", "(0,10) x (0,1)\n")
    empty = files("empty.txt", "")
    assert run("bottleneck", a, b)[:2] == (0, "1\n")
    assert run("bottleneck", long_bar, empty)[:2] == (0, "1/2\n")
    assert run("bottleneck", a, a)[:2] == (0, "0\n")

    out_path = tmp_path / "m.json"
    assert run("bottleneck", a, a, "--matching", str(out_path))[0] == 0
    doc = json.loads(out_path.read_text())
    assert doc == {"pairs": [[0, 0]], "unmatched_left": [], "unmatched_right": []}


def test_bottleneck_errors(files):
    one = files("one.txt", "(0,1)\n")
    two = files("two.txt", "(0,1) x (0,1)\n")
    bad = files("bad.txt", "(0,1) y (0,1)\n")
    assert run("bottleneck", one, two)[0] == 3
    assert run("bottleneck", one, bad)[0] == 2
    assert run("bottleneck", one, "/nonexistent/file")[0] == 2


def test_verify_passes(files):
    a = files("a.txt", "(0,2) x (0,2)\n(0,inf) x (1,4)\n")
    b = files("b.txt", "(1,3) x (1,3)\n")
    code, out, _ = run("verify", a, b, "--trials", "20", "--seed", "3")
    assert code == 0
    assert "FAIL" not in out and out.count("PASS") >= 5
    empty = files("empty.txt", "")
    code, out, _ = run("verify", empty, empty)
    assert code == 0 and "PASS d_B search=0 enumeration=0" in out


def test_verify_skips_enumeration_for_large_inputs(files):
    text = "".join(f"({k},{k + 3})\n" for k in range(9))
    big = files("big.txt", text)
    code, out, _ = run("verify", big, big)
    assert code == 0 and "SKIP" in out


def test_gen_is_deterministic_and_reparses():
    args = ("gen", "--count", "5", "--dim", "2", "--range", "-5..5", "--inf-prob", "0.1", "--seed", "7")
    code, first, _ = run(*args)
    assert code == 0 and run(*args)[1] == first
    bc = parse_barcode(first)
    assert len(bc) == 5 and bc.dim == 2
    for r in bc:
        for a, b in zip(r.lower, r.upper):
            assert a < b
            assert not a.is_finite or -5 <= a.fraction <= 5
            assert not b.is_finite or -5 <= b.fraction <= 5


def test_gen_empty_and_invalid():
    assert run("gen", "--count", "0", "--dim", "2")[:2] == (0, "")
    assert run("gen", "--count", "-1", "--dim", "2")[0] == 2
    assert run("gen", "--count", "3", "--dim", "0")[0] == 2
    assert run("gen", "--count", "3", "--dim", "2", "--inf-prob", "1.5")[0] == 2
    assert run("gen", "--count", "3", "--dim", "2", "--range", "4..4")[0] == 2


def test_json_format_roundtrip(files):
    code, text, _ = run("--format", "json", "gen", "--count", "4", "--dim", "3", "--seed", "1")
    assert code == 0
    bc = parse_barcode(text, "json")
    assert len(bc) == 4 and bc.dim == 3
    path = files("g.json", text)
    assert run("--format", "json", "bottleneck", path, path)[:2] == (0, "0\n")
    empty = files("e.json", json.dumps({"dim": 3, "bars": []}))
    assert run("--format", "json", "verify", path, empty)[0] == 0


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "rectdist", "dist", "(0,inf) x (0,inf)", "(1,inf) x (1,inf)"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "1\n"


def test_missing_command_is_usage_error():
    with pytest.raises(SystemExit) as info:
        run()
    assert info.value.code == 2
