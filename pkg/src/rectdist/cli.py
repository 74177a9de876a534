"""Command-line front end.

Exit codes: 0 success, 1 verification mismatch, 2 parse or usage error,
3 dimension mismatch.
"""

from __future__ import annotations

import argparse
import itertools
import re
import sys
from typing import Optional, Sequence

from .barcode_io import JSON, TEXT, ParseError, parse_rectangle, read_barcode, serialize_barcode
from .bottleneck import build_cost_matrix, bottleneck_distance, matching_cost, matching_to_json
from .extended_reals import DimensionMismatch
from .oracle import MAX_ENUMERATION_BARS, enumerate_bottleneck, oracle_interleaving_distance
from .rectangles import InvalidRectangle, interleaving_distance, zero_distance
from .sampling import random_barcode, random_rectangle, seeded

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_DIM = 3


class UsageError(Exception):
    pass


def _range(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"\s*(-?\d+)\.\.(-?\d+)\s*", text)
    if not m:
        raise argparse.ArgumentTypeError(f"expected LO..HI, got {text!r}")
    return int(m[1]), int(m[2])


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="rectdist",
        description="Exact interleaving and bottleneck distances for rectangle persistence modules.",
    )
    p.add_argument("--format", choices=(TEXT, JSON), default=TEXT,
                   help="barcode file format for input and generated output (default: text)")
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("dist", help="interleaving distance between two rectangle literals")
    d.add_argument("rect1", help='e.g. "(0,2) x (0,2)"')
    d.add_argument("rect2")

    b = sub.add_parser("bottleneck", help="bottleneck distance between two barcode files")
    b.add_argument("file_a")
    b.add_argument("file_b")
    b.add_argument("--matching", metavar="PATH", help="write an optimal matching as JSON")

    v = sub.add_parser("verify", help="cross-check formulas against the brute-force oracles")
    v.add_argument("file_a")
    v.add_argument("file_b")
    v.add_argument("--trials", type=int, default=0,
                   help="additional random rectangle pairs to cross-check")
    v.add_argument("--seed", type=int, default=0)

    g = sub.add_parser("gen", help="print a seeded random barcode")
    g.add_argument("--count", type=int, required=True)
    g.add_argument("--dim", type=int, required=True)
    g.add_argument("--range", type=_range, default=(-5, 5), dest="coord_range", metavar="LO..HI")
    g.add_argument("--inf-prob", type=float, default=0.1)
    g.add_argument("--seed", type=int, default=0)
    return p


def cmd_dist(args, out) -> int:
    r, q = parse_rectangle(args.rect1), parse_rectangle(args.rect2)
    print(interleaving_distance(r, q), file=out)
    return EXIT_OK


def cmd_bottleneck(args, out) -> int:
    a = read_barcode(args.file_a, args.format)
    b = read_barcode(args.file_b, args.format)
    value, sigma = bottleneck_distance(a, b)
    print(value, file=out)
    if args.matching:
        with open(args.matching, "w", encoding="utf-8") as fh:
            fh.write(matching_to_json(sigma, len(a), len(b)))
    return EXIT_OK


def _report(out, ok: bool, label: str) -> bool:
    print(f"{'PASS' if ok else 'FAIL'} {label}", file=out)
    return ok


def cmd_verify(args, out) -> int:
    a = read_barcode(args.file_a, args.format)
    b = read_barcode(args.file_b, args.format)
    if a.dim is not None and b.dim is not None and a.dim != b.dim:
        raise DimensionMismatch(f"barcodes of dimension {a.dim} and {b.dim}")
    ok = True
    for (i, r), (j, q) in itertools.product(enumerate(a), enumerate(b)):
        got, want = interleaving_distance(r, q), oracle_interleaving_distance(r, q)
        ok &= _report(out, got == want, f"d_I(A[{i}], B[{j}]) formula={got} oracle={want}")
    for name, bars in (("A", a), ("B", b)):
        for i, r in enumerate(bars):
            got, want = zero_distance(r), oracle_interleaving_distance(r, None)
            ok &= _report(out, got == want, f"d_I({name}[{i}], 0) formula={got} oracle={want}")

    value, sigma = bottleneck_distance(a, b)
    witness = matching_cost(build_cost_matrix(a, b), sigma)
    ok &= _report(out, witness == value, f"d_B witness cost={witness} value={value}")
    if len(a) <= MAX_ENUMERATION_BARS and len(b) <= MAX_ENUMERATION_BARS:
        brute = enumerate_bottleneck(a, b)
        ok &= _report(out, brute == value, f"d_B search={value} enumeration={brute}")
    else:
        print(f"SKIP d_B enumeration: more than {MAX_ENUMERATION_BARS} bars on a side", file=out)

    if args.trials > 0:
        dim = a.dim or b.dim or 2
        rng = seeded(args.seed)
        bad = 0
        for _ in range(args.trials):
            r, q = random_rectangle(rng, dim), random_rectangle(rng, dim)
            if interleaving_distance(r, q) != oracle_interleaving_distance(r, q):
                bad += 1
                print(f"  mismatch: {r}  vs  {q}", file=out)
        ok &= _report(out, bad == 0, f"{args.trials} random pairs in dimension {dim}, {bad} mismatches")
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_gen(args, out) -> int:
    lo, hi = args.coord_range
    if args.count < 0 or args.dim < 1 or hi <= lo or not 0 <= args.inf_prob <= 1:
        raise UsageError("need count >= 0, dim >= 1, LO < HI and 0 <= inf-prob <= 1")
    bc = random_barcode(seeded(args.seed), args.count, args.dim, lo, hi, args.inf_prob)
    out.write(serialize_barcode(bc, args.format))
    return EXIT_OK


COMMANDS = {"dist": cmd_dist, "bottleneck": cmd_bottleneck, "verify": cmd_verify, "gen": cmd_gen}


def _glue_range(argv: Sequence[str]) -> list[str]:
    # argparse would read "-5..5" as an option
    out, it = [], iter(argv)
    for tok in it:
        if tok == "--range":
            nxt = next(it, None)
            out.append(tok if nxt is None else f"--range={nxt}")
        else:
            out.append(tok)
    return out


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    argv = _glue_range(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except DimensionMismatch as exc:
        print(f"rectdist: dimension mismatch: {exc}", file=err)
        return EXIT_DIM
    except (ParseError, InvalidRectangle, UsageError, OSError) as exc:
        print(f"rectdist: {exc}", file=err)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
