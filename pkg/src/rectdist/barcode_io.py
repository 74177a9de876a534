"""Barcodes (finite multisets of rectangles) and their TEXT / JSON formats.

TEXT format, one bar per line::

    # comments run to end of line; blank lines are ignored
    (0,2) x (0,2)
    (1,inf) x [3,4)
    (-1/2,0.75)

Each axis is ``bracket value , value bracket`` with brackets from ``( ) [ ]``;
axes are joined by ``x``. Values are integers, decimals (read exactly, so
``0.1`` is ``1/10``), fractions ``p/q`` or ``inf`` / ``-inf``.

JSON format::

    {"dim": 2, "bars": [{"lower": ["0", "1/2"], "upper": ["inf", "3"]}]}

The canonical serialization writes open brackets, lowest-terms rationals and
``\\n`` line endings, so ``serialize(parse(s))`` is stable.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import IO, Iterable, Optional, Union

from .extended_reals import DimensionMismatch, ExtReal, parse_ext
from .rectangles import InvalidRectangle, Rectangle

__all__ = [
    "Barcode",
    "ParseError",
    "TEXT",
    "JSON",
    "parse_rectangle",
    "parse_barcode",
    "serialize_barcode",
    "serialize_rectangle",
    "read_barcode",
    "write_barcode",
    "multiset_equal",
    "check_compatible",
    "barcode_from_intervals",
]

TEXT = "text"
JSON = "json"
_FORMATS = (TEXT, JSON)


class ParseError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line = line
        self.column = column
        self.message = message
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)


@dataclass(frozen=True)
class Barcode:
    """An ordered list of same-dimension rectangles with multiset semantics.

    ``dim`` may be ``None`` only for an empty barcode whose dimension was never
    declared; such a barcode is the zero module and pairs with any dimension.
    """

    bars: tuple[Rectangle, ...] = ()
    dim: Optional[int] = field(default=None)

    def __post_init__(self) -> None:
        bars = tuple(self.bars)
        dim = self.dim
        for k, bar in enumerate(bars):
            if not isinstance(bar, Rectangle):
                raise TypeError(f"bar {k} is a {type(bar).__name__}, expected Rectangle")
            if dim is None:
                dim = bar.dim
            elif bar.dim != dim:
                raise DimensionMismatch(f"bar {k} has dimension {bar.dim}, expected {dim}")
        if dim is not None and dim < 1:
            raise ValueError(f"dimension must be positive, got {dim}")
        object.__setattr__(self, "bars", bars)
        object.__setattr__(self, "dim", dim)

    def __len__(self) -> int:
        return len(self.bars)

    def __iter__(self):
        return iter(self.bars)

    def __getitem__(self, k: int) -> Rectangle:
        return self.bars[k]

    def sorted_bars(self) -> list[Rectangle]:
        return sorted(self.bars, key=lambda r: (r.lower, r.upper))


def multiset_equal(a: Barcode, b: Barcode) -> bool:
    """Equality of barcodes as multisets (brackets ignored)."""
    if a.dim is not None and b.dim is not None and a.dim != b.dim:
        return False
    return a.sorted_bars() == b.sorted_bars()


def check_compatible(a: Barcode, b: Barcode) -> None:
    if a.dim is not None and b.dim is not None and a.dim != b.dim:
        raise DimensionMismatch(f"barcodes of dimension {a.dim} and {b.dim}")


# -- TEXT -----------------------------------------------------------------

_VALUE = r"[^\s,()\[\]]+"
_INTERVAL = re.compile(
    rf"\s*(?P<open>[(\[])\s*(?P<lo>{_VALUE})\s*,\s*(?P<hi>{_VALUE})\s*(?P<close>[)\]])\s*"
)
_SEP = re.compile(r"x(?=\s*[(\[])")


def _value(token: str, line: Optional[int], column: int) -> ExtReal:
    try:
        return parse_ext(token)
    except ValueError:
        raise ParseError(f"bad number {token!r}", line, column) from None


def _parse_bar(text: str, line: Optional[int] = None) -> Rectangle:
    lower, upper, brackets = [], [], []
    pos = 0
    while True:
        m = _INTERVAL.match(text, pos)
        if m is None:
            col = len(text) - len(text[pos:].lstrip()) + 1
            raise ParseError("expected an interval like (a,b)", line, col)
        lower.append(_value(m["lo"], line, m.start("lo") + 1))
        upper.append(_value(m["hi"], line, m.start("hi") + 1))
        brackets.append((m["open"], m["close"]))
        pos = m.end()
        if pos == len(text):
            break
        sep = _SEP.match(text, pos)
        if sep is None:
            raise ParseError(f"expected ' x ' between intervals, got {text[pos]!r}", line, pos + 1)
        pos = sep.end()
    try:
        return Rectangle(tuple(lower), tuple(upper), tuple(brackets))
    except InvalidRectangle as exc:
        raise InvalidRectangle(f"line {line}: {exc}" if line is not None else str(exc)) from None


def parse_rectangle(text: str) -> Rectangle:
    """Parse a single rectangle literal such as ``"(0,2) x [1,inf)"``."""
    body = text.split("#", 1)[0].strip()
    if not body:
        raise ParseError("empty rectangle literal", 1, 1)
    return _parse_bar(body, 1)


def _parse_text(text: str, dim: Optional[int]) -> Barcode:
    bars = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].rstrip()
        if not body.strip():
            continue
        bar = _parse_bar(body, lineno)
        expected = dim if dim is not None else (bars[0].dim if bars else None)
        if expected is not None and bar.dim != expected:
            raise DimensionMismatch(
                f"line {lineno}: bar has dimension {bar.dim}, expected {expected}"
            )
        bars.append(bar)
    return Barcode(tuple(bars), dim)


# -- JSON -----------------------------------------------------------------


def _json_value(v, where: str) -> ExtReal:
    if isinstance(v, bool) or not isinstance(v, (str, int)):
        raise ParseError(f"{where}: expected an exact-rational string, got {v!r}")
    try:
        return parse_ext(str(v))
    except ValueError:
        raise ParseError(f"{where}: bad number {v!r}") from None


def _parse_json(text: str, dim: Optional[int]) -> Barcode:
    try:
        doc = json.loads(text) if text.strip() else {"bars": []}
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(doc, dict) or not isinstance(doc.get("bars", None), list):
        raise ParseError("expected an object with a 'bars' array")
    declared = doc.get("dim", None)
    if declared is not None and (isinstance(declared, bool) or not isinstance(declared, int)):
        raise ParseError(f"'dim' must be an integer, got {declared!r}")
    if dim is not None and declared is not None and dim != declared:
        raise DimensionMismatch(f"file declares dimension {declared}, expected {dim}")
    dim = declared if declared is not None else dim
    bars = []
    for k, item in enumerate(doc["bars"]):
        if not isinstance(item, dict) or not isinstance(item.get("lower"), list) \
                or not isinstance(item.get("upper"), list):
            raise ParseError(f"bars[{k}]: expected an object with 'lower' and 'upper' arrays")
        lower = tuple(_json_value(v, f"bars[{k}].lower") for v in item["lower"])
        upper = tuple(_json_value(v, f"bars[{k}].upper") for v in item["upper"])
        if len(lower) != len(upper):
            raise DimensionMismatch(f"bars[{k}]: {len(lower)} lower vs {len(upper)} upper entries")
        expected = dim if dim is not None else (bars[0].dim if bars else None)
        if expected is not None and len(lower) != expected:
            raise DimensionMismatch(f"bars[{k}] has dimension {len(lower)}, expected {expected}")
        brackets = item.get("brackets")
        try:
            bars.append(Rectangle(lower, upper, brackets))
        except InvalidRectangle as exc:
            raise InvalidRectangle(f"bars[{k}]: {exc}") from None
    return Barcode(tuple(bars), dim)


# -- public entry points ---------------------------------------------------


def _read(source: Union[str, IO[str]]) -> str:
    return source if isinstance(source, str) else source.read()


def parse_barcode(
    source: Union[str, IO[str]], fmt: str = TEXT, dim: Optional[int] = None
) -> Barcode:
    """Parse a barcode from a string or text stream.

    ``dim`` declares the expected dimension; it is also what an empty input
    gets. Raises :class:`ParseError`, :class:`DimensionMismatch` or
    :class:`InvalidRectangle`.
    """
    if fmt not in _FORMATS:
        raise ValueError(f"unknown format {fmt!r}")
    text = _read(source)
    return _parse_text(text, dim) if fmt == TEXT else _parse_json(text, dim)


def serialize_rectangle(r: Rectangle, keep_brackets: bool = False) -> str:
    brackets = r.brackets if keep_brackets and r.brackets else (("(", ")"),) * r.dim
    return " x ".join(
        f"{o}{a},{b}{c}" for (o, c), a, b in zip(brackets, r.lower, r.upper)
    )


def serialize_barcode(b: Barcode, fmt: str = TEXT, keep_brackets: bool = False) -> str:
    """Canonical TEXT or JSON rendering of ``b``.

    With ``keep_brackets`` the bracket record of each bar is written back
    instead of the canonical open brackets.
    """
    if fmt == TEXT:
        return "".join(serialize_rectangle(r, keep_brackets) + "\n" for r in b.bars)
    if fmt == JSON:
        bars = []
        for r in b.bars:
            item = {"lower": [str(x) for x in r.lower], "upper": [str(x) for x in r.upper]}
            if keep_brackets and r.brackets:
                item["brackets"] = [list(p) for p in r.brackets]
            bars.append(item)
        if not bars:
            return json.dumps({"dim": b.dim, "bars": []}) + "\n"
        rows = ",\n".join("    " + json.dumps(item) for item in bars)
        return f'{{"dim": {json.dumps(b.dim)}, "bars": [\n{rows}\n]}}\n'
    raise ValueError(f"unknown format {fmt!r}")


def read_barcode(path, fmt: str = TEXT, dim: Optional[int] = None) -> Barcode:
    with open(path, encoding="utf-8") as fh:
        return parse_barcode(fh, fmt, dim)


def write_barcode(path, b: Barcode, fmt: str = TEXT) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(serialize_barcode(b, fmt))


def barcode_from_intervals(rows: Iterable, dim: Optional[int] = None) -> Barcode:
    """Convenience constructor: ``barcode_from_intervals([[(0, 2), (0, 2)]])``."""
    return Barcode(tuple(Rectangle.from_intervals(row) for row in rows), dim)

