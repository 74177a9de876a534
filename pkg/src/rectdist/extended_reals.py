"""Exact arithmetic on the extended real line R u {-inf, +inf}.

Finite values are stored as :class:`fractions.Fraction`, so every quantity the
distance formulas produce (sums, differences, halves, min, max) is exact.

The infinity conventions are the ones used throughout the package::

    a + (+-inf) = (+-inf) + a = +-inf
    (+-inf) + (+-inf) = +-inf
    (+-inf) - (+-inf) = 0           # same sign
    |+-inf| = +inf

Adding infinities of opposite sign is undefined and raises
:class:`UndefinedArithmetic`.
"""

from __future__ import annotations

import re
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from functools import total_ordering
from numbers import Rational
from typing import Sequence, Union

__all__ = [
    "ExtReal",
    "NEG_INF",
    "POS_INF",
    "ZERO",
    "UndefinedArithmetic",
    "DimensionMismatch",
    "add",
    "sub",
    "ext_abs",
    "halve",
    "max_norm_dist",
    "ext",
    "parse_ext",
]


class UndefinedArithmetic(ArithmeticError):
    """Raised on ``+inf + -inf`` and ``-inf + +inf``."""


class DimensionMismatch(ValueError):
    """Raised when two vectors, rectangles or barcodes disagree on dimension."""


ExtLike = Union["ExtReal", int, Fraction, str]


@total_ordering
class ExtReal:
    """An immutable extended real: an exact rational, ``-inf`` or ``+inf``.

    Construct from ints, Fractions, strings (``"3/4"``, ``"0.25"``, ``"inf"``)
    or use the module constants :data:`POS_INF` / :data:`NEG_INF`. Floats are
    refused to keep everything exact; pass ``str(x)`` if you really mean it.
    """

    __slots__ = ("_inf", "_value")

    def __init__(self, value: ExtLike = 0) -> None:
        if isinstance(value, ExtReal):
            self._inf, self._value = value._inf, value._value
            return
        if isinstance(value, str):
            parsed = parse_ext(value)
            self._inf, self._value = parsed._inf, parsed._value
            return
        if isinstance(value, bool) or not isinstance(value, Rational):
            raise TypeError(f"cannot build an exact ExtReal from {type(value).__name__}")
        self._inf = 0
        self._value = Fraction(value)

    @classmethod
    def _infinity(cls, sign: int) -> "ExtReal":
        obj = cls.__new__(cls)
        obj._inf = sign
        obj._value = Fraction(0)
        return obj

    # -- inspection -------------------------------------------------------

    @property
    def is_finite(self) -> bool:
        return self._inf == 0

    @property
    def is_pos_inf(self) -> bool:
        return self._inf == 1

    @property
    def is_neg_inf(self) -> bool:
        return self._inf == -1

    @property
    def fraction(self) -> Fraction:
        """The exact value; raises ``ValueError`` for infinities."""
        if self._inf:
            raise ValueError(f"{self} has no finite value")
        return self._value

    def _key(self) -> tuple[int, Fraction]:
        return (self._inf, self._value)

    # -- ordering / hashing ----------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExtReal):
            if isinstance(other, Rational) and not isinstance(other, bool):
                other = ExtReal(other)
            else:
                return NotImplemented
        return self._key() == other._key()

    def __lt__(self, other: ExtLike) -> bool:
        other = ext(other)
        return self._key() < other._key()

    def __hash__(self) -> int:
        if self._inf:
            return hash(("ExtReal", self._inf))
        return hash(self._value)

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other: ExtLike) -> "ExtReal":
        return add(self, ext(other))

    def __radd__(self, other: ExtLike) -> "ExtReal":
        return add(ext(other), self)

    def __sub__(self, other: ExtLike) -> "ExtReal":
        return sub(self, ext(other))

    def __rsub__(self, other: ExtLike) -> "ExtReal":
        return sub(ext(other), self)

    def __neg__(self) -> "ExtReal":
        if self._inf:
            return ExtReal._infinity(-self._inf)
        return ExtReal(-self._value)

    def __abs__(self) -> "ExtReal":
        return ext_abs(self)

    # -- rendering -------------------------------------------------------

    def __str__(self) -> str:
        if self._inf == 1:
            return "inf"
        if self._inf == -1:
            return "-inf"
        v = self._value
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"

    def __repr__(self) -> str:
        return f"ExtReal({str(self)!r})"


POS_INF = ExtReal._infinity(1)
NEG_INF = ExtReal._infinity(-1)
ZERO = ExtReal(0)


def ext(x: ExtLike) -> ExtReal:
    """Coerce ``x`` to an :class:`ExtReal` (no copy if it already is one)."""
    return x if isinstance(x, ExtReal) else ExtReal(x)


_TOKEN = re.compile(r"[+-]?(inf|infinity|\d+(\.\d*)?([eE][+-]?\d+)?|\.\d+([eE][+-]?\d+)?|\d+/\d+)")


def parse_ext(text: str) -> ExtReal:
    """Parse ``"3"``, ``"-0.25"``, ``"7/2"``, ``"inf"`` or ``"-inf"`` exactly."""
    s = text.strip()
    if not _TOKEN.fullmatch(s.lower()):
        raise ValueError(f"not an extended real: {text!r}")
    low = s.lower().lstrip("+")
    if low in ("inf", "infinity"):
        return POS_INF
    if low in ("-inf", "-infinity"):
        return NEG_INF
    if "/" in s:
        num, den = s.split("/")
        if int(den) == 0:
            raise ValueError(f"zero denominator in {text!r}")
        return ExtReal(Fraction(int(num), int(den)))
    try:
        return ExtReal(Fraction(Decimal(s)))
    except InvalidOperation as exc:  # pragma: no cover - regex already filters
        raise ValueError(f"not an extended real: {text!r}") from exc


def add(x: ExtReal, y: ExtReal) -> ExtReal:
    if x._inf and y._inf and x._inf != y._inf:
        raise UndefinedArithmetic(f"{x} + {y} is undefined")
    if x._inf:
        return x
    if y._inf:
        return y
    return ExtReal(x._value + y._value)


def sub(x: ExtReal, y: ExtReal) -> ExtReal:
    """``x - y``; infinities of the same sign cancel to 0."""
    if x._inf and y._inf:
        if x._inf == y._inf:
            return ZERO
        return x
    if x._inf:
        return x
    if y._inf:
        return ExtReal._infinity(-y._inf)
    return ExtReal(x._value - y._value)


def ext_abs(x: ExtReal) -> ExtReal:
    if x._inf:
        return POS_INF
    return ExtReal(abs(x._value))


def halve(x: ExtReal) -> ExtReal:
    if x._inf:
        return x
    return ExtReal(x._value / 2)


def max_norm_dist(u: Sequence[ExtReal], v: Sequence[ExtReal]) -> ExtReal:
    """Max-norm distance ``max_i |u_i - v_i|`` under the infinity conventions."""
    if len(u) != len(v):
        raise DimensionMismatch(f"vectors of length {len(u)} and {len(v)}")
    if not u:
        raise DimensionMismatch("max-norm of empty vectors")
    return max(ext_abs(sub(ext(a), ext(b))) for a, b in zip(u, v))
