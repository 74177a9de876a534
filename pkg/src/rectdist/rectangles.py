"""Rectangle persistence modules and their closed-form interleaving distance.

A rectangle module is represented by its underlying open rectangle
``(a_1, b_1) x ... x (a_n, b_n)`` with ``a_i`` in ``R u {-inf}`` and ``b_i`` in
``R u {+inf}``. Closed or half-open input is accepted but normalized to the
open product: the interleaving distance between interval modules does not see
the boundary, so brackets are kept only so that a barcode can be written back
the way it was read.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

import numpy as np

from .extended_reals import (
    POS_INF,
    DimensionMismatch,
    ExtReal,
    ext,
    halve,
    max_norm_dist,
    sub,
)

__all__ = [
    "Rectangle",
    "InvalidRectangle",
    "triviality_threshold",
    "zero_distance",
    "shift",
    "admits_nontrivial_morphism",
    "interleaving_distance",
    "pairwise_interleaving_distances",
]

class InvalidRectangle(ValueError):
    """Raised for empty or malformed rectangles (some ``a_i >= b_i``)."""


@dataclass(frozen=True)
class Rectangle:
    """An n-parameter open rectangle ``prod_i (lower[i], upper[i])``.

    ``brackets`` optionally records, per axis, the bracket pair the user wrote
    (e.g. ``("[", ")")``). It never takes part in equality or distances.
    """

    lower: tuple[ExtReal, ...]
    upper: tuple[ExtReal, ...]
    brackets: Optional[tuple[tuple[str, str], ...]] = field(default=None, compare=False)

    def __post_init__(self) -> None:
        lower = tuple(ext(x) for x in self.lower)
        upper = tuple(ext(x) for x in self.upper)
        if len(lower) != len(upper):
            raise DimensionMismatch(f"lower has {len(lower)} entries, upper has {len(upper)}")
        if not lower:
            raise InvalidRectangle("a rectangle needs at least one axis")
        for i, (a, b) in enumerate(zip(lower, upper)):
            if a.is_pos_inf:
                raise InvalidRectangle(f"axis {i}: lower endpoint cannot be +inf")
            if b.is_neg_inf:
                raise InvalidRectangle(f"axis {i}: upper endpoint cannot be -inf")
            if not a < b:
                raise InvalidRectangle(f"axis {i}: need lower < upper, got ({a}, {b})")
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)
        if self.brackets is not None:
            br = tuple(tuple(p) for p in self.brackets)
            if len(br) != len(lower) or any(
                len(p) != 2 or p[0] not in ("(", "[") or p[1] not in (")", "]") for p in br
            ):
                raise InvalidRectangle(f"bad bracket record {self.brackets!r}")
            object.__setattr__(self, "brackets", br)

    @classmethod
    def from_intervals(cls, intervals: Iterable[Sequence]) -> "Rectangle":
        """``Rectangle.from_intervals([(0, 2), ("1/2", "inf")])``."""
        pairs = [tuple(p) for p in intervals]
        return cls(tuple(p[0] for p in pairs), tuple(p[1] for p in pairs))

    @property
    def dim(self) -> int:
        return len(self.lower)

    @property
    def side_lengths(self) -> tuple[ExtReal, ...]:
        return tuple(sub(b, a) for a, b in zip(self.lower, self.upper))

    def opened(self) -> "Rectangle":
        """The same rectangle with its bracket record dropped."""
        return Rectangle(self.lower, self.upper)

    def contains(self, point: Sequence) -> bool:
        """Strict membership ``lower < point < upper`` in every coordinate."""
        if len(point) != self.dim:
            raise DimensionMismatch(f"point of length {len(point)} in a {self.dim}-rectangle")
        return all(a < ext(x) < b for a, b, x in zip(self.lower, self.upper, point))

    def __str__(self) -> str:
        return " x ".join(f"({a},{b})" for a, b in zip(self.lower, self.upper))


def _check_dims(r: Rectangle, q: Rectangle) -> None:
    if r.dim != q.dim:
        raise DimensionMismatch(f"rectangles of dimension {r.dim} and {q.dim}")


def triviality_threshold(r: Rectangle) -> ExtReal:
    """Smallest side length; the module is eps-trivial exactly for eps >= this."""
    return min(r.side_lengths)


def zero_distance(r: Rectangle) -> ExtReal:
    """Interleaving distance from the rectangle module to the zero module."""
    return halve(triviality_threshold(r))


def shift(r: Rectangle, eps) -> Rectangle:
    """Underlying rectangle of the eps-shifted module: ``r`` translated by ``-eps``."""
    e = ext(eps)
    if not e.is_finite or e.fraction < 0:
        raise ValueError(f"shift amount must be a finite non-negative rational, got {e}")
    return Rectangle(
        tuple(sub(a, e) for a in r.lower),
        tuple(sub(b, e) for b in r.upper),
        r.brackets,
    )


def admits_nontrivial_morphism(r: Rectangle, q: Rectangle, eps) -> bool:
    """Whether a non-zero morphism from ``r``'s module to ``q``'s eps-shift exists.

    With ``r = (a, b)`` and ``q = (c, d)`` this holds iff
    ``max(max_i(c_i - a_i), max_i(d_i - b_i)) <= eps < min_i(d_i - a_i)``.
    """
    _check_dims(r, q)
    e = ext(eps)
    low = max(
        max(sub(c, a) for c, a in zip(q.lower, r.lower)),
        max(sub(d, b) for d, b in zip(q.upper, r.upper)),
    )
    high = min(sub(d, a) for d, a in zip(q.upper, r.lower))
    return low <= e < high


def interleaving_distance(r: Rectangle, q: Rectangle) -> ExtReal:
    """Exact interleaving distance between two rectangle modules.

    ``min(max(zero_distance(r), zero_distance(q)),
    max(|c - a|_inf, |d - b|_inf))`` where ``r = (a, b)``, ``q = (c, d)``.
    The first term is realised by the zero interleaving, the second by the
    pair of canonical (identity-on-overlap) morphisms.
    """
    _check_dims(r, q)
    trivial = max(zero_distance(r), zero_distance(q))
    matched = max(max_norm_dist(q.lower, r.lower), max_norm_dist(q.upper, r.upper))
    return min(trivial, matched)



# Float64 holds every integer up to 2**53 exactly; stay well below it.
_EXACT_FLOAT_LIMIT = 2**50


def _scaled_endpoints(rects: Sequence[Rectangle], scale: int):
    lower = np.array([[_scaled_float(x, scale) for x in r.lower] for r in rects], dtype=float)
    upper = np.array([[_scaled_float(x, scale) for x in r.upper] for r in rects], dtype=float)
    return lower, upper


def _scaled_float(x: ExtReal, scale: int) -> float:
    if x.is_pos_inf:
        return np.inf
    if x.is_neg_inf:
        return -np.inf
    return float(x.fraction * scale)


def _gap(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    with np.errstate(invalid="ignore"):
        d = np.abs(x - y)
    d[np.isnan(d)] = 0.0  # same-sign infinities cancel
    return d


def pairwise_interleaving_distances(
    left: Sequence[Rectangle], right: Sequence[Rectangle]
) -> list[list[ExtReal]]:
    """``interleaving_distance(r, q)`` for every ``r`` in left and ``q`` in right.

    Endpoints are rescaled to integers (with an extra factor 2 so halves stay
    integral) and evaluated in float64, where such integers are exact. Inputs
    too large for that fall back to the scalar formula.
    """
    left, right = list(left), list(right)
    if not left or not right:
        return [[] for _ in left]
    dims = {r.dim for r in left} | {q.dim for q in right}
    if len(dims) != 1:
        raise DimensionMismatch(f"mixed dimensions {sorted(dims)}")
    finite = [x.fraction for r in (*left, *right) for x in (*r.lower, *r.upper) if x.is_finite]
    scale = 2 * math.lcm(*(x.denominator for x in finite)) if finite else 2
    if any(abs(x) * scale > _EXACT_FLOAT_LIMIT for x in finite):
        return [[interleaving_distance(r, q) for q in right] for r in left]

    a, b = _scaled_endpoints(left, scale)
    c, d = _scaled_endpoints(right, scale)
    trivial = np.maximum(
        np.min(b - a, axis=1)[:, None] / 2, np.min(d - c, axis=1)[None, :] / 2
    )
    matched = np.maximum(
        _gap(c[None, :, :], a[:, None, :]).max(axis=2),
        _gap(d[None, :, :], b[:, None, :]).max(axis=2),
    )
    dist = np.minimum(trivial, matched)
    cache: dict[float, ExtReal] = {}
    out = []
    for row in dist.tolist():
        vals = []
        for v in row:
            if v not in cache:
                cache[v] = POS_INF if v == np.inf else ExtReal(Fraction(int(v), scale))
            vals.append(cache[v])
        out.append(vals)
    return out
