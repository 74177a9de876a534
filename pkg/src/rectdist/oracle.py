"""Brute-force cross-checks that never use the closed-form distance.

``grid_interleaving_check`` decides whether two rectangle modules are
eps-interleaved straight from the definition: it tries the zero morphism and
the canonical morphism (identity wherever source and target are both
non-zero) in each direction, keeps only genuine morphisms, and then tests the
two triangle identities. All of this happens on a finite grid.

The grid holds, per axis, every finite endpoint translated by 0, +-eps and
+-2eps, a sentinel beyond each end and a midpoint in every gap. Every
membership test the diagrams need (``u``, ``u + eps`` or ``u + 2eps`` in a
rectangle) is constant on the cells cut out by those values, and snapping each
coordinate to its cell representative is monotone, so checking squares along
grid edges is the same as checking them for all ``u <= v`` in R^n.

Coordinates are scaled to integers before the numpy work, which keeps the
check exact.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Callable, Optional, Sequence

import numpy as np

from .barcode_io import Barcode, check_compatible
from .extended_reals import POS_INF, ZERO, DimensionMismatch, ExtReal, ext
from .rectangles import Rectangle, interleaving_distance, zero_distance

__all__ = [
    "TooLarge",
    "GridModule",
    "critical_grid",
    "grid_interleaving_check",
    "grid_nonzero_morphism",
    "oracle_interleaving_distance",
    "oracle_candidates",
    "enumerate_bottleneck",
]

MAX_ENUMERATION_BARS = 8


class TooLarge(ValueError):
    """Raised when exhaustive enumeration would blow up."""


def _finite_coords(rects: Sequence[Optional[Rectangle]], axis: Optional[int] = None) -> list[Fraction]:
    out = []
    for r in rects:
        if r is None:
            continue
        axes = range(r.dim) if axis is None else (axis,)
        for i in axes:
            for x in (r.lower[i], r.upper[i]):
                if x.is_finite:
                    out.append(x.fraction)
    return out


def _eps(eps) -> Fraction:
    e = ext(eps)
    if not e.is_finite or e.fraction < 0:
        raise ValueError(f"eps must be a finite non-negative rational, got {e}")
    return e.fraction


def _dim(r: Rectangle, q: Optional[Rectangle]) -> int:
    if q is not None and q.dim != r.dim:
        raise DimensionMismatch(f"rectangles of dimension {r.dim} and {q.dim}")
    return r.dim


def critical_grid(
    r: Rectangle,
    q: Optional[Rectangle],
    eps,
    extra: Optional[Sequence[Sequence]] = None,
) -> list[list[Fraction]]:
    """Sorted per-axis coordinate lists of the test grid.

    ``q=None`` stands for the zero module. ``extra`` optionally adds more
    values per axis (used to check that refining the grid changes nothing).
    """
    n = _dim(r, q)
    e = _eps(eps)
    axes = []
    for i in range(n):
        base = _finite_coords([r, q], i)
        vals = {x + t * e for x in base for t in (-2, -1, 0, 1, 2)}
        if extra is not None:
            vals.update(Fraction(ext(v).fraction) for v in extra[i])
        if not vals:
            vals = {Fraction(0)}
        ordered = sorted(vals)
        ordered = [ordered[0] - 1, *ordered, ordered[-1] + 1]
        mids = [(x + y) / 2 for x, y in zip(ordered, ordered[1:])]
        axes.append(sorted(ordered + mids))
    return axes


class GridModule:
    """A rectangle module restricted to a finite product grid.

    ``dims`` is the 0/1 dimension array over the grid (1 strictly inside the
    rectangle); ``shifted(t)`` gives the same array for the module evaluated
    at ``u + t`` instead of ``u``. Transition maps on the grid are the
    identity between two points of the support and zero otherwise.
    """

    def __init__(
        self,
        rect: Optional[Rectangle],
        grid: Sequence[Sequence[Fraction]],
        shifts: Sequence[Fraction] = (),
    ):
        self.rect = rect
        self.grid = [list(g) for g in grid]
        self._scale = _common_scale(self.grid, rect, shifts)
        self.dims = self.shifted(Fraction(0))

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(g) for g in self.grid)

    def shifted(self, t: Fraction) -> np.ndarray:
        """Boolean support of the module at ``u + (t, ..., t)`` for grid points ``u``."""
        if self.rect is None:
            return np.zeros(self.shape, dtype=bool)
        s = self._scale
        if (t * s).denominator != 1:
            raise ValueError(f"shift {t} was not declared when the grid module was built")
        out = np.ones(self.shape, dtype=bool)
        for i, g in enumerate(self.grid):
            x = _scaled(g, s) + int(t * s)
            inside = np.ones(len(g), dtype=bool)
            a, b = self.rect.lower[i], self.rect.upper[i]
            if a.is_finite:
                inside &= x > int(a.fraction * s)
            if b.is_finite:
                inside &= x < int(b.fraction * s)
            index = [np.newaxis] * len(self.grid)
            index[i] = slice(None)
            out = out & inside[tuple(index)]
        return out


def _common_scale(
    grid: Sequence[Sequence[Fraction]], rect: Optional[Rectangle], shifts: Sequence[Fraction]
) -> int:
    dens = [x.denominator for g in grid for x in g]
    dens += [Fraction(t).denominator for t in shifts]
    if rect is not None:
        dens += [x.denominator for x in _finite_coords([rect])]
    return math.lcm(*dens) if dens else 1


def _scaled(g: Sequence[Fraction], s: int) -> np.ndarray:
    vals = [int(x * s) for x in g]
    if max(map(abs, vals), default=0) > 2**60:
        return np.array(vals, dtype=object)
    return np.array(vals, dtype=np.int64)


def _edges(a: np.ndarray, axis: int) -> tuple[np.ndarray, np.ndarray]:
    """Values at the tail and head of every grid edge along ``axis``."""
    lo = [slice(None)] * a.ndim
    hi = [slice(None)] * a.ndim
    lo[axis] = slice(None, -1)
    hi[axis] = slice(1, None)
    return a[tuple(lo)], a[tuple(hi)]


def _is_morphism(src0: np.ndarray, dst1: np.ndarray, exhaustive: bool) -> bool:
    """Whether the canonical map src -> dst(eps) commutes with transition maps.

    ``src0[u]`` is the support of the source at ``u`` and ``dst1[u]`` the
    support of the target at ``u + eps``. For ``u <= v`` with the source
    non-zero at ``u`` and the target non-zero at ``v + eps``, going right
    then down gives ``[src at v]`` and going down then right gives
    ``[target at u + eps]``; the square commutes iff they agree.
    """
    if exhaustive:
        pts = src0.reshape(-1)
        tgt = dst1.reshape(-1)
        coords = np.stack(
            [c.reshape(-1) for c in np.meshgrid(*[np.arange(k) for k in src0.shape], indexing="ij")],
            axis=1,
        )
        below = np.all(coords[:, None, :] <= coords[None, :, :], axis=2)
        relevant = below & pts[:, None] & tgt[None, :]
        ok = pts[None, :] == tgt[:, None]
        return bool(np.all(ok[relevant]))
    for axis in range(src0.ndim):
        su, sv = _edges(src0, axis)
        tu, tv = _edges(dst1, axis)
        relevant = su & tv
        if np.any(relevant & (sv != tu)):
            return False
    return True


def grid_interleaving_check(
    r: Rectangle,
    q: Optional[Rectangle],
    eps,
    extra: Optional[Sequence[Sequence]] = None,
    exhaustive: bool = False,
) -> bool:
    """Decide from the definition whether ``r`` and ``q`` are eps-interleaved.

    ``q=None`` is the zero module. With ``exhaustive=True`` squares are
    checked for every comparable pair of grid points instead of grid edges
    (quadratic in the grid size; meant for small cross-checks).
    """
    e = _eps(eps)
    grid = critical_grid(r, q, e, extra)
    M = GridModule(r, grid, (e, 2 * e))
    N = GridModule(q, grid, (e, 2 * e))
    m0, m1, m2 = M.dims, M.shifted(e), M.shifted(2 * e)
    n0, n1, n2 = N.dims, N.shifted(e), N.shifted(2 * e)

    f_ok = _is_morphism(m0, n1, exhaustive)
    g_ok = _is_morphism(n0, m1, exhaustive)
    for use_f, use_g in itertools.product((False, True), repeat=2):
        if (use_f and not f_ok) or (use_g and not g_ok):
            continue
        # g(u + eps) f(u) must equal the transition M_u -> M_{u+2eps}; the
        # left side is the identity iff both maps are canonical and N lives at u + eps.
        via_n = n1 if (use_f and use_g) else np.zeros_like(n1)
        if np.any(m0 & m2 & ~via_n):
            continue
        via_m = m1 if (use_f and use_g) else np.zeros_like(m1)
        if np.any(n0 & n2 & ~via_m):
            continue
        return True
    return False


def grid_nonzero_morphism(r: Rectangle, q: Rectangle, eps, exhaustive: bool = False) -> bool:
    """Whether the canonical map from ``r``'s module to ``q``'s eps-shift is a
    non-zero morphism, decided on the grid."""
    e = _eps(eps)
    grid = critical_grid(r, q, e)
    src = GridModule(r, grid, (e,)).dims
    dst = GridModule(q, grid, (e,)).shifted(e)
    return bool(np.any(src & dst)) and _is_morphism(src, dst, exhaustive)


def oracle_candidates(r: Rectangle, q: Optional[Rectangle]) -> list[Fraction]:
    """Sorted candidate values: 0, all pairwise coordinate gaps and their halves."""
    coords = sorted(set(_finite_coords([r, q])))
    cands = {Fraction(0)}
    for x, y in itertools.combinations(coords, 2):
        gap = abs(x - y)
        cands.add(gap)
        cands.add(gap / 2)
    return sorted(cands)


def oracle_interleaving_distance(
    r: Rectangle,
    q: Optional[Rectangle],
    check_monotone: bool = False,
    exhaustive: bool = False,
) -> ExtReal:
    """Least candidate eps at which the grid check succeeds, else ``+inf``.

    With ``check_monotone`` every candidate is decided and an
    ``AssertionError`` is raised if success is ever followed by failure.
    """
    _dim(r, q)
    found: Optional[Fraction] = None
    for c in oracle_candidates(r, q):
        ok = grid_interleaving_check(r, q, c, exhaustive=exhaustive)
        if found is not None:
            assert ok, f"interleaving at {found} but not at {c}"
        elif ok:
            found = c
            if not check_monotone:
                break
    return POS_INF if found is None else ExtReal(found)


def enumerate_bottleneck(
    left: Barcode,
    right: Barcode,
    pair_distance: Callable[[Rectangle, Rectangle], ExtReal] = interleaving_distance,
    limit: int = MAX_ENUMERATION_BARS,
) -> ExtReal:
    """Minimum matching cost over every partial bijection, by exhaustive search.

    Each left bar is in turn left unmatched or sent to any still-free right
    bar; free right bars at the leaves pay their distance to zero.
    """
    check_compatible(left, right)
    m, k = len(left), len(right)
    if m > limit or k > limit:
        raise TooLarge(f"{m} x {k} bars exceeds the enumeration limit of {limit}")
    pair = [[pair_distance(r, q) for q in right] for r in left]
    lz = [zero_distance(r) for r in left]
    rz = [zero_distance(q) for q in right]
    best = [POS_INF, False]

    def visit(i: int, free: tuple[bool, ...], cost: ExtReal) -> None:
        if i == m:
            total = max([cost, *(rz[j] for j in range(k) if free[j])])
            if not best[1] or total < best[0]:
                best[0], best[1] = total, True
            return
        visit(i + 1, free, max(cost, lz[i]))
        for j in range(k):
            if free[j]:
                nxt = free[:j] + (False,) + free[j + 1:]
                visit(i + 1, nxt, max(cost, pair[i][j]))

    visit(0, (True,) * k, ZERO)
    return best[0]
