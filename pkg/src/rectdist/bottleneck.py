"""Exact bottleneck distance between rectangle-decomposable modules.

The bottleneck distance is the minimum, over partial matchings of the two
barcodes, of the largest of

* the interleaving distance of each matched pair of bars, and
* the distance to the zero module of each unmatched bar.

That min-max is attained at one of the finitely many precomputed costs, so we
sort the distinct costs and binary-search the smallest one at which a matching
of cost ``<= eps`` exists. Feasibility is the classical reduction to a perfect
matching: every bar gets a "diagonal" twin on the other side that it may be
matched to when it is cheap enough to leave unmatched, and twins always match
each other.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

from .barcode_io import Barcode, check_compatible
from .extended_reals import ZERO, ExtReal, ext
from .rectangles import pairwise_interleaving_distances, zero_distance

__all__ = [
    "Matching",
    "CostMatrix",
    "BottleneckResult",
    "build_cost_matrix",
    "matching_cost",
    "bottleneck_distance",
    "bottleneck_from_costs",
    "matching_to_json",
    "matching_from_json",
]


@dataclass(frozen=True)
class Matching:
    """A partial bijection between bar indices, as sorted ``(left, right)`` pairs."""

    pairs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        pairs = tuple(sorted((int(i), int(j)) for i, j in self.pairs))
        lefts = [i for i, _ in pairs]
        rights = [j for _, j in pairs]
        if len(set(lefts)) != len(lefts) or len(set(rights)) != len(rights):
            raise ValueError(f"not a partial bijection: {pairs}")
        if any(i < 0 or j < 0 for i, j in pairs):
            raise IndexError(f"negative index in {pairs}")
        object.__setattr__(self, "pairs", pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    def unmatched_left(self, m: int) -> list[int]:
        used = {i for i, _ in self.pairs}
        return [i for i in range(m) if i not in used]

    def unmatched_right(self, k: int) -> list[int]:
        used = {j for _, j in self.pairs}
        return [j for j in range(k) if j not in used]


@dataclass(frozen=True)
class CostMatrix:
    pair_cost: tuple[tuple[ExtReal, ...], ...]
    left_zero: tuple[ExtReal, ...]
    right_zero: tuple[ExtReal, ...]

    @classmethod
    def from_values(cls, pair: Sequence[Sequence], left_zero: Sequence, right_zero: Sequence) -> "CostMatrix":
        """Build from plain numbers or strings, e.g. for hand-written instances."""
        return cls(
            tuple(tuple(ext(v) for v in row) for row in pair),
            tuple(ext(v) for v in left_zero),
            tuple(ext(v) for v in right_zero),
        )

    @property
    def left_size(self) -> int:
        return len(self.left_zero)

    @property
    def right_size(self) -> int:
        return len(self.right_zero)

    def transpose(self) -> "CostMatrix":
        cols = tuple(zip(*self.pair_cost)) if self.pair_cost else ()
        if not cols:
            cols = tuple(() for _ in range(self.right_size))
        return CostMatrix(tuple(tuple(c) for c in cols), self.right_zero, self.left_zero)

    def values(self) -> set[ExtReal]:
        out = set(self.left_zero) | set(self.right_zero)
        for row in self.pair_cost:
            out.update(row)
        return out


class BottleneckResult(NamedTuple):
    value: ExtReal
    matching: Matching


def build_cost_matrix(left: Barcode, right: Barcode) -> CostMatrix:
    """Every quantity the bottleneck min-max ranges over, computed exactly."""
    check_compatible(left, right)
    return CostMatrix(
        tuple(tuple(row) for row in pairwise_interleaving_distances(left.bars, right.bars)),
        tuple(zero_distance(r) for r in left),
        tuple(zero_distance(q) for q in right),
    )


def matching_cost(cm: CostMatrix, sigma: Matching) -> ExtReal:
    """Cost of a partial matching; the max over an empty set is 0."""
    m, k = cm.left_size, cm.right_size
    for i, j in sigma.pairs:
        if not (0 <= i < m and 0 <= j < k):
            raise IndexError(f"pair ({i}, {j}) out of range for a {m}x{k} cost matrix")
    costs = [cm.pair_cost[i][j] for i, j in sigma.pairs]
    costs += [cm.left_zero[i] for i in sigma.unmatched_left(m)]
    costs += [cm.right_zero[j] for j in sigma.unmatched_right(k)]
    return max(costs, default=ZERO)


def _ranks(cm: CostMatrix) -> tuple[list[ExtReal], np.ndarray, np.ndarray, np.ndarray]:
    levels = sorted(cm.values() | {ZERO})
    index = {v: r for r, v in enumerate(levels)}
    m, k = cm.left_size, cm.right_size
    pair = np.array([[index[v] for v in row] for row in cm.pair_cost], dtype=np.int64)
    pair = pair.reshape(m, k)
    lz = np.array([index[v] for v in cm.left_zero], dtype=np.int64)
    rz = np.array([index[v] for v in cm.right_zero], dtype=np.int64)
    return levels, pair, lz, rz


def _perfect_matching(pair: np.ndarray, lz: np.ndarray, rz: np.ndarray, level: int):
    """Perfect matching of the augmented graph at threshold ``level``, or None.

    Rows: ``m`` left bars then ``k`` twins of right bars.
    Columns: ``k`` right bars then ``m`` twins of left bars.
    """
    m, k = pair.shape
    n = m + k
    bi, bj = np.nonzero(pair <= level)
    li = np.flatnonzero(lz <= level)
    rj = np.flatnonzero(rz <= level)
    ti, tj = np.meshgrid(np.arange(k), np.arange(m), indexing="ij")
    rows = np.concatenate([bi, li, m + rj, m + ti.ravel()])
    cols = np.concatenate([bj, k + li, rj, k + tj.ravel()])
    graph = csr_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(n, n))
    match = maximum_bipartite_matching(graph, perm_type="column")
    if np.any(match < 0):
        return None
    return match


def bottleneck_distance(left: Barcode, right: Barcode) -> BottleneckResult:
    """Exact bottleneck distance and an optimal matching attaining it."""
    cm = build_cost_matrix(left, right)
    return bottleneck_from_costs(cm)


def bottleneck_from_costs(cm: CostMatrix) -> BottleneckResult:
    m, k = cm.left_size, cm.right_size
    if m == 0 and k == 0:
        return BottleneckResult(ZERO, Matching())
    levels, pair, lz, rz = _ranks(cm)

    # Invariant: infeasible at lo - 1 (or lo == 0), feasible at hi.
    lo, hi = 0, len(levels) - 1
    best = _perfect_matching(pair, lz, rz, hi)
    if best is None:  # pragma: no cover - leaving everything unmatched is always feasible
        raise AssertionError("no matching at the largest cost level")
    infeasible, feasible = [], [hi]
    while lo < hi:
        mid = (lo + hi) // 2
        match = _perfect_matching(pair, lz, rz, mid)
        if match is None:
            infeasible.append(mid)
            lo = mid + 1
        else:
            feasible.append(mid)
            best, hi = match, mid
    assert not infeasible or max(infeasible) < min(feasible), "feasibility is not monotone"

    pairs = [(i, int(best[i])) for i in range(m) if best[i] < k]
    sigma = Matching(tuple(pairs))
    value = levels[hi]
    assert matching_cost(cm, sigma) == value
    return BottleneckResult(value, sigma)


def matching_to_json(sigma: Matching, m: int, k: int) -> str:
    doc = {
        "pairs": [list(p) for p in sigma.pairs],
        "unmatched_left": sigma.unmatched_left(m),
        "unmatched_right": sigma.unmatched_right(k),
    }
    return json.dumps(doc) + "\n"


def matching_from_json(text: str) -> Matching:
    doc = json.loads(text)
    return Matching(tuple(tuple(p) for p in doc["pairs"]))

