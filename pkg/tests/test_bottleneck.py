import json
import random

import pytest

from rectdist import (
    POS_INF,
    Barcode,
    CostMatrix,
    DimensionMismatch,
    ExtReal,
    Matching,
    bottleneck_distance,
    build_cost_matrix,
    interleaving_distance,
    matching_cost,
    zero_distance,
)
from rectdist.bottleneck import bottleneck_from_costs, matching_from_json, matching_to_json
from rectdist.oracle import enumerate_bottleneck
from rectdist.sampling import random_barcode, random_rectangle

from conftest import barcode, rect

X = ExtReal


def test_cost_matrix_examples():
    cm = build_cost_matrix(barcode("(0,2) x (0,2)"), barcode("(1,3) x (1,3)"))
    assert cm.pair_cost == ((X(1),),)
    assert cm.left_zero == (X(1),) and cm.right_zero == (X(1),)
    empty = build_cost_matrix(Barcode(), Barcode())
    assert (empty.left_size, empty.right_size) == (0, 0)
    one = build_cost_matrix(barcode("(0,10) x (0,1)"), Barcode())
    assert one.left_zero == (X("1/2"),) and one.pair_cost == ((),)


def test_cost_matrix_transposes_when_sides_swap(rng):
    a, b = random_barcode(rng, 4, 2), random_barcode(rng, 3, 2)
    assert build_cost_matrix(b, a) == build_cost_matrix(a, b).transpose()


def test_cost_matrix_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        build_cost_matrix(barcode("(0,1)"), barcode("(0,1) x (0,1)"))


def test_matching_cost_examples():
    cm = build_cost_matrix(barcode("(0,2) x (0,2)"), barcode("(1,3) x (1,3)"))
    assert matching_cost(cm, Matching(((0, 0),))) == X(1)
    assert matching_cost(cm, Matching()) == X(1)
    assert matching_cost(build_cost_matrix(Barcode(), Barcode()), Matching()) == X(0)
    with pytest.raises(IndexError):
        matching_cost(cm, Matching(((0, 1),)))


def test_matching_must_be_injective():
    with pytest.raises(ValueError):
        Matching(((0, 1), (0, 2)))
    with pytest.raises(ValueError):
        Matching(((0, 1), (2, 1)))


def test_bottleneck_examples():
    value, sigma = bottleneck_distance(barcode("(0,2) x (0,2)"), barcode("(1,3) x (1,3)"))
    assert value == X(1) and sigma.pairs in {((0, 0),), ()}
    value, sigma = bottleneck_distance(barcode("(0,10) x (0,1)"), Barcode())
    assert value == X("1/2") and sigma.pairs == ()
    assert bottleneck_distance(Barcode(), Barcode()).value == X(0)


def test_identical_barcodes_have_distance_zero(rng):
    for _ in range(30):
        b = random_barcode(rng, rng.randint(1, 7), 2, dup_prob=0.3)
        value, sigma = bottleneck_distance(b, b)
        assert value == X(0)
        assert len(sigma) == len(b)
        assert all(b[i] == b[j] for i, j in sigma.pairs)


def test_single_bars_agree_with_interleaving(rng):
    for _ in range(200):
        dim = rng.randint(1, 3)
        r, q = random_rectangle(rng, dim), random_rectangle(rng, dim)
        value = bottleneck_distance(Barcode((r,)), Barcode((q,))).value
        assert value == min(interleaving_distance(r, q), max(zero_distance(r), zero_distance(q)))
        assert value == interleaving_distance(r, q)


def test_symmetry_witness_and_enumeration(rng):
    for _ in range(150):
        dim = rng.randint(1, 3)
        a = random_barcode(rng, rng.randint(0, 5), dim, dup_prob=0.2)
        b = random_barcode(rng, rng.randint(0, 5), dim, dup_prob=0.2)
        value, sigma = bottleneck_distance(a, b)
        assert bottleneck_distance(b, a).value == value
        assert matching_cost(build_cost_matrix(a, b), sigma) == value
        assert enumerate_bottleneck(a, b) == value


def test_adding_a_cheap_bar_never_increases_distance(rng):
    for _ in range(100):
        a, b = random_barcode(rng, rng.randint(0, 4), 2), random_barcode(rng, rng.randint(0, 4), 2)
        value = bottleneck_distance(a, b).value
        extra = random_rectangle(rng, 2, inf_prob=0.0)
        if zero_distance(extra) > value:
            continue
        assert bottleneck_distance(Barcode(a.bars + (extra,), 2), b).value <= value
        assert bottleneck_distance(a, Barcode(b.bars + (extra,), 2)).value <= value


def test_infinite_when_every_matching_is_infinite():
    a = barcode("(0,inf) x (0,inf)")
    value, _ = bottleneck_distance(a, barcode("(0,1) x (0,1)"))
    assert value == POS_INF


def test_hand_built_cost_matrix():
    # matching 0-1 and 1-0 costs 2, matching 0-0 leaves bar 1 on each side at 5
    cm = CostMatrix.from_values([[1, 2], [2, 9]], [5, 5], [5, 5])
    value, sigma = bottleneck_from_costs(cm)
    assert value == X(2)
    assert sigma.pairs == ((0, 1), (1, 0))


def test_matching_json_roundtrip():
    sigma = Matching(((2, 0), (0, 1)))
    doc = json.loads(matching_to_json(sigma, 3, 3))
    assert doc == {"pairs": [[0, 1], [2, 0]], "unmatched_left": [1], "unmatched_right": [2]}
    assert matching_from_json(matching_to_json(sigma, 3, 3)) == sigma


def test_empty_barcode_of_unknown_dimension_pairs_with_anything():
    b = barcode("(0,4) x (0,6) x (1,3)")
    assert bottleneck_distance(b, Barcode()).value == X(1)
    assert bottleneck_distance(Barcode(), b).value == X(1)


def test_moderate_size_runs():
    rng = random.Random(11)
    a, b = random_barcode(rng, 60, 2), random_barcode(rng, 45, 2)
    value, sigma = bottleneck_distance(a, b)
    assert matching_cost(build_cost_matrix(a, b), sigma) == value
