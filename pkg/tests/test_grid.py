import random

import pytest

import oracles as O
from digiplane.grid import (
    OFFSETS_8, RING_LABELS, Adjacency, Kind, are_adjacent, classify_path, complement_components, components,
    degree, is_k_connected, neighbors, ring_point, sets_adjacent,
)

RING = frozenset({(0, 0), (1, 0), (2, 0), (2, 1), (2, 2), (1, 2), (0, 2), (0, 1)})
DIAMOND8 = frozenset({(1, 0), (0, 1), (-1, 0), (0, -1)})
SQUARE = frozenset({(0, 0), (1, 0), (0, 1), (1, 1)})


def test_adjacency_kind_pairs_up():
    assert Adjacency.FOUR.complement is Adjacency.EIGHT
    assert Adjacency.EIGHT.complement is Adjacency.FOUR
    assert Adjacency.parse("4") is Adjacency.FOUR and Adjacency.parse(8) is Adjacency.EIGHT
    with pytest.raises(ValueError):
        Adjacency.parse(6)


def test_neighbors_examples():
    assert neighbors((0, 0), Adjacency.FOUR) == {(1, 0), (-1, 0), (0, 1), (0, -1)}
    assert neighbors((0, 0), Adjacency.EIGHT) == {(x, y) for x in (-1, 0, 1) for y in (-1, 0, 1)} - {(0, 0)}
    assert neighbors((5, -3), Adjacency.FOUR) == {(6, -3), (4, -3), (5, -2), (5, -4)}


def test_are_adjacent_examples():
    assert are_adjacent((0, 0), (1, 1), Adjacency.EIGHT)
    assert not are_adjacent((0, 0), (1, 1), Adjacency.FOUR)
    assert not are_adjacent((0, 0), (0, 0), Adjacency.EIGHT)


def test_ring_labels_start_upper_left_and_run_clockwise():
    assert RING_LABELS[1] == (-1, 1) and RING_LABELS[2] == (0, 1) and RING_LABELS[8] == (-1, 0)
    assert set(RING_LABELS.values()) == set(OFFSETS_8)
    assert ring_point((3, 3), 0) == ring_point((3, 3), 8) == (2, 3)
    assert ring_point((3, 3), 9) == (2, 4)


def test_components_examples():
    assert len(components({(0, 0), (1, 1)}, Adjacency.FOUR)) == 2
    assert len(components({(0, 0), (1, 1)}, Adjacency.EIGHT)) == 1
    parts = components({(3, 3), (0, 0), (0, 1)}, Adjacency.FOUR)
    assert parts.components == (frozenset({(0, 0), (0, 1)}), frozenset({(3, 3)}))
    assert parts.outer_index is None


@pytest.mark.parametrize("k,adj", [(Adjacency.FOUR, O.adj4), (Adjacency.EIGHT, O.adj8)])
def test_components_match_flood_fill(k, adj, backend):
    rng = random.Random(7)
    for _ in range(20):
        pts = {(rng.randrange(10), rng.randrange(10)) for _ in range(30)}
        got = sorted(components(pts, k).components, key=min)
        assert got == sorted(O.flood_components(pts, adj), key=min)


def test_is_k_connected_examples():
    assert is_k_connected({(0, 0)}, Adjacency.FOUR)
    assert is_k_connected(set(), Adjacency.FOUR)
    assert not is_k_connected({(0, 0), (2, 0)}, Adjacency.EIGHT)


def test_classify_path_examples():
    c = classify_path({(0, 0), (1, 1), (2, 1)}, Adjacency.EIGHT)
    assert c.kind is Kind.PATH and c.endpoints == ((0, 0), (2, 1))
    assert classify_path(DIAMOND8, Adjacency.EIGHT).kind is Kind.CLOSED_CURVE
    assert classify_path(RING, Adjacency.FOUR).kind is Kind.CLOSED_CURVE
    assert classify_path(RING, Adjacency.EIGHT).kind is Kind.NEITHER


def test_two_disjoint_cycles_are_neither():
    far = frozenset((x + 10, y) for x, y in RING)
    assert all(degree(p, RING | far, Adjacency.FOUR) == 2 for p in RING | far)
    assert classify_path(RING | far, Adjacency.FOUR).kind is Kind.NEITHER


def test_complement_of_ring():
    parts = complement_components(RING, Adjacency.EIGHT)
    assert len(parts) == 2
    assert parts.inner == (frozenset({(1, 1)}),)
    inner, outer = O.complement_split(RING, O.adj8)
    assert parts.outer == outer and list(parts.inner) == inner


def test_complement_of_8_diamond():
    # the interior point (0,0) is 4-isolated: two 4-components, one 8-component
    assert len(complement_components(DIAMOND8, Adjacency.FOUR)) == 2
    assert len(complement_components(DIAMOND8, Adjacency.EIGHT)) == 1
    # the sharp example for 4-curves: the unit square leaves one 8-component
    assert len(complement_components(SQUARE, Adjacency.EIGHT)) == 1


def test_complement_rejects_empty():
    with pytest.raises(ValueError, match="empty curve"):
        complement_components(set(), Adjacency.FOUR)


def test_sets_adjacent():
    assert sets_adjacent({(0, 0)}, {(1, 1)}, Adjacency.EIGHT)
    assert not sets_adjacent({(0, 0)}, {(1, 1)}, Adjacency.FOUR)
