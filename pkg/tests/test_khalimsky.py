import random

import pytest

import oracles as O
from digiplane import khalimsky as kh
from digiplane.grid import Kind

DIAMOND_RING = frozenset({(0, 0), (1, -1), (2, -2), (3, -1), (4, 0), (3, 1), (2, 2), (1, 1)})
WINDOW9 = [(x, y) for x in range(-4, 5) for y in range(-4, 5)]


def test_line_neighbourhoods():
    assert kh.n_line(3) == {3}
    assert kh.n_line(2) == {1, 2, 3}
    assert kh.n_line(0) == {-1, 0, 1}
    assert kh.cl_line(3) == {2, 3, 4}
    assert kh.cl_line(2) == {2}
    assert kh.cl_line(0) == {0}


def test_closure_matches_topology_oracle():
    for n in range(-5, 6):
        assert kh.cl_line(n) == {m for m in range(n - 2, n + 3) if n in O.line_nbhd(m)}
    for p in WINDOW9:
        assert kh.cl_point(p) == O.closure(p)
        assert kh.n_min(p) == O.nbhd(p)


def test_duality():
    for m in range(-6, 7):
        for n in range(-6, 7):
            assert (n in kh.n_line(m)) == (m in kh.cl_line(n))


def test_product_examples():
    assert kh.n_min((1, 0)) == {(1, -1), (1, 0), (1, 1)}
    assert kh.cl_point((1, 0)) == {(0, 0), (1, 0), (2, 0)}
    assert kh.n_min((1, 1)) == {(1, 1)}


def test_purity():
    assert kh.is_pure((0, 0)) and kh.is_closed((0, 0))
    assert kh.is_pure((1, -1)) and kh.is_open((1, -1))
    assert kh.is_mixed((1, 0)) and not kh.is_open((1, 0)) and not kh.is_closed((1, 0))
    assert kh.purity((2, 5)) == "mixed"


def test_adjacency_examples():
    assert kh.adjacency((0, 0)) == {(x, y) for x in (-1, 0, 1) for y in (-1, 0, 1)} - {(0, 0)}
    assert kh.adjacency((1, 0)) == {(0, 0), (2, 0), (1, 1), (1, -1)}


def test_adjacency_equals_neighbourhood_union_closure():
    for p in WINDOW9:
        assert kh.adjacency(p) == (kh.n_min(p) | kh.cl_point(p)) - {p}
        around = kh.adjacency(p)
        if kh.is_mixed(p):
            assert len(around) == 4 and all(kh.is_pure(q) for q in around)
        else:
            assert len(around) == 8 and sum(kh.is_pure(q) for q in around) == 4
        assert all(kh.are_adjacent(p, q) == O.k_adjacent(p, q) for q in WINDOW9)


def test_shared_mixed():
    assert kh.shared_mixed((0, 0), (1, 1)) == {(0, 1), (1, 0)}
    assert kh.shared_mixed((0, 0), (2, 0)) == {(1, 0)}
    assert kh.shared_mixed((0, 0), (4, 0)) == frozenset()
    with pytest.raises(ValueError, match="pure points required"):
        kh.shared_mixed((0, 0), (1, 0))
    with pytest.raises(ValueError):
        kh.shared_mixed((0, 0), (0, 0))


def test_connectivity_examples():
    assert kh.is_connected({(0, 0), (1, 0)})
    assert not kh.is_connected({(0, 1), (1, 0)})
    assert kh.is_connected(set())


def test_connectivity_matches_topological_oracle(backend):
    rng = random.Random(3)
    for _ in range(150):
        s = {(rng.randrange(8), rng.randrange(8)) for _ in range(rng.randrange(1, 11))}
        assert kh.is_connected(s) == O.topologically_connected(s)
        parts = kh.k_components(s)
        assert sorted(parts.components, key=min) == sorted(O.flood_components(s, O.k_adjacent), key=min)


def test_classify_k_examples():
    c = kh.classify_k({(0, 0), (1, 0), (2, 0)})
    assert c.kind is Kind.ARC and c.endpoints == ((0, 0), (2, 0))
    assert kh.classify_k(kh.adjacency((1, 0))).kind is Kind.JORDAN_CURVE
    assert kh.classify_k(DIAMOND_RING).kind is Kind.JORDAN_CURVE
    assert kh.classify_k({(0, 0)}) == kh.classify_k({(0, 0)})
    assert kh.classify_k({(0, 0)}).endpoints == ((0, 0), (0, 0))
    # three mutually adjacent points: every degree is 2, but a Jordan curve needs four
    assert kh.classify_k({(0, 0), (1, 0), (1, 1)}).kind is Kind.NEITHER
    assert kh.classify_k({(0, 1), (1, 0)}).kind is Kind.NEITHER


def test_arc_classification_matches_homeomorphism_oracle():
    cells = [(x, y) for x in range(3) for y in range(3)]
    for s in O.all_subsets(cells, 7):
        if not s:
            continue
        expected = O.is_connected(s, O.k_adjacent) and O.homeomorphic_to_interval(s)
        assert (kh.classify_k(s).kind is Kind.ARC) == expected, sorted(s)


def test_complement_components_k(backend):
    parts = kh.complement_components_k(DIAMOND_RING)
    assert len(parts) == 2
    assert parts.inner == (frozenset({(2, 0), (1, 0), (3, 0), (2, 1), (2, -1)}),)
    inner, outer = O.complement_split(DIAMOND_RING, O.k_adjacent)
    assert parts.outer == outer and list(parts.inner) == inner
    four = kh.complement_components_k(kh.adjacency((1, 0)))
    assert four.inner == (frozenset({(1, 0)}),) and four.outer is not None
    with pytest.raises(ValueError):
        kh.complement_components_k(set())
