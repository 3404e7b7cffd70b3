import pytest

from okbodies import (
    ClusterGenSpec,
    dual_graph,
    from_multiplicity_sequence,
    graph_shape,
    multiplicity_sequence,
    precedes,
    random_cluster,
    validate,
)
from okbodies.errors import (
    IndexOutOfRange,
    NonConsecutiveIds,
    SatelliteOfSelfOrLater,
    SatelliteTargetInvalid,
)

from conftest import ENRIC_SATS, EX1_SATS, EX2_SATS, EX3_SATS


def test_validate_smallest_satellite():
    c = validate([None, None, 1])
    assert c.is_satellite(3)
    assert c.proximities(3) == (2, 1)


def test_validate_rejects_bad_target():
    # p_3 is not proximate to p_1, so p_4 cannot be satellite of p_1
    with pytest.raises(SatelliteTargetInvalid):
        validate([None, None, None, 1])


def test_validate_rejects_self_or_later():
    with pytest.raises(SatelliteOfSelfOrLater):
        validate([None, None, 3])
    with pytest.raises(SatelliteOfSelfOrLater):
        validate([None, None, 5])


def test_validate_rejects_predecessor_target():
    with pytest.raises(SatelliteTargetInvalid):
        validate([None, None, 2])


def test_validate_rejects_bad_ids():
    with pytest.raises(NonConsecutiveIds):
        validate([])
    with pytest.raises(NonConsecutiveIds):
        validate([{"id": 1}, {"id": 3}])


def test_reconstructed_cluster_from_enric_multiplicities():
    c = from_multiplicity_sequence((24, 24, 9, 9, 6, 3, 3, 2, 1, 1))
    sats = {i for i in range(1, 11) if c.is_satellite(i)}
    assert sats == {4, 5, 6, 7, 9, 10}
    assert c.points == validate(ENRIC_SATS).points


def test_multiplicity_sequences_fixtures(enric, ex1, ex2, ex3):
    assert multiplicity_sequence(enric, 10) == (24, 24, 9, 9, 6, 3, 3, 2, 1, 1)
    assert multiplicity_sequence(ex1, 12) == (9, 9, 9, 3, 3, 3, 3, 3, 3, 2, 1, 1)
    assert multiplicity_sequence(ex2, 12) == (8, 4, 4, 4, 4, 4, 4, 4, 1, 1, 1, 1)
    assert multiplicity_sequence(ex3, 19) == (
        48, 48, 48, 48, 48, 48, 41, 7, 7, 7, 7, 7, 6, 1, 1, 1, 1, 1, 1,
    )


def test_multiplicity_free_chain_and_small_satellite():
    free3 = validate([None, None, None])
    assert multiplicity_sequence(free3, 3) == (1, 1, 1)
    sat3 = validate([None, None, 1])
    assert multiplicity_sequence(sat3, 3) == (2, 1, 1)
    with pytest.raises(IndexOutOfRange):
        multiplicity_sequence(free3, 4)


def test_dual_graph_free_chain_and_satellite():
    free3 = validate([None, None, None])
    assert dual_graph(free3, 3).edges == ((1, 2), (2, 3))
    sat3 = validate([None, None, 1])
    assert dual_graph(sat3, 3).edges == ((1, 3), (2, 3))


def test_dual_graph_fixtures(ex1, ex2, ex3):
    assert dual_graph(ex1, 12).edges == (
        (1, 2), (2, 3), (3, 6), (4, 5), (5, 6), (6, 7),
        (7, 8), (8, 9), (9, 11), (10, 12), (11, 12),
    )
    assert dual_graph(ex2, 12).edges == (
        (1, 3), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7),
        (7, 8), (8, 12), (9, 10), (10, 11), (11, 12),
    )
    # Example 3's graph is a single path ending ... 19 - 13 - 7
    g = dual_graph(ex3, 19)
    assert g.neighbors(7) == (13,)
    assert g.neighbors(13) == (7, 19)
    assert len(g.edges) == 18


def test_precedes_basics(ex1):
    free3 = validate([None, None, None])
    g = dual_graph(free3, 3)
    assert precedes(g, 2, 3)
    assert all(precedes(g, 1, b) for b in (1, 2, 3))
    sat3 = validate([None, None, 1])
    assert not precedes(dual_graph(sat3, 3), 2, 1)
    # Example 1: the root path to 12 avoids 10, but the path to 10 passes 12
    g1 = dual_graph(ex1, 12)
    assert not precedes(g1, 10, 12)
    assert precedes(g1, 12, 10)


def test_graph_shape_free_chain():
    free4 = validate([None] * 4)
    shape = graph_shape(dual_graph(free4, 4), free4)
    assert shape.puiseux_pair_count == 0
    assert shape.dead_ends == (4,)
    assert shape.star_vertices == ()
    assert shape.tail_length == 3
    assert shape.pair_ranges == ()


def test_graph_shape_single_point():
    p1 = validate([None])
    shape = graph_shape(dual_graph(p1, 1), p1)
    assert shape.puiseux_pair_count == 0
    assert shape.dead_ends == ()
    assert shape.tail_length == 0


def test_graph_shape_fixtures(enric, ex1, ex2, ex3):
    s = graph_shape(dual_graph(enric, 10), enric)
    assert s.puiseux_pair_count == 2
    assert s.dead_ends == (3, 8)
    assert s.star_vertices == (7,)
    assert s.tail_length == 0
    assert s.pair_ranges == ((1, 7), (7, 10))

    s1 = graph_shape(dual_graph(ex1, 12), ex1)
    assert (s1.puiseux_pair_count, s1.dead_ends, s1.star_vertices) == (2, (4, 10), (6,))

    s2 = graph_shape(dual_graph(ex2, 12), ex2)
    assert (s2.puiseux_pair_count, s2.dead_ends, s2.star_vertices) == (2, (2, 9), (3,))

    s3 = graph_shape(dual_graph(ex3, 19), ex3)
    assert (s3.puiseux_pair_count, s3.dead_ends, s3.star_vertices) == (1, (7,), ())


def test_graph_shape_pair_membership(enric):
    s = graph_shape(dual_graph(enric, 10), enric)
    membership = s.pair_membership
    assert membership[7] == {1, 2}  # the star vertex belongs to both pairs
    assert membership[3] == {1}
    assert membership[10] == {2}


def test_graph_shape_tail_case(ex1):
    # nu_10 inside Example 1 is free-defined with a 4-vertex tail
    sub = ex1.prefix(10)
    s = graph_shape(dual_graph(sub, 10), sub)
    assert s.puiseux_pair_count == 1
    assert s.dead_ends == (4, 10)
    assert s.star_vertices == (6,)
    assert s.tail_length == 4


def _random_clusters(count, max_points=12, start_seed=0):
    return [
        random_cluster(ClusterGenSpec(max_points=max_points, seed=s))
        for s in range(start_seed, start_seed + count)
    ]


def test_roundtrip_multiplicities_to_cluster():
    for c in _random_clusters(120):
        m = multiplicity_sequence(c, c.size)
        assert from_multiplicity_sequence(m).points == c.points


def test_sum_of_squares_equals_last_betabar():
    from okbodies import maximal_contact_values

    for c in _random_clusters(60):
        m = multiplicity_sequence(c, c.size)
        assert sum(v * v for v in m) == maximal_contact_values(c, c.size).betabar[-1]


def test_dual_graph_is_tree_and_satellites_have_two_proximities():
    for c in _random_clusters(80):
        g = dual_graph(c, c.size)
        assert len(g.edges) == c.size - 1
        for v in range(1, c.size + 1):
            g.root_path(v)  # raises if disconnected
        for i in range(2, c.size + 1):
            expected = 2 if c.is_satellite(i) else 1
            assert len(c.proximities(i)) == expected


def test_precedes_is_a_partial_order():
    for c in _random_clusters(25, max_points=10, start_seed=300):
        g = dual_graph(c, c.size)
        vs = range(1, c.size + 1)
        assert all(precedes(g, a, a) for a in vs)
        for a in vs:
            for b in vs:
                if a != b and precedes(g, a, b) and precedes(g, b, a):
                    raise AssertionError("antisymmetry violated")
                for d in vs:
                    if precedes(g, a, b) and precedes(g, b, d):
                        assert precedes(g, a, d)
