import pytest

from temporal_graph_tools import (
    FOREVER,
    ConfigurationError,
    FrozenGraphError,
    InvalidPartitionError,
    InvalidPresenceError,
    InvalidWindowError,
    PresenceIntervalSet,
    Relation,
    StaticGraph,
    TimeVaryingGraph,
    UnknownEntityError,
    UnknownRelationError,
)
from tests.conftest import FOOTPRINT_ORACLE_SEEDS, random_tvg_spec


def build_tvg(nodes, lifetime, directed, relations):
    tvg = TimeVaryingGraph((0, lifetime), directed=directed)
    for n in range(nodes):
        tvg.add_entity(n)
    for a, b, label, intervals in relations:
        for start, end in intervals:
            tvg.add_presence(a, b, start, FOREVER if end is None else end, label)
    return tvg.freeze()


def pair(directed, a, b):
    return (a, b) if directed else frozenset((a, b))


def oracle_edges(relations, directed, lifetime, t1, t2):
    """Relations present at some discrete instant of [t1, t2), tested one instant at a time."""
    found = set()
    for a, b, _, intervals in relations:
        for t in range(t1, min(t2, lifetime)):
            if any(start <= t < (lifetime if end is None else end) for start, end in intervals):
                found.add(pair(directed, a, b))
                break
    return found


def footprint_edges(g: StaticGraph):
    return {pair(g.directed, u, v) for u, v in g.graph.edges}


@pytest.mark.parametrize('intervals, t, expected', [
    ([(5, FOREVER)], 5, True),
    ([(5, FOREVER)], 4, False),
    ([(2, 4), (7, 9)], 4, False),
    ([(2, 4), (7, 9)], 3, True),
    ([(2, 4), (7, 9)], 9, False),
])
def test_presence(intervals, t, expected):
    tvg = TimeVaryingGraph((0, 11))
    tvg.add_entity('a')
    tvg.add_entity('b')
    for start, end in intervals:
        rel = tvg.add_presence('a', 'b', start, end)
    assert tvg.presence(rel, t) is expected


def test_presence_matches_brute_force_scan():
    p = PresenceIntervalSet([(2, 4), (7, 9)])
    assert [t for t in range(11) if p.contains(t)] == [2, 3, 7, 8]


def test_presence_intervals_are_merged():
    p = PresenceIntervalSet([(7, 9), (2, 4), (4, 6), (8, FOREVER)])
    assert p.intervals == ((2, 6), (7, FOREVER))


@pytest.mark.parametrize('intervals', [[], [(3, 3)], [(5, 2)]])
def test_presence_interval_set_rejects_empty(intervals):
    with pytest.raises(InvalidPresenceError):
        PresenceIntervalSet(intervals)


def test_unknown_relation():
    tvg = TimeVaryingGraph((0, 10))
    tvg.add_entity('a')
    tvg.add_entity('b')
    with pytest.raises(UnknownRelationError):
        tvg.presence(Relation('a', 'b'), 3)
    with pytest.raises(KeyError):
        tvg.presence(Relation('a', 'b'), 3)


def test_build_errors():
    tvg = TimeVaryingGraph((0, 10))
    tvg.add_entity('a')
    with pytest.raises(UnknownEntityError):
        tvg.add_presence('a', 'b', 0)
    tvg.add_entity('b')
    with pytest.raises(InvalidPresenceError):
        tvg.add_presence('a', 'b', 5, 12)
    with pytest.raises(InvalidPresenceError):
        tvg.add_presence('a', 'b', 10)
    tvg.freeze()
    with pytest.raises(FrozenGraphError):
        tvg.add_entity('c')


def test_undirected_relations_are_canonical():
    tvg = TimeVaryingGraph((0, 10))
    tvg.add_entity('a')
    tvg.add_entity('b')
    first = tvg.add_presence('b', 'a', 1, 2)
    second = tvg.add_presence('a', 'b', 5, 6)
    assert first == second
    assert len(tvg.relations) == 1
    assert tvg.presence_intervals(first).intervals == ((1, 2), (5, 6))


@pytest.mark.parametrize('window, included', [
    ((0, 10), True),
    ((0, 5), False),
    ((5, 6), True),
    ((9, 10), True),
])
def test_footprint_half_open_windows(window, included):
    tvg = TimeVaryingGraph((0, 10))
    tvg.add_entity('a')
    tvg.add_entity('b')
    tvg.add_presence('a', 'b', 5)
    assert (tvg.footprint(*window).number_of_edges == 1) is included


@pytest.mark.parametrize('t1, t2', [(3, 3), (5, 2)])
def test_footprint_invalid_window(t1, t2):
    tvg = TimeVaryingGraph((0, 10))
    with pytest.raises(InvalidWindowError):
        tvg.footprint(t1, t2)


def test_footprint_node_scope():
    tvg = TimeVaryingGraph((0, 10))
    for n in 'abcd':
        tvg.add_entity(n)
    tvg.add_presence('a', 'b', 1, 3)
    tvg.add_presence('c', 'd', 6)
    assert sorted(tvg.footprint(0, 5).nodes) == ['a', 'b', 'c', 'd']
    assert sorted(tvg.footprint(0, 5, node_scope='active').nodes) == ['a', 'b']
    with pytest.raises(ConfigurationError):
        tvg.footprint(0, 5, node_scope='some')


@pytest.mark.parametrize('seed', FOOTPRINT_ORACLE_SEEDS)
def test_footprint_oracle(seed):
    nodes, lifetime, directed, relations = random_tvg_spec(seed)
    tvg = build_tvg(nodes, lifetime, directed, relations)
    for t1 in range(0, lifetime, max(1, lifetime // 10)):
        for t2 in range(t1 + 1, lifetime + 1, max(1, lifetime // 7)):
            assert footprint_edges(tvg.footprint(t1, t2)) == oracle_edges(relations, directed, lifetime, t1, t2)


@pytest.mark.parametrize('seed', FOOTPRINT_ORACLE_SEEDS[:100])
def test_footprint_monotonicity(seed):
    nodes, lifetime, directed, relations = random_tvg_spec(seed)
    tvg = build_tvg(nodes, lifetime, directed, relations)
    for t1 in range(lifetime):
        inner = footprint_edges(tvg.footprint(t1, t1 + 1))
        outer = footprint_edges(tvg.footprint(max(0, t1 - 2), min(lifetime, t1 + 3)))
        assert inner <= outer


@pytest.mark.parametrize('seed', FOOTPRINT_ORACLE_SEEDS)
def test_footprint_sequence_oracle(seed):
    nodes, lifetime, directed, relations = random_tvg_spec(seed)
    tvg = build_tvg(nodes, lifetime, directed, relations)
    inner_cuts = sorted({lifetime * k // 4 for k in range(1, 4)} - {0, lifetime})
    cuts = [0] + inner_cuts + [lifetime]

    sequence = tvg.footprint_sequence(cuts)
    assert len(sequence) == len(cuts) - 1
    for (t1, t2), footprint in zip(zip(cuts[:-1], cuts[1:]), sequence):
        assert footprint_edges(footprint) == oracle_edges(relations, directed, lifetime, t1, t2)

    union = set().union(*(footprint_edges(f) for f in sequence))
    assert union == footprint_edges(tvg.lifetime_footprint())


def test_footprint_sequence_single_window():
    nodes, lifetime, directed, relations = random_tvg_spec(7)
    tvg = build_tvg(nodes, lifetime, directed, relations)
    (only,) = tvg.footprint_sequence([0, lifetime])
    assert only.edge_set() == tvg.lifetime_footprint().edge_set()


@pytest.mark.parametrize('cuts', [[], [3], [0, 5, 5], [0, 6, 4]])
def test_footprint_sequence_invalid_partition(cuts):
    tvg = TimeVaryingGraph((0, 10))
    with pytest.raises(InvalidPartitionError):
        tvg.footprint_sequence(cuts)


def test_restrict_keeps_endpoints_only():
    tvg = TimeVaryingGraph((0, 10))
    for n in 'abc':
        tvg.add_entity(n, n.upper())
    ab = tvg.add_presence('a', 'b', 1)
    tvg.add_presence('b', 'c', 2)
    restricted = tvg.restrict([ab])
    assert sorted(restricted.entities) == ['a', 'b']
    assert restricted.relations == [ab]
    assert restricted.entity_name('a') == 'A'
    assert restricted.frozen


def test_static_graph_drops_self_loops_and_sums_weights():
    g = StaticGraph(edges=[('a', 'b', 2), ('b', 'a', 3), ('c', 'c')])
    assert g.number_of_edges == 1
    assert g.weight('a', 'b') == 5
    assert g.dropped_self_loops == 1
    assert 'c' in g.nodes
    with pytest.raises(ValueError):
        g.add_edge('a', 'c', -1)


def test_static_graph_components():
    g = StaticGraph(nodes=['z'], edges=[('a', 'b'), ('b', 'c'), ('d', 'e')])
    assert [sorted(c) for c in g.components()] == [['a', 'b', 'c'], ['d', 'e'], ['z']]
    assert sorted(g.largest_component().nodes) == ['a', 'b', 'c']
    assert g.view.get_summary_data()['components'] == 3
