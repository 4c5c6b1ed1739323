"""Unit interval model construction and the spreading-time machinery.

The frozen chain fixtures were computed with the subset oracle and spot
checked by hand; the exhaustive sweep re-derives every clique layout up
to eight positions and compares against the oracle directly.
"""

import random

import pytest

from chainutil import chain_graph, glue, interval_systems, ladder, solid
from p3conv.generators import (
    DEFAULT_SEED,
    random_biconnected_chain,
    random_clique_chain,
    random_unit_interval_graph,
    shuffle_labels,
)
from p3conv.graph import Graph, is_biconnected
from p3conv.oracle import percolation_time_bruteforce
from p3conv.unit_interval import (
    build_model,
    cut_segments,
    diameter_endpoints,
    percolation_time,
    percolation_time_biconnected,
    recognize_unit_interval,
    singular_positions,
    split_singular_vertices,
)


def bfs_diameter(g):
    best = 0
    for src in range(g.n):
        dist = {src: 0}
        frontier = [src]
        while frontier:
            nxt = []
            for u in frontier:
                for w in g.adj(u):
                    if w not in dist:
                        dist[w] = dist[u] + 1
                        nxt.append(w)
            frontier = nxt
        best = max(best, max(dist.values()))
    return best


def test_build_model_path():
    m = build_model(Graph(4, [(0, 1), (1, 2), (2, 3)]), (0, 1, 2, 3))
    assert m.cliques == ((0, 1), (1, 2), (2, 3))
    assert m.right == (1, 2, 3, 3)


def test_build_model_rejects_invalid_orders():
    c4 = Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    with pytest.raises(ValueError):
        build_model(c4, (0, 1, 2, 3))
    p3 = Graph(3, [(0, 1), (1, 2)])
    with pytest.raises(ValueError):
        build_model(p3, (1, 0, 2))
    with pytest.raises(ValueError):
        build_model(p3, (0, 1))


def test_recognize_unit_interval():
    claw = Graph(4, [(0, 1), (0, 2), (0, 3)])
    assert recognize_unit_interval(claw) is None
    c4 = Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert recognize_unit_interval(c4) is None
    k4 = Graph(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
    m = recognize_unit_interval(k4)
    assert m is not None and m.cliques == ((0, 3),)


def test_recognize_survives_relabeling():
    rng = random.Random(7)
    base = chain_graph(8, [(0, 2), (2, 5), (4, 7)])
    for _ in range(10):
        g = shuffle_labels(rng, base)
        m = recognize_unit_interval(g)
        assert m is not None
        # the returned order must itself be valid for the model builder
        build_model(g, m.order)


def test_singular_positions():
    p4 = build_model(Graph(4, [(0, 1), (1, 2), (2, 3)]), (0, 1, 2, 3))
    assert singular_positions(p4) == (1, 2)
    bowtie = build_model(chain_graph(5, [(0, 2), (2, 4)]), tuple(range(5)))
    assert singular_positions(bowtie) == (2,)
    k4 = recognize_unit_interval(Graph(4, [(i, j) for i in range(4) for j in range(i + 1, 4)]))
    assert singular_positions(k4) == ()


def test_split_requires_biconnected():
    bowtie = build_model(chain_graph(5, [(0, 2), (2, 4)]), tuple(range(5)))
    with pytest.raises(ValueError):
        split_singular_vertices(bowtie)


def test_split_on_overlapping_chain():
    g = chain_graph(5, [(0, 2), (1, 3), (2, 4)])
    m = build_model(g, tuple(range(5)))
    assert is_biconnected(g)
    assert singular_positions(m) == (2,)
    split = split_singular_vertices(m)
    assert split.graph.n == 6
    assert split.cliques == ((0, 2), (1, 4), (3, 5))
    for (a1, b1), (a2, b2) in zip(split.cliques, split.cliques[1:]):
        assert b1 - a2 + 1 >= 2
    assert singular_positions(split) == ()
    # the transform must not change the worst-case spreading time
    assert percolation_time_bruteforce(split.graph) == percolation_time_bruteforce(g)


def test_biconnected_time_via_split_diameter():
    g = chain_graph(5, [(0, 2), (1, 3), (2, 4)])
    m = build_model(g, tuple(range(5)))
    assert diameter_endpoints(m) == 2
    assert percolation_time_biconnected(m) == 3
    assert percolation_time_bruteforce(g) == 3


def test_diameter_endpoints_matches_bfs():
    rng = random.Random(DEFAULT_SEED)
    for _ in range(40):
        g, order = random_unit_interval_graph(rng, rng.randint(2, 10))
        m = build_model(g, order)
        assert diameter_endpoints(m) == bfs_diameter(g)


def test_path_segments_are_edges():
    g = Graph(5, [(i, i + 1) for i in range(4)])
    m = build_model(g, tuple(range(5)))
    segs = cut_segments(m)
    assert [(s.lo, s.hi, s.case_tag, s.time) for s in segs] == [
        (0, 1, "edge", 1),
        (1, 2, "edge", 1),
        (2, 3, "edge", 1),
        (3, 4, "edge", 1),
    ]
    assert percolation_time(m) == 1


segment_fixtures = [
    # cliques, expected (lo, hi, tag, time) rows, total time
    ([(0, 2), (2, 4)], [(0, 4, "two_anchors", 2)], 2),
    ([(0, 1), (1, 2), (2, 4)], [(0, 1, "edge", 1), (1, 4, "guarded_left", 2)], 2),
    ([(0, 2), (2, 3), (3, 4)], [(0, 3, "guarded_right", 2), (3, 4, "edge", 1)], 2),
    ([(0, 1), (1, 3), (3, 4)], [(0, 4, "two_pendants", 2)], 2),
    (
        [(0, 2), (2, 3), (3, 4), (4, 6)],
        [(0, 3, "guarded_right", 2), (3, 6, "guarded_left", 2)],
        2,
    ),
    (
        [(0, 2), (2, 3), (3, 4), (4, 6), (6, 7), (7, 8), (8, 10)],
        [
            (0, 3, "guarded_right", 2),
            (3, 7, "guarded_both", 3),
            (7, 10, "guarded_left", 2),
        ],
        3,
    ),
]


@pytest.mark.parametrize("cliques,rows,total", segment_fixtures)
def test_segment_classification(cliques, rows, total):
    n = cliques[-1][1] + 1
    g = chain_graph(n, cliques)
    m = build_model(g, tuple(range(n)))
    assert [(s.lo, s.hi, s.case_tag, s.time) for s in cut_segments(m)] == rows
    assert percolation_time(m) == total
    assert percolation_time_bruteforce(g) == total


chain_fixtures = [
    (glue(ladder(1), ladder(1)), 2),
    (glue(ladder(1), ladder(1), ladder(1)), 3),
    (glue(ladder(1), ladder(1), ladder(1), ladder(1)), 4),
    (ladder(2), 3),
    (glue(ladder(1), ladder(2)), 4),
    (glue(ladder(2), ladder(1)), 4),
    (glue(ladder(2), ladder(2)), 5),
    (glue(ladder(1), ladder(2), ladder(1)), 4),
    (glue(ladder(2), ladder(1), ladder(2)), 7),
    (glue(ladder(1), ladder(1), ladder(2)), 5),
    (glue(ladder(2), ladder(1), ladder(1)), 5),
    (ladder(3), 5),
    (glue(ladder(1), ladder(3)), 6),
    (glue(ladder(3), ladder(1)), 6),
    (glue(ladder(2), ladder(3)), 7),
    (glue(ladder(3), ladder(3)), 9),
    (glue(ladder(1), ladder(1), ladder(3)), 7),
    (glue(solid(4), ladder(2), solid(4)), 4),
    (glue(solid(4), solid(4)), 2),
    (glue(solid(4), solid(4), solid(4)), 3),
    (glue(solid(4), ladder(1)), 2),
    (glue(solid(4), ladder(2)), 4),
    (glue(ladder(2), solid(4)), 4),
    (glue(solid(4), ladder(3)), 6),
]


@pytest.mark.parametrize("chain,expected", chain_fixtures)
def test_clique_chain_times(chain, expected):
    n, cliques = chain
    g = chain_graph(n, cliques)
    m = build_model(g, tuple(range(n)))
    assert percolation_time(m) == expected
    assert percolation_time_bruteforce(g, max_n=13) == expected


def test_pincer_schedule_regression():
    # a middle block can be left seedless and fed from both sides at once;
    # the worst case here is 3, not the 4 a one-directional account suggests
    cliques = [(0, 1), (1, 3), (2, 4), (4, 5), (5, 7), (6, 8), (8, 9)]
    g = chain_graph(10, cliques)
    m = build_model(g, tuple(range(10)))
    assert percolation_time(m) == 3
    assert percolation_time_bruteforce(g) == 3


def test_exhaustive_layouts_up_to_eight_positions():
    expected_counts = {3: 2, 4: 5, 5: 14, 6: 42, 7: 132, 8: 429}
    for n in range(3, 9):
        systems = interval_systems(n)
        assert len(systems) == expected_counts[n]
        for cliques in systems:
            g = chain_graph(n, cliques)
            m = build_model(g, tuple(range(n)))
            assert m.cliques == tuple(cliques)
            assert percolation_time(m) == percolation_time_bruteforce(g)


def test_tiny_graphs():
    assert percolation_time(build_model(Graph(1, []), (0,))) == 0
    assert percolation_time(build_model(Graph(2, [(0, 1)]), (0, 1))) == 0


def test_disconnected_is_rejected():
    g = Graph(4, [(0, 1), (2, 3)])
    m = build_model(g, (0, 1, 2, 3))
    with pytest.raises(ValueError):
        percolation_time(m)


def test_random_generators_match_oracle():
    rng = random.Random(DEFAULT_SEED)
    makers = [random_unit_interval_graph, random_clique_chain, random_biconnected_chain]
    for i in range(60):
        make = makers[i % 3]
        g, order = make(rng, rng.randint(3, 10))
        m = build_model(g, order)
        assert percolation_time(m) == percolation_time_bruteforce(g)
