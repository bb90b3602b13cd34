import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import naive_gossip, naive_neighbours
from saxl.errors import BudgetExceeded, EmptyHypergraph, PointOutOfRange
from saxl.hypergraph import (
    Hypergraph,
    Ray,
    SArc,
    enumerate_s_arcs,
    gossip_number,
    gossip_numbers,
    gossip_witness,
    has_flag_spanning_tour,
    random_hypergraph,
    rays,
)


def complete(n, k):
    return Hypergraph(n, itertools.combinations(range(n), k))


@st.composite
def hypergraphs(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    edges = draw(st.lists(st.sets(st.integers(0, n - 1), min_size=1, max_size=min(n, 4)), max_size=12))
    return Hypergraph(n, edges)


def test_degree_and_neighbourhood():
    K = complete(4, 3)
    assert all(K.degree(v) == 3 and len(K.neighbourhood(v)) == 3 for v in range(4))
    E = Hypergraph(3)
    assert E.degree(1) == 0 and E.neighbourhood(1) == frozenset()
    H = Hypergraph(5, [{0, 1, 2}, {0, 3, 4}])
    assert H.degree(0) == 2 and H.neighbourhood(0) == {1, 2, 3, 4}
    with pytest.raises(PointOutOfRange):
        H.degree(5)


def test_duplicates_collapse_and_range_checked():
    H = Hypergraph(3, [(0, 1), (1, 0)])
    assert H.edges == ((0, 1),)
    with pytest.raises(PointOutOfRange):
        Hypergraph(3, [(0, 3)])


def test_two_section():
    assert Hypergraph(3, [{0, 1, 2}]).two_section().edges == ((0, 1), (0, 2), (1, 2))
    G = Hypergraph(4, [(0, 1), (2, 3), (1, 2)])
    assert G.two_section() == G
    assert Hypergraph(3).two_section().edges == ()


def test_components_and_diameter():
    K = complete(4, 3)
    assert len(K.components()) == 1 and K.diameter() == 1
    H = Hypergraph(6, [{0, 1, 2}, {3, 4, 5}])
    assert len(H.components()) == 2 and H.diameter() == float("inf")
    assert Hypergraph(3, [(0, 1), (1, 2)]).diameter() == 2


def test_gossip_examples():
    assert gossip_number(complete(4, 2), 2) == 2
    assert gossip_number(complete(3, 2), 2) == 1
    assert gossip_number(Hypergraph(3, [(0, 1)]), 1) == 0
    assert gossip_number(complete(3, 2), 4) == 0
    value, S = gossip_witness(Hypergraph(4, [(0, 1), (1, 2), (2, 3)]), 2)
    assert value == 0 and S == (0, 1)


def test_flag_tour_parity():
    assert not has_flag_spanning_tour(complete(4, 3)).has_tour
    v = has_flag_spanning_tour(complete(6, 2))
    assert not v.has_tour and v.odd_vertex == 0
    odd = has_flag_spanning_tour(complete(5, 2))
    assert not odd.has_tour and odd.odd_vertex is None
    assert has_flag_spanning_tour(complete(6, 3)).has_tour
    with pytest.raises(EmptyHypergraph):
        has_flag_spanning_tour(Hypergraph(4))


def test_arcs_and_rays():
    H = Hypergraph(2, [(0, 1)])
    arcs = enumerate_s_arcs(H, 1)
    assert [a.vertices for a in arcs] == [(0, 1), (1, 0)]
    assert len(rays(Hypergraph(3, [(0, 1, 2)]))) == 6
    assert enumerate_s_arcs(Hypergraph(3), 2) == [] and rays(Hypergraph(3)) == []
    with pytest.raises(BudgetExceeded):
        enumerate_s_arcs(complete(6, 3), 3, cap=10)
    with pytest.raises(ValueError):
        Ray((0, 1), (0, 2))


def _brute_arcs(H, s):
    out = []
    for vs in itertools.product(range(H.n_vertices), repeat=s + 1):
        for es in itertools.product(H.edges, repeat=s):
            arc = SArc(vs, es)
            if arc.is_valid():
                out.append(arc)
    return out


@settings(max_examples=40, deadline=None)
@given(hypergraphs(max_n=5), st.integers(1, 3))
def test_s_arcs_brute_force(H, s):
    assert set(enumerate_s_arcs(H, s)) == set(_brute_arcs(H, s))


@settings(max_examples=80, deadline=None)
@given(hypergraphs())
def test_neighbourhoods_match_two_section(H):
    G = H.two_section()
    nb = naive_neighbours(H.n_vertices, H.edges)
    for v in range(H.n_vertices):
        assert H.neighbourhood(v) == G.neighbourhood(v) == nb[v]


@settings(max_examples=80, deadline=None)
@given(hypergraphs())
def test_degree_sum(H):
    assert sum(H.degrees()) == sum(len(e) for e in H.edges)


@settings(max_examples=60, deadline=None)
@given(hypergraphs(max_n=7), st.integers(0, 4), st.data())
def test_walks_match_two_section(H, s, data):
    v = data.draw(st.integers(0, H.n_vertices - 1))
    w = data.draw(st.integers(0, H.n_vertices - 1))
    G = H.two_section()
    # brute force walk count over the 2-section adjacency
    frontier = {v}
    for _ in range(s):
        frontier = {y for x in frontier for e in G.edges if x in e for y in e if y != x}
    assert H.has_walk(v, w, s) == G.has_walk(v, w, s) == (w in frontier)


@settings(max_examples=80, deadline=None)
@given(hypergraphs(max_n=8))
def test_gossip_oracle_and_monotonicity(H):
    gs = gossip_numbers(H, H.n_vertices + 1)
    for k, g in enumerate(gs, 1):
        assert g == naive_gossip(H.n_vertices, H.edges, k)
    for i in range(len(gs)):
        for j in range(i, len(gs)):
            assert gs[i] >= gs[j]
            if gs[j] > 0:
                assert gs[i] + i >= gs[j] + j


def test_gossip_vertex_transitive_hint_on_cycles():
    rng = random.Random(0)
    for n in range(4, 12):
        shift = rng.randrange(1, n)
        H = Hypergraph(n, [(i, (i + 1) % n, (i + shift) % n) for i in range(n)])
        for k in (1, 2, 3):
            assert gossip_number(H, k, vertex_transitive=True) == gossip_number(H, k)


def test_dump_round_trip():
    H = complete(5, 2)
    assert Hypergraph.from_edge_dump(H.to_edge_dump()) == H


def test_random_hypergraph_reproducible():
    a = random_hypergraph(8, 5, (2, 3), random.Random(1))
    b = random_hypergraph(8, 5, (2, 3), random.Random(1))
    assert a == b
