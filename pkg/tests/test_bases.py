import itertools
from math import factorial

import pytest
from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from oracles import closure, naive_bases
from saxl.bases import (
    BaseSearchConfig,
    BaseSet,
    base_size,
    extend_to_minimal_base,
    find_minimum_base,
    format_edge_dump,
    is_adjacent,
    is_base,
    minimal_bases,
    ordered_bases,
    parse_edge_dump,
    read_edge_dump,
    write_edge_dump,
)
from saxl.constructions import DeletedModule, affine_deleted_module, agl1_subgroup, natural_group, projective_group
from saxl.errors import BaseSizeTooSmall, BudgetExceeded, ParseError, PointOutOfRange
from saxl.group import group_from_generators
from saxl.perm import Permutation

SETTINGS = settings(max_examples=80, deadline=None, suppress_health_check=[HealthCheck.filter_too_much, HealthCheck.too_slow])


@st.composite
def small_groups(draw):
    """Groups of degree <= 12 and order <= 5000, often intransitive."""
    n = draw(st.integers(2, 12))
    # split the points into blocks and act inside them, plus an optional global generator
    cuts = sorted(draw(st.sets(st.integers(1, n - 1), max_size=3)))
    blocks = [list(range(a, b)) for a, b in zip([0] + cuts, cuts + [n])]
    gens = []
    for blk in blocks:
        for _ in range(draw(st.integers(0, 2))):
            img = draw(st.permutations(blk))
            full = list(range(n))
            for x, y in zip(blk, img):
                full[x] = y
            gens.append(full)
    if n <= 7 and draw(st.booleans()):
        gens.append(list(draw(st.permutations(range(n)))))
    elems = closure(gens, n, limit=5000)
    assume(elems is not None)
    return group_from_generators([Permutation(g) for g in gens], n), elems


def test_is_base_examples():
    S4 = natural_group("Sym", 4)
    assert is_base(S4, {0, 1, 2})
    assert not is_base(S4, {0, 1})
    G = projective_group("PGL", 5)
    assert all(is_base(G, S) for S in itertools.combinations(range(6), 3))
    with pytest.raises(PointOutOfRange):
        is_base(S4, {7})


@pytest.mark.parametrize("n", range(4, 9))
def test_natural_base_sizes(n):
    assert base_size(natural_group("Sym", n)) == n - 1
    assert base_size(natural_group("Alt", n)) == n - 2


def test_small_base_sizes():
    assert base_size(group_from_generators([], 4)) == 0
    C4 = group_from_generators([Permutation.from_cycles([(0, 1, 2, 3)], 4)], 4)
    assert base_size(C4) == 1
    with pytest.raises(BaseSizeTooSmall):
        minimal_bases(C4)
    assert base_size(affine_deleted_module(5, 1)) == 2


def test_minimal_bases_examples():
    assert minimal_bases(natural_group("Sym", 4)) == list(itertools.combinations(range(4), 3))
    assert minimal_bases(agl1_subgroup(5, 4)) == list(itertools.combinations(range(5), 2))


def test_adjacency_examples():
    S4 = natural_group("Sym", 4)
    assert all(is_adjacent(S4, a, b) for a, b in itertools.permutations(range(4), 2))
    S3 = natural_group("Sym", 3)
    assert all(is_adjacent(S3, a, b) for a, b in itertools.permutations(range(3), 2))


def test_adjacency_in_deleted_module_against_edges():
    G = affine_deleted_module(5, 1)
    M = DeletedModule(5, 4)
    v = M.from_ints([1, -1, 0, 0])
    edges = set(minimal_bases(G))
    assert is_adjacent(G, v, 0) == ((0, v) in edges)


def test_extend_to_minimal_base():
    S4 = natural_group("Sym", 4)
    B = extend_to_minimal_base(S4, [0, 1])
    assert isinstance(B, BaseSet) and B.points[:2] == (0, 1) and len(B) == 3 and is_base(S4, B.points)
    assert extend_to_minimal_base(S4, [0, 1, 2, 3]) is None
    G = projective_group("PGL", 5)
    B = extend_to_minimal_base(G, [0])
    assert B.points[0] == 0 and len(B) == 3


def test_extend_fails_when_partial_is_redundant():
    # two disjoint transpositions: a minimum base takes one point from each
    C = group_from_generators([Permutation.from_cycles([(0, 1)], 4), Permutation.from_cycles([(2, 3)], 4)], 4)
    assert base_size(C) == 2
    assert extend_to_minimal_base(C, [0, 1]) is None
    assert extend_to_minimal_base(C, [0, 3]).as_set() == {0, 3}


@SETTINGS
@given(small_groups())
def test_oracle_equivalence(data):
    G, elems = data
    b, bases = naive_bases(elems, G.degree)
    assert base_size(G) == b
    if b >= 2:
        assert minimal_bases(G) == bases


@SETTINGS
@given(small_groups())
def test_bases_are_irredundant(data):
    G, _ = data
    b = base_size(G)
    B = find_minimum_base(G)
    assert len(B) == b and is_base(G, B.points)
    if b < 2:
        return
    for E in minimal_bases(G):
        assert is_base(G, E)
        for sub in itertools.combinations(E, b - 1):
            assert not is_base(G, sub)


@SETTINGS
@given(small_groups())
def test_adjacency_matches_edges(data):
    G, _ = data
    b = base_size(G)
    assume(b >= 2)
    edges = minimal_bases(G)
    pairs = {p for E in edges for p in itertools.combinations(E, 2)}
    for a, c in itertools.combinations(range(G.degree), 2):
        assert is_adjacent(G, a, c, b=b) == ((a, c) in pairs)


@SETTINGS
@given(small_groups())
def test_edges_are_group_invariant(data):
    G, _ = data
    assume(base_size(G) >= 2)
    edges = set(minimal_bases(G))
    for g in G.generators:
        assert {tuple(sorted(g[x] for x in E)) for E in edges} == edges


@SETTINGS
@given(small_groups())
def test_ordered_bases_are_orderings_of_edges(data):
    G, _ = data
    b = base_size(G)
    assume(b >= 2)
    ob = ordered_bases(G, b)
    edges = minimal_bases(G, b=b)
    assert len(ob) == len(set(ob)) == len(edges) * factorial(b)
    assert {tuple(sorted(t)) for t in ob} == set(edges)


def test_config_validation():
    with pytest.raises(ValueError):
        BaseSearchConfig(max_edges=0)
    with pytest.raises(ValueError):
        BaseSearchConfig(time_budget=-1)


def test_edge_budget():
    with pytest.raises(BudgetExceeded):
        minimal_bases(projective_group("PGL", 7), BaseSearchConfig(max_edges=10))


def test_time_budget():
    with pytest.raises(BudgetExceeded):
        minimal_bases(natural_group("Sym", 9), BaseSearchConfig(time_budget=1e-9))


def test_max_base_size_cap():
    with pytest.raises(BudgetExceeded):
        base_size(natural_group("Sym", 6), BaseSearchConfig(max_base_size=3))


def test_edge_dump_round_trip(tmp_path):
    edges = minimal_bases(natural_group("Sym", 4))
    text = format_edge_dump(4, 3, edges)
    assert text.splitlines()[0] == "# degree 4, base_size 3, edges 4"
    assert text.splitlines()[1] == "1,2,3"
    assert parse_edge_dump(text) == (4, 3, edges)
    path = tmp_path / "e.txt"
    write_edge_dump(path, 4, 3, edges)
    assert read_edge_dump(path) == (4, 3, edges)
    with pytest.raises(ParseError):
        parse_edge_dump("1,2\n")
    with pytest.raises(ParseError):
        parse_edge_dump("# degree 4, base_size 2, edges 2\n1,2\n")
