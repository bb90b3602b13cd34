import random

import pytest
from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from oracles import closure
from saxl.constructions import CATALOG, agl1_subgroup, natural_group, projective_group
from saxl.errors import KTooLarge, MixedDegree, NotTransitive, PointOutOfRange
from saxl.group import contains, group_from_generators, orbit, order, pointwise_stabilizer, suborbit_representatives
from saxl.perm import Permutation


def P(cycles, n):
    return Permutation.from_cycles(cycles, n)


@st.composite
def small_groups(draw, max_degree=7, max_order=5000):
    n = draw(st.integers(1, max_degree))
    k = draw(st.integers(0, 2))
    gens = [Permutation(draw(st.permutations(range(n)))) for _ in range(k)]
    elems = closure([g.images for g in gens], n, limit=max_order)
    assume(elems is not None)
    return group_from_generators(gens, n), elems


def test_sym4_from_two_generators():
    G = group_from_generators([P([(0, 1)], 4), P([(0, 1, 2, 3)], 4)], 4)
    assert order(G) == 24
    assert G.base == [0, 1, 2]


def test_empty_generators_give_trivial_group():
    assert group_from_generators([], 5).order == 1


def test_mixed_degree_rejected():
    with pytest.raises(MixedDegree):
        group_from_generators([P([(0, 1)], 3), P([(0, 1)], 4)], 3)


def test_m11_order_and_random_membership():
    G = CATALOG["M11"].build()
    assert G.order == 7920
    rng = random.Random(3)
    for _ in range(50):
        word = Permutation.identity(11)
        for _ in range(rng.randint(1, 12)):
            word = word * rng.choice(G.generators)
        assert G.contains(word)


def test_orders_of_small_groups():
    assert natural_group("Alt", 5).order == 60
    assert projective_group("PGL", 7).order == 7 * 48


def test_contains():
    A4 = natural_group("Alt", 4)
    assert not contains(A4, P([(0, 1)], 4))
    assert contains(A4, P([(0, 1, 2)], 4))
    assert contains(A4, Permutation.identity(4))
    with pytest.raises(MixedDegree):
        A4.contains(Permutation.identity(5))


def test_orbits():
    assert orbit(natural_group("Sym", 4), 0) == [0, 1, 2, 3]
    assert orbit(group_from_generators([], 4), 2) == [2]
    assert sorted(orbit(group_from_generators([P([(0, 1), (2, 3)], 4)], 4), 0)) == [0, 1]
    with pytest.raises(PointOutOfRange):
        orbit(natural_group("Sym", 4), 4)


def test_pointwise_stabilizers():
    S4 = natural_group("Sym", 4)
    H = pointwise_stabilizer(S4, [0])
    assert H.order == 6 and orbit(H, 0) == [0]
    assert pointwise_stabilizer(S4, [0, 1, 2]).is_trivial()


def test_pgl25_two_point_stabilizer_brute_force():
    G = projective_group("PGL", 5)
    inf = 5
    expected = [g for g in G.elements() if g(0) == 0 and g(inf) == inf]
    H = pointwise_stabilizer(G, [0, inf])
    assert H.order == len(expected) == 4
    assert all(H.contains(g) for g in expected)


def test_transitivity_predicates():
    S4 = natural_group("Sym", 4)
    assert S4.is_k_transitive(4)
    with pytest.raises(KTooLarge):
        S4.is_k_transitive(5)
    assert agl1_subgroup(5, 4).is_frobenius()
    C4 = group_from_generators([P([(0, 1, 2, 3)], 4)], 4)
    assert C4.is_transitive() and not C4.is_primitive()
    assert sorted(C4.minimal_block(0, 2)) == [0, 2]
    assert C4.is_regular() and not C4.is_frobenius()


def test_suborbit_representatives():
    assert suborbit_representatives(natural_group("Sym", 4), 0) == [1]
    D8 = group_from_generators([P([(0, 1, 2, 3)], 4), P([(1, 3)], 4)], 4)
    assert D8.order == 8
    assert suborbit_representatives(D8, 0) == [1, 2]
    assert len(suborbit_representatives(projective_group("PGL", 5), 3)) == 1
    with pytest.raises(NotTransitive):
        suborbit_representatives(group_from_generators([P([(0, 1)], 3)], 3), 0)


@settings(max_examples=60, suppress_health_check=[HealthCheck.filter_too_much, HealthCheck.too_slow])
@given(small_groups())
def test_chain_matches_closure(data):
    G, elems = data
    assert G.order == len(elems)
    prod = 1
    for s in G.transversal_sizes():
        prod *= s
    assert prod == G.order
    assert {g.images for g in G.elements()} == elems
    for g in G.generators:
        assert G.contains(g)


@settings(max_examples=60, suppress_health_check=[HealthCheck.filter_too_much, HealthCheck.too_slow])
@given(small_groups())
def test_orbit_stabilizer_and_partition(data):
    G, _ = data
    orbits = G.orbits()
    assert sum(len(o) for o in orbits) == G.degree
    assert sorted(x for o in orbits for x in o) == list(range(G.degree))
    for a in range(G.degree):
        assert G.order == len(G.orbit(a)) * G.pointwise_stabilizer([a]).order


@settings(max_examples=60, suppress_health_check=[HealthCheck.filter_too_much, HealthCheck.too_slow])
@given(small_groups())
def test_transitivity_hierarchy(data):
    G, elems = data
    for k in range(2, G.degree + 1):
        if G.is_k_transitive(k):
            assert G.is_k_transitive(k - 1)
    if G.is_frobenius():
        assert G.is_transitive() and not G.is_semiregular()
    # semiregularity by brute force
    ident = tuple(range(G.degree))
    semireg = all(all(g[i] != i for i in range(G.degree)) for g in elems if g != ident)
    assert G.is_semiregular() == semireg


@settings(max_examples=40, suppress_health_check=[HealthCheck.filter_too_much, HealthCheck.too_slow])
@given(small_groups(), st.data())
def test_stabilizer_of_subset_brute_force(data, draw):
    G, elems = data
    S = draw.draw(st.sets(st.integers(0, G.degree - 1), max_size=G.degree))
    expected = {g for g in elems if all(g[x] == x for x in S)}
    assert G.pointwise_stabilizer(S).order == len(expected)


def _brute_primitive(n, elems):
    import itertools

    for size in range(2, n):
        if n % size:
            continue
        for rest in itertools.combinations(range(1, n), size - 1):
            B = {0, *rest}
            if all({g[x] for x in B} == B or not ({g[x] for x in B} & B) for g in elems):
                return False
    return True


@settings(max_examples=60, suppress_health_check=[HealthCheck.filter_too_much, HealthCheck.too_slow])
@given(small_groups())
def test_primitivity_brute_force(data):
    G, elems = data
    if G.is_transitive():
        assert G.is_primitive() == _brute_primitive(G.degree, elems)
    else:
        assert not G.is_primitive()
