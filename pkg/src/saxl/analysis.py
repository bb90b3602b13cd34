"""Saxl hypergraphs of permutation groups and checks of their structural properties."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import cached_property
from math import comb, factorial
from typing import Sequence

from .bases import DEFAULT_CONFIG, BaseSearchConfig, _Clock, base_size, is_base, minimal_bases, ordered_bases
from .errors import InvariantViolation, NoCommonVertex, NotAnEdge, NotTransitive
from .field import is_prime, prime_power
from .group import PermGroup
from .hypergraph import FlagTourParity, Hypergraph, _bits, gossip_witness, has_flag_spanning_tour


@dataclass
class SaxlInstance:
    group: PermGroup
    b: int
    hypergraph: Hypergraph
    spec: object = None

    @property
    def degree(self) -> int:
        return self.group.degree

    @property
    def edges(self) -> tuple[tuple[int, ...], ...]:
        return self.hypergraph.edges

    @cached_property
    def transitive(self) -> bool:
        return self.group.is_transitive()

    @cached_property
    def primitive(self) -> bool:
        return self.group.is_primitive()

    @cached_property
    def suborbit_reps(self) -> list[int]:
        return self.group.suborbit_representatives(0)

    def pairs_to_check(self) -> list[tuple[int, int]]:
        """Pairs (a, b) covering every pair up to the group action."""
        if self.transitive:
            return [(0, r) for r in self.suborbit_reps]
        return list(itertools.combinations(range(self.degree), 2))


def check_edge_invariance(G: PermGroup, H: Hypergraph) -> None:
    edges = H.edge_set
    for g in G.generators:
        for e in H.edges:
            if frozenset(g.images[x] for x in e) not in edges:
                raise InvariantViolation(f"generator {g} maps edge {e} outside the edge set")


def build_saxl(G: PermGroup, cfg: BaseSearchConfig = DEFAULT_CONFIG, spec=None) -> SaxlInstance:
    b = base_size(G, cfg)
    edges = minimal_bases(G, cfg, b)
    H = Hypergraph(G.degree, edges)
    if H.uniformity() != b:
        raise InvariantViolation("Saxl hypergraph is not b-uniform")
    check_edge_invariance(G, H)
    return SaxlInstance(G, b, H, spec)


# -- valency -----------------------------------------------------------------


@dataclass(frozen=True)
class ValencyCheck:
    d_direct: int
    d_formula: int
    orbit_count: int
    stabilizer_order: int
    ordered_bases: int


def _count_orbits(tuples: list[tuple[int, ...]], gens) -> int:
    index = {t: i for i, t in enumerate(tuples)}
    parent = list(range(len(tuples)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for g in gens:
        im = g.images
        for t, i in index.items():
            j = index[tuple(im[x] for x in t)]
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[ri] = rj
    return sum(1 for i in range(len(tuples)) if find(i) == i)


def valency_check(S: SaxlInstance, cfg: BaseSearchConfig = DEFAULT_CONFIG) -> ValencyCheck:
    """Degree of vertex 0 directly, and from orbits of the stabilizer on ordered bases."""
    if not S.transitive:
        raise NotTransitive("valency check assumes a transitive group")
    Ga = S.group.pointwise_stabilizer([0])
    obs = ordered_bases(Ga, S.b - 1, cfg)
    # ordered bases of G_0 not using 0 itself; 0 is fixed, so it never reduces
    n_orbits = _count_orbits(obs, Ga.generators) if Ga.order > 1 else len(obs)
    d_formula, rem = divmod(n_orbits * Ga.order, factorial(S.b - 1))
    d_direct = S.hypergraph.degree(0)
    if rem or d_formula != d_direct or len(obs) != n_orbits * Ga.order:
        raise InvariantViolation(f"valency mismatch: direct {d_direct}, formula {n_orbits}*{Ga.order}/{S.b - 1}!")
    return ValencyCheck(d_direct, d_formula, n_orbits, Ga.order, len(obs))


# -- completeness ------------------------------------------------------------


@dataclass(frozen=True)
class KnCertificate:
    n: int
    complete: bool
    recursive: bool
    direct: bool | None
    # (level, group order, number of orbit representatives tried)
    trail: tuple = ()


def _kn_recursive(H: PermGroup, removed: frozenset, n: int, trail: list, depth: int, clock: _Clock) -> bool:
    """Is H, acting on the points outside ``removed``, K(n)?"""
    clock.tick()
    if n == 0:
        return H.is_trivial()
    if H.is_trivial() and n == 1:
        return False
    rest = [x for x in range(H.degree) if x not in removed]
    if n > len(rest):
        return False
    reps = [o[0] for o in H.orbits() if o[0] not in removed]
    trail.append((depth, H.order, len(reps)))
    for a in reps:
        if not _kn_recursive(H.pointwise_stabilizer([a]), removed | {a}, n - 1, trail, depth + 1, clock):
            return False
    return True


def is_kn_complete(
    G: PermGroup, n: int, cfg: BaseSearchConfig = DEFAULT_CONFIG, direct_limit: int = 100, subset_cap: int = 50_000
) -> KnCertificate:
    """K(n) by the stabilizer recursion, cross-checked on all n-subsets when affordable."""
    if n < 0:
        raise ValueError("n must be non-negative")
    trail: list = []
    rec = _kn_recursive(G, frozenset(), n, trail, 0, _Clock(cfg))
    direct = None
    if G.degree <= direct_limit and comb(G.degree, n) <= subset_cap:
        direct = base_size(G, cfg) == n and all(is_base(G, S) for S in itertools.combinations(range(G.degree), n))
        if direct != rec:
            raise InvariantViolation(f"K({n}) recursion says {rec}, subset check says {direct}")
    if rec and n >= 2 and not G.is_k_transitive(n - 1):
        raise InvariantViolation(f"K({n}) group is not {n - 1}-transitive")
    return KnCertificate(n, rec, rec, direct, tuple(trail))


# -- common neighbours ---------------------------------------------------------


@dataclass
class ConjectureVerdict:
    status: str  # "holds" | "fails" | "unknown"
    witnesses: list = field(default_factory=list)
    checked_pairs: int = 0
    note: str = ""

    @property
    def holds(self) -> bool:
        return self.status == "holds"

    def as_dict(self) -> dict:
        return {"status": self.status, "checked_pairs": self.checked_pairs, "note": self.note, "witnesses": self.witnesses}


def _edge_through(H: Hypergraph, *vs: int) -> tuple[int, ...]:
    return H.edges_containing(*vs)[0]


def check_cnc(S: SaxlInstance) -> ConjectureVerdict:
    """Every pair has a common neighbour; witnesses are (a, b, c, E_a, E_b)."""
    H = S.hypergraph
    wit = []
    pairs = S.pairs_to_check()
    for a, b in pairs:
        common = H.neighbour_mask(a) & H.neighbour_mask(b)
        if not common:
            return ConjectureVerdict("fails", [{"pair": [a, b]}], len(pairs), "no common neighbour")
        c = _bits(common & -common)[0]
        wit.append({"pair": [a, b], "common": c, "edges": [list(_edge_through(H, a, c)), list(_edge_through(H, b, c))]})
    return ConjectureVerdict("holds", wit, len(pairs))


def verify_cnc_witness(G: PermGroup, b: int, w: dict) -> bool:
    a, c = w["pair"]
    g = w["common"]
    Ea, Eb = map(tuple, w["edges"])
    return (
        len(Ea) == len(Eb) == b
        and a in Ea and g in Ea and c in Eb and g in Eb
        and g not in (a, c)
        and is_base(G, Ea) and is_base(G, Eb)
    )


def check_edge_disjoint_cnc(S: SaxlInstance) -> ConjectureVerdict:
    """Every pair a, b has edges E_a, E_b meeting in exactly one point c outside {a, b}."""
    n, b = S.degree, S.b
    if 2 * b - 1 > n:
        return ConjectureVerdict(
            "fails", [{"bound": {"b": b, "degree": n, "2b-1": 2 * b - 1}}], 0, "2b-1 exceeds the degree"
        )
    H = S.hypergraph
    masks = H.edge_masks
    wit = []
    pairs = S.pairs_to_check()
    for a, c in pairs:
        found = None
        common = H.neighbour_mask(a) & H.neighbour_mask(c)
        for g in _bits(common):
            bit_g = 1 << g
            Ea = [i for i in H.incidence[a] if masks[i] & bit_g and not masks[i] >> c & 1]
            Eb = [i for i in H.incidence[c] if masks[i] & bit_g and not masks[i] >> a & 1]
            for i in Ea:
                for j in Eb:
                    if masks[i] & masks[j] == bit_g:
                        found = (g, i, j)
                        break
                if found:
                    break
            if found:
                break
        if found is None:
            return ConjectureVerdict("fails", [{"pair": [a, c]}], len(pairs), "no edge pair meets in one point")
        g, i, j = found
        wit.append({"pair": [a, c], "common": g, "edges": [list(H.edges[i]), list(H.edges[j])]})
    return ConjectureVerdict("holds", wit, len(pairs))


def _move_off(G: PermGroup, E: Sequence[int], x: int) -> tuple[int, ...]:
    """Image of E under an element fixing E - {x} pointwise and moving x."""
    K = G.pointwise_stabilizer([y for y in E if y != x])
    for g in K.strong_generators():
        if g[x] != x:
            return tuple(sorted(g[y] for y in E))
    raise InvariantViolation(f"{E} is not an irredundant base")


def disjointify_edges(
    S: SaxlInstance, a: int, b: int, Ea: Sequence[int], Eb: Sequence[int]
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Replace E_a, E_b so that neither a nor b lies in both, without growing the overlap."""
    Ea, Eb = tuple(sorted(Ea)), tuple(sorted(Eb))
    edges = S.hypergraph.edge_set
    for E in (Ea, Eb):
        if frozenset(E) not in edges:
            raise NotAnEdge(f"{E} is not an edge")
    if a == b or a not in Ea or b not in Eb:
        raise ValueError("need a != b with a in E_a and b in E_b")
    shared = (set(Ea) & set(Eb)) - {a, b}
    if not shared:
        raise NoCommonVertex("E_a and E_b share no vertex outside {a, b}")
    G = S.group
    Eb2 = _move_off(G, Eb, a) if a in Eb else Eb
    Ea2 = _move_off(G, Ea, b) if b in Ea else Ea
    inter, inter0 = set(Ea2) & set(Eb2), set(Ea) & set(Eb)
    ok = (
        a in Ea2 and b in Eb2
        and a not in inter and b not in inter
        and len(inter) <= len(inter0)
        and bool(inter - {a, b})
        and frozenset(Ea2) in edges and frozenset(Eb2) in edges
    )
    if not ok:
        raise InvariantViolation(f"edge replacement failed for {(a, b, Ea, Eb)} -> {(Ea2, Eb2)}")
    return Ea2, Eb2


def random_conforming_input(S: SaxlInstance, rng: random.Random):
    """Random (a, b, E_a, E_b) with a shared vertex outside {a, b}, or None if the pair has none."""
    H = S.hypergraph
    a, b = rng.sample(range(S.degree), 2)
    common = _bits(H.neighbour_mask(a) & H.neighbour_mask(b))
    if not common:
        return None
    c = rng.choice(common)
    Ea = rng.choice(H.edges_containing(a, c))
    Eb = rng.choice(H.edges_containing(b, c))
    return a, b, Ea, Eb


# -- gossip numbers -------------------------------------------------------------


def gossip_profile(S: SaxlInstance, n_max: int) -> list[int]:
    vt = S.transitive
    out = [gossip_witness(S.hypergraph, i, vt)[0] for i in range(1, n_max + 1)]
    if S.b >= 3 and n_max >= 2 and out[1] == 1:
        raise InvariantViolation("base size at least 3 but some pair has exactly one common neighbour")
    return out


# -- flag tours ---------------------------------------------------------------


@dataclass(frozen=True)
class FlagTourVerdict:
    parity: FlagTourParity
    case: str | None
    in_scope: bool

    @property
    def has_tour(self) -> bool:
        return self.parity.has_tour


def _squarefree(n: int) -> bool:
    return all(n % (d * d) for d in range(2, int(n**0.5) + 1))


def _spec_case(spec) -> str | None:
    if spec is None:
        return None
    kind, params = spec.kind, spec.params
    if kind in ("PSL2", "PGL2") and params[0] % 4 == 3:
        return "v"
    if kind == "Subsets" and params[1] == 2:
        inner = params[0]
        if inner.kind == "PGammaL2":
            pe = prime_power(inner.params[0])
            if pe and pe[0] == 2 and pe[1] % 2 == 1 and _squarefree(pe[1]):
                return "vi"
    return None


def flag_tour_verdict(S: SaxlInstance) -> FlagTourVerdict:
    """Parity verdict, tagged with the classification case it falls under when recognisable."""
    parity = has_flag_spanning_tour(S.hypergraph)
    in_scope = S.b in (3, 4) and S.primitive
    case = None
    if in_scope:
        if S.degree % 2:
            case = "ii"
        else:
            case = _spec_case(S.spec)
        if case is None and parity.has_tour:
            case = "i"
        if case in ("ii", "v", "vi") and parity.has_tour:
            raise InvariantViolation(f"case ({case}) excludes a tour but the parity test allows one")
    return FlagTourVerdict(parity, case, in_scope)


# -- prime valency and rays ------------------------------------------------------


def common_valency(S: SaxlInstance) -> int | None:
    ds = set(S.hypergraph.degrees())
    return ds.pop() if len(ds) == 1 else None


def prime_valency_scan(instances: Sequence[SaxlInstance]) -> list[tuple[SaxlInstance, int]]:
    out = []
    for S in instances:
        if not S.transitive or S.b not in (3, 4):
            continue
        d = common_valency(S)
        if d is not None and is_prime(d):
            out.append((S, d))
    return out


def rays_semiregular_check(S: SaxlInstance, max_elements: int = 10**5) -> bool:
    """No non-identity element fixes an ordered edge.

    An element fixes a ray exactly when it fixes the edge pointwise, so each
    element is reduced to its fixed-point mask and compared against edges.
    """
    G = S.group
    if G.order <= max_elements:
        elements = (g.images for g in G.elements())
    else:
        elements = (g.images for g in list(G.generators) + list(G.strong_generators()))
    masks = S.hypergraph.edge_masks
    for im in elements:
        fix = 0
        moved = False
        for x, y in enumerate(im):
            if x == y:
                fix |= 1 << x
            else:
                moved = True
        if not moved or fix.bit_count() < S.b:
            continue
        for m in masks:
            if m & fix == m:
                return False
    return True


# -- whole-instance structure --------------------------------------------------


def structural_report(S: SaxlInstance) -> dict[str, bool]:
    """Structural properties every Saxl hypergraph must have; all values should be True."""
    H = S.hypergraph
    out = {"uniform": H.uniformity() == S.b}
    try:
        check_edge_invariance(S.group, H)
        out["edge_invariant"] = True
    except InvariantViolation:
        out["edge_invariant"] = False
    if S.transitive:
        degs = set(H.degrees())
        out["vertex_regular"] = len(degs) == 1 and 0 not in degs
    if S.primitive:
        out["primitive_connected"] = H.is_connected()
    return out
