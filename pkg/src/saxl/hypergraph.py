"""Group-agnostic hypergraphs on vertices 0..n-1.

Neighbourhoods are stored as integer bitmasks, so common neighbourhoods of a
vertex set are a chain of ``&`` operations.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import BudgetExceeded, EmptyHypergraph, PointOutOfRange


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


class Hypergraph:
    """Vertices ``0..n-1`` and a set of edges, each a set of vertices."""

    def __init__(self, n_vertices: int, edges: Iterable[Iterable[int]] = ()):
        if n_vertices < 0:
            raise ValueError("vertex count must be non-negative")
        self.n_vertices = n_vertices
        uniq = set()
        for e in edges:
            t = tuple(sorted(set(e)))
            if not t:
                raise ValueError("edges must be non-empty")
            if t[0] < 0 or t[-1] >= n_vertices:
                raise PointOutOfRange(f"edge {t} leaves range({n_vertices})")
            uniq.add(t)
        self.edges: tuple[tuple[int, ...], ...] = tuple(sorted(uniq))
        self.edge_masks = tuple(sum(1 << v for v in e) for e in self.edges)
        inc: list[list[int]] = [[] for _ in range(n_vertices)]
        nbr = [0] * n_vertices
        for i, (e, m) in enumerate(zip(self.edges, self.edge_masks)):
            for v in e:
                inc[v].append(i)
                nbr[v] |= m
        self.incidence = tuple(tuple(x) for x in inc)
        self._nbr = tuple(m & ~(1 << v) for v, m in enumerate(nbr))

    def __repr__(self) -> str:
        return f"Hypergraph(n={self.n_vertices}, edges={len(self.edges)})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Hypergraph) and (self.n_vertices, self.edges) == (other.n_vertices, other.edges)

    def __hash__(self) -> int:
        return hash((self.n_vertices, self.edges))

    @property
    def edge_set(self) -> set[frozenset[int]]:
        return {frozenset(e) for e in self.edges}

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n_vertices:
            raise PointOutOfRange(f"vertex {v} outside range({self.n_vertices})")

    def degree(self, v: int) -> int:
        self._check(v)
        return len(self.incidence[v])

    def degrees(self) -> list[int]:
        return [len(x) for x in self.incidence]

    def neighbour_mask(self, v: int) -> int:
        self._check(v)
        return self._nbr[v]

    def neighbourhood(self, v: int) -> frozenset[int]:
        return frozenset(_bits(self.neighbour_mask(v)))

    def common_neighbours(self, vs: Iterable[int]) -> frozenset[int]:
        vs = list(vs)
        if not vs:
            return frozenset(range(self.n_vertices))
        m = -1
        for v in vs:
            m &= self.neighbour_mask(v)
        return frozenset(_bits(m))

    def edges_containing(self, *vs: int) -> list[tuple[int, ...]]:
        for v in vs:
            self._check(v)
        if not vs:
            return list(self.edges)
        want = sum(1 << v for v in vs)
        return [self.edges[i] for i in self.incidence[vs[0]] if self.edge_masks[i] & want == want]

    def uniformity(self) -> int | None:
        """The common edge size, or None if edges differ in size (or there are none)."""
        sizes = {len(e) for e in self.edges}
        return sizes.pop() if len(sizes) == 1 else None

    def is_complete(self) -> bool:
        k = self.uniformity()
        if k is None:
            return False
        from math import comb

        return len(self.edges) == comb(self.n_vertices, k)

    def is_graph(self) -> bool:
        return all(len(e) == 2 for e in self.edges)

    def two_section(self) -> "Hypergraph":
        """Simple graph joining vertices that share an edge."""
        pairs = set()
        for e in self.edges:
            pairs.update(itertools.combinations(e, 2))
        return Hypergraph(self.n_vertices, pairs)

    def _bfs(self, src: int) -> list[int]:
        dist = [-1] * self.n_vertices
        dist[src] = 0
        dq = deque([src])
        while dq:
            u = dq.popleft()
            for w in _bits(self._nbr[u]):
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    dq.append(w)
        return dist

    def components(self) -> list[list[int]]:
        seen = [False] * self.n_vertices
        out = []
        for s in range(self.n_vertices):
            if seen[s]:
                continue
            comp = [v for v, d in enumerate(self._bfs(s)) if d >= 0]
            for v in comp:
                seen[v] = True
            out.append(comp)
        return out

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def diameter(self) -> float:
        """Largest distance in the 2-section; ``inf`` if disconnected."""
        if self.n_vertices == 0:
            return 0
        best = 0
        for s in range(self.n_vertices):
            dist = self._bfs(s)
            if min(dist) < 0:
                return float("inf")
            best = max(best, max(dist))
        return best

    def has_walk(self, v: int, w: int, s: int) -> bool:
        """Is there a walk of exactly s steps from v to w (each step within one edge)?"""
        self._check(v)
        self._check(w)
        frontier = 1 << v
        for _ in range(s):
            nxt = 0
            for u in _bits(frontier):
                nxt |= self._nbr[u]
            frontier = nxt
        return bool(frontier >> w & 1)

    # -- dump format ---------------------------------------------------------

    def to_edge_dump(self, base_size: int | None = None) -> str:
        from .bases import format_edge_dump

        k = base_size if base_size is not None else (self.uniformity() or 0)
        return format_edge_dump(self.n_vertices, k, self.edges)

    @classmethod
    def from_edge_dump(cls, text: str) -> "Hypergraph":
        from .bases import parse_edge_dump

        n, _, edges = parse_edge_dump(text)
        return cls(n, edges)


# -- gossip numbers ------------------------------------------------------------


def gossip_witness(H: Hypergraph, n: int, vertex_transitive: bool = False) -> tuple[int, tuple[int, ...] | None]:
    """``(g_n, S)`` where S is the first n-set (lex order) attaining the minimum.

    With ``vertex_transitive`` the search only visits sets containing vertex 0.
    """
    if n < 1:
        raise ValueError("gossip numbers need n >= 1")
    N = H.n_vertices
    if n > N:
        return 0, None
    nbr = H._nbr
    best = [N + 1, None]

    def rec(start: int, chosen: list[int], mask: int) -> bool:
        if len(chosen) == n:
            c = mask.bit_count()
            if c < best[0]:
                best[0], best[1] = c, tuple(chosen)
            return c == 0
        for v in range(start, N - (n - len(chosen)) + 1):
            m = mask & nbr[v]
            chosen.append(v)
            done = rec(v + 1, chosen, m)
            chosen.pop()
            if done:
                return True
        return False

    if vertex_transitive:
        rec(1, [0], nbr[0])
    else:
        rec(0, [], (1 << N) - 1)
    return best[0], best[1]


def gossip_number(H: Hypergraph, n: int, vertex_transitive: bool = False) -> int:
    return gossip_witness(H, n, vertex_transitive)[0]


def gossip_numbers(H: Hypergraph, n_max: int, vertex_transitive: bool = False) -> list[int]:
    return [gossip_number(H, i, vertex_transitive) for i in range(1, n_max + 1)]


# -- flag-spanning tours -----------------------------------------------------------


@dataclass(frozen=True)
class FlagTourParity:
    has_tour: bool
    n_vertices: int
    odd_vertex: int | None = None
    reason: str = ""


def has_flag_spanning_tour(H: Hypergraph) -> FlagTourParity:
    """Parity test: a tour exists iff the vertex count and every degree are even."""
    if not H.edges:
        raise EmptyHypergraph("flag-spanning tours need at least one edge")
    if H.n_vertices % 2:
        return FlagTourParity(False, H.n_vertices, None, "odd number of vertices")
    for v, d in enumerate(H.degrees()):
        if d % 2:
            return FlagTourParity(False, H.n_vertices, v, f"vertex {v} has odd degree {d}")
    return FlagTourParity(True, H.n_vertices, None, "all degrees even")


# -- arcs and rays ---------------------------------------------------------------


@dataclass(frozen=True)
class SArc:
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, ...], ...]

    @property
    def s(self) -> int:
        return len(self.edges)

    def is_valid(self) -> bool:
        vs, es = self.vertices, self.edges
        if len(vs) != len(es) + 1:
            return False
        for i, e in enumerate(es):
            if vs[i] not in e or vs[i + 1] not in e or vs[i] == vs[i + 1]:
                return False
        if any(vs[i] == vs[i + 2] for i in range(len(vs) - 2)):
            return False
        return all(es[i] != es[i + 1] for i in range(len(es) - 1))


@dataclass(frozen=True)
class Ray:
    edge: tuple[int, ...]
    ordering: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if sorted(self.ordering) != sorted(self.edge):
            raise ValueError("ray ordering must list the edge's vertices")


def enumerate_s_arcs(H: Hypergraph, s: int, cap: int = 1_000_000) -> list[SArc]:
    """All s-arcs, in lexicographic order of (v0, E1, v1, ...)."""
    if s < 1:
        raise ValueError("s-arcs need s >= 1")
    out: list[SArc] = []

    def rec(vs: list[int], es: list[int]):
        if len(es) == s:
            out.append(SArc(tuple(vs), tuple(H.edges[i] for i in es)))
            if len(out) > cap:
                raise BudgetExceeded(f"more than {cap} s-arcs")
            return
        u = vs[-1]
        for i in H.incidence[u]:
            if es and es[-1] == i:
                continue
            for w in H.edges[i]:
                if w == u or (len(vs) >= 2 and w == vs[-2]):
                    continue
                vs.append(w)
                es.append(i)
                rec(vs, es)
                vs.pop()
                es.pop()

    for v in range(H.n_vertices):
        rec([v], [])
    return out


def rays(H: Hypergraph, cap: int = 1_000_000) -> list[Ray]:
    out = []
    for e in H.edges:
        for perm in itertools.permutations(e):
            out.append(Ray(e, perm))
            if len(out) > cap:
                raise BudgetExceeded(f"more than {cap} rays")
    return out


def random_hypergraph(n: int, m: int, k: int | Sequence[int], rng) -> Hypergraph:
    """m random edges on n vertices; k is an edge size or a list of sizes to choose from."""
    sizes = [k] if isinstance(k, int) else list(k)
    edges = []
    for _ in range(m):
        r = rng.choice(sizes)
        edges.append(rng.sample(range(n), min(r, n)))
    return Hypergraph(n, edges)
