"""Exact base sizes and enumeration of all minimum bases.

Every search only extends a partial tuple by points that strictly shrink the
current pointwise stabilizer: any ordering of a minimum base is irredundant,
so nothing is lost.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .errors import BaseSizeTooSmall, BudgetExceeded, ParseError, PointOutOfRange
from .group import PermGroup


@dataclass(frozen=True)
class BaseSearchConfig:
    max_base_size: int = 16
    max_edges: int = 5_000_000
    time_budget: float | None = None

    def __post_init__(self):
        if self.max_base_size < 1 or self.max_edges < 1:
            raise ValueError("search caps must be positive")
        if self.time_budget is not None and self.time_budget <= 0:
            raise ValueError("time budget must be positive")


DEFAULT_CONFIG = BaseSearchConfig()


@dataclass(frozen=True)
class BaseSet:
    """An ordered list of distinct points; every proper prefix has a non-trivial stabilizer."""

    points: tuple[int, ...]

    def __iter__(self):
        return iter(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def as_set(self) -> frozenset[int]:
        return frozenset(self.points)


class _Clock:
    def __init__(self, cfg: BaseSearchConfig):
        self.deadline = None if cfg.time_budget is None else time.monotonic() + cfg.time_budget

    def tick(self) -> None:
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise BudgetExceeded("time budget exhausted")


def _check_points(G: PermGroup, pts: Iterable[int]) -> list[int]:
    pts = list(pts)
    for a in pts:
        if not 0 <= a < G.degree:
            raise PointOutOfRange(f"point {a} outside range({G.degree})")
    return pts


def is_base(G: PermGroup, S: Iterable[int]) -> bool:
    return G.pointwise_stabilizer(_check_points(G, S)).is_trivial()


def _lower_bound(order: int, degree: int) -> int:
    """Smallest t with degree**t >= order."""
    if order == 1:
        return 0
    if degree <= 1:
        return 1
    t, acc = 0, 1
    while acc < order:
        acc *= degree
        t += 1
    return t


def _orbit_sizes(H: PermGroup) -> dict[int, int]:
    sizes = {}
    for orb in H.orbits():
        for x in orb:
            sizes[x] = len(orb)
    return sizes


def _find_base(H: PermGroup, k: int, clock: _Clock) -> list[int] | None:
    """A base of H with exactly k points (any order), or None.

    Only orbit representatives are tried at each level, since the image of a
    base under H is again a base.
    """
    if H.is_trivial():
        return [] if k >= 0 else None
    if k == 0:
        return None
    clock.tick()
    orbits = [o for o in H.orbits() if len(o) > 1]
    m = max(len(o) for o in orbits)
    if H.order > m**k:
        return None
    if k == 1:
        for o in orbits:
            if len(o) == H.order:
                return [o[0]]
        return None
    # big orbits first: they shrink the stabilizer the most
    for o in sorted(orbits, key=lambda o: (-len(o), o[0])):
        K = H.pointwise_stabilizer([o[0]])
        rest = _find_base(K, k - 1, clock)
        if rest is not None:
            return [o[0]] + rest
    return None


def base_size(G: PermGroup, cfg: BaseSearchConfig = DEFAULT_CONFIG) -> int:
    """Exact minimum base size, by iterative deepening from the counting bound."""
    if G.is_trivial():
        return 0
    clock = _Clock(cfg)
    t = max(1, _lower_bound(G.order, G.degree))
    while t <= cfg.max_base_size:
        if _find_base(G, t, clock) is not None:
            return t
        t += 1
    raise BudgetExceeded(f"no base of size <= {cfg.max_base_size}")


def find_minimum_base(G: PermGroup, cfg: BaseSearchConfig = DEFAULT_CONFIG) -> BaseSet:
    b = base_size(G, cfg)
    return BaseSet(tuple(_find_base(G, b, _Clock(cfg))))


def _bases_after(H: PermGroup, k: int, last: int, prefix: list[int], out: list, clock: _Clock, cap: int) -> None:
    """Append every k-set of points > last that is a base of H (prefixed)."""
    clock.tick()
    if H.is_trivial():
        if k == 0:
            out.append(tuple(prefix))
        return
    if k == 0:
        return
    sizes = _orbit_sizes(H)
    cands = [x for x in range(last + 1, H.degree) if sizes[x] > 1]
    if not cands:
        return
    if H.order > max(sizes[x] for x in cands) ** k:
        return
    if k == 1:
        for x in cands:
            if sizes[x] == H.order:
                out.append(tuple(prefix + [x]))
                if len(out) > cap:
                    raise BudgetExceeded(f"more than {cap} edges")
        return
    for x in cands:
        K = H.pointwise_stabilizer([x])
        _bases_after(K, k - 1, x, prefix + [x], out, clock, cap)


def _edges_through(G: PermGroup, r: int, b: int, clock: _Clock, cap: int) -> list[tuple[int, ...]]:
    """All minimum bases containing r (b = base size)."""
    H = G.pointwise_stabilizer([r])
    found: list[tuple[int, ...]] = []
    # points may lie on either side of r, so search the other points in
    # increasing order and add r afterwards
    _bases_after(H, b - 1, -1, [], found, clock, cap)
    return [tuple(sorted(t + (r,))) for t in found if r not in t]


def minimal_bases(G: PermGroup, cfg: BaseSearchConfig = DEFAULT_CONFIG, b: int | None = None) -> list[tuple[int, ...]]:
    """Every base of size b(G), as sorted tuples in lexicographic order."""
    if b is None:
        b = base_size(G, cfg)
    if b < 2:
        raise BaseSizeTooSmall(f"base size {b} < 2: no Saxl hypergraph edges")
    clock = _Clock(cfg)
    edges: set[tuple[int, ...]] = set()
    for orb in G.orbits():
        r = orb[0]
        through = _edges_through(G, r, b, clock, cfg.max_edges)
        if not through:
            continue
        trans = G.orbit_transversal(r)
        for alpha in orb:
            u = trans[alpha]
            for e in through:
                edges.add(tuple(sorted(u[x] for x in e)))
            if len(edges) > cfg.max_edges:
                raise BudgetExceeded(f"more than {cfg.max_edges} edges")
            clock.tick()
    return sorted(edges)


def is_adjacent(G: PermGroup, a: int, c: int, cfg: BaseSearchConfig = DEFAULT_CONFIG, b: int | None = None) -> bool:
    """Do a and c lie together in some minimum base?"""
    _check_points(G, (a, c))
    if a == c:
        raise ValueError("adjacency needs two distinct points")
    if b is None:
        b = base_size(G, cfg)
    if b < 2:
        raise BaseSizeTooSmall(f"base size {b} < 2")
    K = G.pointwise_stabilizer([a, c])
    return _find_base(K, b - 2, _Clock(cfg)) is not None


def extend_to_minimal_base(G: PermGroup, partial: Sequence[int], cfg: BaseSearchConfig = DEFAULT_CONFIG) -> BaseSet | None:
    """A minimum base of G containing ``partial`` (partial points first), or None."""
    partial = _check_points(G, partial)
    if len(set(partial)) != len(partial):
        raise ValueError("partial base has repeated points")
    b = base_size(G, cfg)
    if len(partial) > b:
        return None
    K = G.pointwise_stabilizer(partial)
    rest = _find_base(K, b - len(partial), _Clock(cfg))
    if rest is None:
        return None
    return BaseSet(tuple(partial) + tuple(rest))


def ordered_bases(H: PermGroup, k: int, cfg: BaseSearchConfig = DEFAULT_CONFIG) -> list[tuple[int, ...]]:
    """All ordered k-tuples that are bases of H (each prefix strictly reducing)."""
    clock = _Clock(cfg)
    out = []

    def rec(K: PermGroup, prefix: list[int]):
        clock.tick()
        if K.is_trivial():
            if len(prefix) == k:
                out.append(tuple(prefix))
                if len(out) > cfg.max_edges:
                    raise BudgetExceeded("too many ordered bases")
            return
        left = k - len(prefix)
        if left == 0:
            return
        sizes = _orbit_sizes(K)
        if K.order > max(sizes.values()) ** left:
            return
        for x in range(K.degree):
            if sizes[x] == 1:
                continue
            if left == 1:
                if sizes[x] == K.order:
                    out.append(tuple(prefix + [x]))
                continue
            rec(K.pointwise_stabilizer([x]), prefix + [x])

    rec(H, [])
    return out


def image_of_tuple(g: tuple, t: Sequence[int]) -> tuple[int, ...]:
    return tuple(g[x] for x in t)


# -- edge dump format --------------------------------------------------------


def format_edge_dump(degree: int, b: int, edges: Iterable[Sequence[int]]) -> str:
    edges = sorted(tuple(sorted(e)) for e in edges)
    lines = [f"# degree {degree}, base_size {b}, edges {len(edges)}"]
    lines += [",".join(str(x + 1) for x in e) for e in edges]
    return "\n".join(lines) + "\n"


def write_edge_dump(path, degree: int, b: int, edges) -> None:
    Path(path).write_text(format_edge_dump(degree, b, edges), encoding="utf-8")


def parse_edge_dump(text: str) -> tuple[int, int | None, list[tuple[int, ...]]]:
    import re

    degree = b = None
    declared = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            m = re.match(r"#\s*degree\s+(\d+)\s*,\s*base_size\s+(\d+)\s*,\s*edges\s+(\d+)", line)
            if m and degree is None:
                degree, b, declared = map(int, m.groups())
            continue
        try:
            e = tuple(sorted(int(x) - 1 for x in line.split(",")))
        except ValueError:
            raise ParseError(f"line {lineno}: bad edge {line!r}") from None
        edges.append(e)
    if degree is None:
        raise ParseError("missing '# degree N, base_size B, edges E' header")
    if declared is not None and declared != len(edges):
        raise ParseError(f"header declares {declared} edges, found {len(edges)}")
    return degree, b, edges


def read_edge_dump(path) -> tuple[int, int | None, list[tuple[int, ...]]]:
    return parse_edge_dump(Path(path).read_text(encoding="utf-8"))
