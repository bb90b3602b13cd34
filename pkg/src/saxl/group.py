"""Permutation groups backed by a deterministic Schreier-Sims stabilizer chain."""

from __future__ import annotations

from math import prod
from random import Random
from typing import Iterable, Iterator, Sequence

from .errors import KTooLarge, MixedDegree, NotTransitive, PointOutOfRange
from .perm import Permutation, _inv, _mul


class _Level:
    """One level of a stabilizer chain: base point, strong generators, transversal."""

    __slots__ = ("point", "gens", "orbit", "trans", "_itrans")

    def __init__(self, point: int, gens: list | None = None):
        self.point = point
        self.gens = list(gens or [])
        self.orbit = [point]
        self.trans = {point: None}  # None stands for the identity
        self._itrans = {}

    def extend(self, first_new_gen: int = 0, n: int | None = None) -> None:
        """Close the orbit under the generators.

        Old orbit points only need the generators from ``first_new_gen`` on;
        points added here see every generator.
        """
        orbit, trans, gens = self.orbit, self.trans, self.gens
        old = len(orbit)
        i = 0
        while i < len(orbit):
            pt = orbit[i]
            use = gens[first_new_gen:] if i < old else gens
            u = trans[pt]
            for s in use:
                img = s[pt]
                if img not in trans:
                    trans[img] = s if u is None else _mul(u, s)
                    orbit.append(img)
            i += 1

    def rep(self, pt: int, n: int) -> tuple:
        u = self.trans[pt]
        return tuple(range(n)) if u is None else u

    def inv_rep(self, pt: int):
        u = self.trans[pt]
        if u is None:
            return None
        v = self._itrans.get(pt)
        if v is None:
            v = self._itrans[pt] = _inv(u)
        return v


class StabChain:
    """Base, strong generators and transversals, level by level."""

    def __init__(self, degree: int, levels: list[_Level] | None = None):
        self.degree = degree
        self.levels = levels or []

    @property
    def base(self) -> list[int]:
        return [lv.point for lv in self.levels]

    def order(self) -> int:
        return prod(len(lv.orbit) for lv in self.levels)

    def sift(self, g: tuple, start: int = 0) -> tuple[tuple, int]:
        levels = self.levels
        for i in range(start, len(levels)):
            lv = levels[i]
            x = g[lv.point]
            if x not in lv.trans:
                return g, i
            v = lv.inv_rep(x)
            if v is not None:
                g = _mul(g, v)
        return g, len(levels)

    def tail(self, k: int) -> "StabChain":
        return StabChain(self.degree, self.levels[k:])

    def strong_generators(self) -> list[tuple]:
        return list(self.levels[0].gens) if self.levels else []


def _is_id(g: tuple) -> bool:
    return all(i == x for i, x in enumerate(g))


def _first_moved(g: tuple) -> int:
    for i, x in enumerate(g):
        if i != x:
            return i
    return -1


def schreier_sims(
    gens: Sequence[tuple],
    degree: int,
    base_prefix: Sequence[int] = (),
    known_order: int | None = None,
) -> StabChain:
    """Deterministic Schreier-Sims.

    ``base_prefix`` points are forced to the front of the base (they may be
    redundant). When ``known_order`` is the true group order the run stops as
    soon as the product of basic orbit lengths reaches it.
    """
    seen = set()
    ugens = []
    for g in gens:
        if g not in seen and not _is_id(g):
            seen.add(g)
            ugens.append(g)
    levels = [_Level(b) for b in base_prefix]
    base = list(base_prefix)
    for g in ugens:
        if all(g[b] == b for b in base):
            b = _first_moved(g)
            base.append(b)
            levels.append(_Level(b))
    for i, lv in enumerate(levels):
        fixed = base[:i]
        lv.gens = [g for g in ugens if all(g[b] == b for b in fixed)]
        lv.extend()
    chain = StabChain(degree, levels)
    if known_order is not None and chain.order() == known_order:
        return chain

    tested = [set() for _ in levels]
    i = len(levels) - 1
    while i >= 0:
        lv = levels[i]
        found = None
        for beta in lv.orbit:
            u = lv.trans[beta]
            for k, s in enumerate(lv.gens):
                if (beta, k) in tested[i]:
                    continue
                tested[i].add((beta, k))
                us = s if u is None else _mul(u, s)
                gamma = s[beta]
                v = lv.inv_rep(gamma)
                h = us if v is None else _mul(us, v)
                if _is_id(h):
                    continue
                res, j = chain.sift(h, i + 1)
                if not _is_id(res):
                    found = (res, j)
                    break
            if found:
                break
        if found is None:
            i -= 1
            continue
        res, j = found
        if j == len(levels):
            levels.append(_Level(_first_moved(res)))
            tested.append(set())
        for lvl in range(i + 1, j + 1):
            target = levels[lvl]
            target.gens.append(res)
            target.extend(len(target.gens) - 1)
        if known_order is not None and chain.order() == known_order:
            break
        i = j
    return chain


class PermGroup:
    """A permutation group of a fixed degree with a verified stabilizer chain.

    Instances are immutable after construction.
    """

    def __init__(self, degree: int, generators: Sequence[Permutation], chain: StabChain):
        self.degree = degree
        self.generators = tuple(generators)
        self.chain = chain
        self._order = chain.order()
        self._orbits = None

    @classmethod
    def from_generators(cls, gens: Iterable[Permutation], degree: int) -> "PermGroup":
        return group_from_generators(gens, degree)

    # -- basic invariants --------------------------------------------------

    @property
    def order(self) -> int:
        return self._order

    @property
    def base(self) -> list[int]:
        return self.chain.base

    def is_trivial(self) -> bool:
        return self._order == 1

    def strong_generators(self) -> list[Permutation]:
        return [Permutation(g, check=False) for g in self.chain.strong_generators()]

    def transversal_sizes(self) -> list[int]:
        return [len(lv.orbit) for lv in self.chain.levels]

    def _raw_gens(self) -> list[tuple]:
        return [g.images for g in self.generators]

    def _check_point(self, a: int) -> None:
        if not 0 <= a < self.degree:
            raise PointOutOfRange(f"point {a} outside range({self.degree})")

    # -- membership --------------------------------------------------------

    def contains(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            raise MixedDegree(f"permutation of degree {p.degree} vs group of degree {self.degree}")
        res, _ = self.chain.sift(p.images)
        return _is_id(res)

    __contains__ = contains

    def elements(self) -> Iterator[Permutation]:
        """Every element exactly once, via the transversals."""
        levels = self.chain.levels
        n = self.degree

        def rec(k: int, acc: tuple):
            if k < 0:
                yield Permutation(acc, check=False)
                return
            lv = levels[k]
            for pt in lv.orbit:
                u = lv.trans[pt]
                yield from rec(k - 1, acc if u is None else _mul(acc, u))

        yield from rec(len(levels) - 1, tuple(range(n)))

    def random_element(self, rng: Random) -> Permutation:
        g = tuple(range(self.degree))
        for lv in reversed(self.chain.levels):
            u = lv.trans[rng.choice(lv.orbit)]
            if u is not None:
                g = _mul(g, u)
        return Permutation(g, check=False)

    # -- orbits --------------------------------------------------------------

    def orbit(self, a: int) -> list[int]:
        """The orbit of ``a`` in breadth-first order."""
        self._check_point(a)
        gens = self._raw_gens()
        orb = [a]
        seen = {a}
        i = 0
        while i < len(orb):
            x = orb[i]
            for g in gens:
                y = g[x]
                if y not in seen:
                    seen.add(y)
                    orb.append(y)
            i += 1
        return orb

    def orbit_transversal(self, a: int) -> dict[int, tuple]:
        """Map each point of the orbit of ``a`` to a raw element sending ``a`` there."""
        self._check_point(a)
        gens = self._raw_gens()
        ident = tuple(range(self.degree))
        trans = {a: ident}
        queue = [a]
        i = 0
        while i < len(queue):
            x = queue[i]
            u = trans[x]
            for g in gens:
                y = g[x]
                if y not in trans:
                    trans[y] = _mul(u, g)
                    queue.append(y)
            i += 1
        return trans

    def orbits(self) -> list[list[int]]:
        """All orbits, each sorted, ordered by smallest point."""
        if self._orbits is None:
            gens = self._raw_gens()
            parent = list(range(self.degree))

            def find(x):
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            for g in gens:
                for x, y in enumerate(g):
                    rx, ry = find(x), find(y)
                    if rx != ry:
                        parent[max(rx, ry)] = min(rx, ry)
            groups: dict[int, list[int]] = {}
            for x in range(self.degree):
                groups.setdefault(find(x), []).append(x)
            self._orbits = [groups[k] for k in sorted(groups)]
        return [list(o) for o in self._orbits]

    # -- stabilizers -----------------------------------------------------------

    def _point_stabilizer(self, a: int) -> "PermGroup":
        levels = self.chain.levels
        if not levels:
            return self
        first = levels[0]
        if first.point == a:
            return _from_chain(self.degree, self.chain.tail(1))
        if a in first.trans:
            # G_a = (G_b)^u where u maps b to a
            u = first.rep(a, self.degree)
            return _from_chain(self.degree, _conjugate_chain(self.chain.tail(1), u))
        if all(g[a] == a for g in self.chain.strong_generators()):
            return self
        chain = schreier_sims(self.chain.strong_generators(), self.degree, (a,), self._order)
        return _from_chain(self.degree, chain.tail(1))

    def pointwise_stabilizer(self, points: Iterable[int]) -> "PermGroup":
        """The subgroup fixing every point of ``points``."""
        pts = list(dict.fromkeys(points))
        for a in pts:
            self._check_point(a)
        H = self
        for a in pts:
            if H.is_trivial():
                break
            H = H._point_stabilizer(a)
        return H

    stabilizer = pointwise_stabilizer

    # -- transitivity and friends ------------------------------------------

    def is_transitive(self) -> bool:
        return self.degree <= 1 or len(self.orbit(0)) == self.degree

    def is_k_transitive(self, k: int) -> bool:
        if k > self.degree:
            raise KTooLarge(f"k={k} exceeds degree {self.degree}")
        if k < 1:
            return True
        H = self
        for i in range(k):
            # H fixes 0..i-1 and must be transitive on the rest
            if len(H.orbit(i)) != self.degree - i:
                return False
            H = H._point_stabilizer(i)
        return True

    def is_semiregular(self) -> bool:
        return all(len(orb) == self._order for orb in self.orbits())

    def is_regular(self) -> bool:
        return self.is_transitive() and self._order == self.degree

    def is_frobenius(self) -> bool:
        if not self.is_transitive() or self.is_semiregular():
            return False
        H = self._point_stabilizer(0)
        return all(len(orb) == H.order for orb in H.orbits() if orb != [0])

    def suborbits(self, a: int = 0) -> list[list[int]]:
        """Orbits of the stabilizer of ``a`` on the other points."""
        self._check_point(a)
        if not self.is_transitive():
            raise NotTransitive("suborbits need a transitive group")
        H = self.pointwise_stabilizer([a])
        return [o for o in H.orbits() if o != [a]]

    def suborbit_representatives(self, a: int = 0) -> list[int]:
        return [o[0] for o in self.suborbits(a)]

    def minimal_block(self, a: int, b: int) -> list[int]:
        """The smallest block of imprimitivity containing ``a`` and ``b``."""
        gens = self._raw_gens()
        parent = list(range(self.degree))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x, y):
            rx, ry = find(x), find(y)
            if rx == ry:
                return None
            parent[max(rx, ry)] = min(rx, ry)
            return rx, ry

        queue = []
        if union(a, b):
            queue.append((a, b))
        while queue:
            x, y = queue.pop()
            for g in gens:
                merged = union(g[x], g[y])
                if merged:
                    queue.append((g[x], g[y]))
        root = find(a)
        return [x for x in range(self.degree) if find(x) == root]

    def is_primitive(self) -> bool:
        if not self.is_transitive():
            return False
        if self.degree <= 2:
            return True
        for b in self.suborbit_representatives(0):
            if len(self.minimal_block(0, b)) != self.degree:
                return False
        return True

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, order={self._order})"


def _from_chain(degree: int, chain: StabChain) -> PermGroup:
    gens = [Permutation(g, check=False) for g in chain.strong_generators()]
    return PermGroup(degree, gens, chain)


def _conjugate_chain(chain: StabChain, u: tuple) -> StabChain:
    """The chain of ``u^-1 H u``, given the chain of ``H``."""
    ui = _inv(u)
    levels = []
    cache = {}

    def conj(g):
        key = id(g)
        r = cache.get(key)
        if r is None:
            # x -> x^(u^-1 g u)
            r = cache[key] = _mul(_mul(ui, g), u)
        return r

    for lv in chain.levels:
        new = _Level(u[lv.point])
        new.gens = [conj(g) for g in lv.gens]
        new.orbit = [u[x] for x in lv.orbit]
        new.trans = {u[x]: (None if t is None else conj(t)) for x, t in lv.trans.items()}
        levels.append(new)
    return StabChain(chain.degree, levels)


def group_from_generators(gens: Iterable[Permutation], degree: int) -> PermGroup:
    gens = list(gens)
    if degree < 1:
        raise ValueError("degree must be at least 1")
    for g in gens:
        if g.degree != degree:
            raise MixedDegree(f"generator of degree {g.degree} in a group of degree {degree}")
    chain = schreier_sims([g.images for g in gens], degree)
    return PermGroup(degree, gens, chain)


def order(G: PermGroup) -> int:
    return G.order


def contains(G: PermGroup, p: Permutation) -> bool:
    return G.contains(p)


def orbit(G: PermGroup, a: int) -> list[int]:
    return G.orbit(a)


def pointwise_stabilizer(G: PermGroup, S: Iterable[int]) -> PermGroup:
    return G.pointwise_stabilizer(S)


def suborbit_representatives(G: PermGroup, a: int) -> list[int]:
    return G.suborbit_representatives(a)
