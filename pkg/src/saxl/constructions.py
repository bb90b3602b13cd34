"""Builders for the concrete group actions, and a small named catalog."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from itertools import combinations
from math import factorial, gcd
from typing import Callable, Sequence

from .errors import (
    DegreeCapExceeded,
    DegreeTooSmall,
    NotDivisor,
    NotPrimePower,
    NotSubgroup,
    UnknownName,
)
from .field import Field, ProjectiveLine, prime_power
from .group import PermGroup, group_from_generators, schreier_sims
from .perm import Permutation, _mul

DEFAULT_MAX_DEGREE = 10000


def max_degree() -> int:
    """Degree cap; the ``SAXL_MAX_DEGREE`` environment variable overrides it."""
    env = os.environ.get("SAXL_MAX_DEGREE")
    return int(env) if env else DEFAULT_MAX_DEGREE


def _check_cap(degree: int, cap: int | None) -> None:
    cap = max_degree() if cap is None else cap
    if degree > cap:
        raise DegreeCapExceeded(f"degree {degree} exceeds cap {cap}")


def _perm_from_map(n: int, f: Callable[[int], int]) -> Permutation:
    return Permutation([f(i) for i in range(n)])


@dataclass(frozen=True)
class GroupSpec:
    """A parsed group description; ``params`` depend on ``kind``."""

    kind: str
    params: tuple = ()
    text: str = ""
    notes: tuple = field(default=(), compare=False)

    def __str__(self) -> str:
        return self.text or f"{self.kind}{self.params}"


KINDS = (
    "SymNat",
    "AltNat",
    "PSL2",
    "PGL2",
    "PGammaL2",
    "AGL1Sub",
    "AffDeletedModule",
    "CosetAction",
    "WreathProduct",
    "CatalogName",
    "Trivial",
    "Subsets",
    "GeneratorFile",
)


# -- natural actions -------------------------------------------------------


def natural_group(kind: str, n: int) -> PermGroup:
    """Sym(n) or Alt(n) on n points."""
    kind = {"S": "Sym", "A": "Alt", "SymNat": "Sym", "AltNat": "Alt"}.get(kind, kind)
    if kind == "Sym":
        if n < 1:
            raise DegreeTooSmall("Sym(n) needs n >= 1")
        gens = []
        if n >= 2:
            gens.append(Permutation.from_cycles([(0, 1)], n))
        if n >= 3:
            gens.append(Permutation.from_cycles([tuple(range(n))], n))
        return group_from_generators(gens, n)
    if kind == "Alt":
        if n < 3:
            raise DegreeTooSmall("Alt(n) needs n >= 3")
        gens = [Permutation.from_cycles([(i, i + 1, i + 2)], n) for i in range(n - 2)]
        return group_from_generators(gens, n)
    raise ValueError(f"unknown natural kind {kind!r}")


def trivial_group(n: int) -> PermGroup:
    return group_from_generators([], n)


# -- projective line ---------------------------------------------------------


def projective_order(kind: str, q: int) -> int:
    p, e = prime_power(q)
    base = q * (q * q - 1)
    if kind == "PSL":
        return base // gcd(2, q - 1)
    if kind == "PGL":
        return base
    if kind == "PGammaL":
        return e * base
    raise ValueError(kind)


def projective_group(kind: str, q: int) -> PermGroup:
    """PSL(2,q), PGL(2,q) or PGammaL(2,q) on the q+1 points of the projective line.

    PSL(2,q) for even q is the same group as PGL(2,q).
    """
    kind = {"PSL2": "PSL", "PGL2": "PGL", "PGammaL2": "PGammaL"}.get(kind, kind)
    pe = prime_power(q)
    if pe is None:
        raise NotPrimePower(f"{q} is not a prime power")
    if q < 3:
        raise DegreeTooSmall("projective groups need q >= 3")
    p, e = pe
    F = Field(p, e)
    line = ProjectiveLine(F)
    n = q + 1
    zeta = F.primitive_element().index
    s = 2 if (kind == "PSL" and q % 2 == 1) else 1
    gens = [
        _perm_from_map(n, line.mobius(1, 1, 0, 1)),
        _perm_from_map(n, line.mobius(F.pow(zeta, s), 0, 0, 1)),
    ]
    if kind == "PSL" and q % 2 == 1:
        gens.append(_perm_from_map(n, line.mobius(0, F.neg(1), 1, 0)))
    else:
        gens.append(_perm_from_map(n, line.mobius(0, 1, 1, 0)))
    if kind == "PGammaL" and e > 1:
        gens.append(_perm_from_map(n, line.field_map(F.frobenius)))
    elif kind not in ("PSL", "PGL", "PGammaL"):
        raise ValueError(f"unknown projective kind {kind!r}")
    return group_from_generators(gens, n)


def m10_group() -> PermGroup:
    """PSL(2,9).2 on 10 points, extended by x -> zeta * x^3 (neither PGL nor PSigmaL)."""
    F = Field(3, 2)
    line = ProjectiveLine(F)
    zeta = F.primitive_element().index
    gens = list(projective_group("PSL", 9).generators)
    gens.append(_perm_from_map(10, line.field_map(lambda x: F.mul(zeta, F.pow(x, 3)))))
    return group_from_generators(gens, 10)


# -- affine groups ---------------------------------------------------------


def agl1_subgroup(q: int, d: int) -> PermGroup:
    """<x -> x+1, x -> zeta^((q-1)/d) x> of order q*d on GF(q)."""
    pe = prime_power(q)
    if pe is None:
        raise NotPrimePower(f"{q} is not a prime power")
    if d < 1 or (q - 1) % d:
        raise NotDivisor(f"{d} does not divide {q - 1}")
    F = Field(*pe)
    zeta = F.primitive_element().index
    c = F.pow(zeta, (q - 1) // d)
    gens = []
    one = 1
    gens.append(_perm_from_map(q, lambda x: F.add(x, one)))
    if d > 1:
        gens.append(_perm_from_map(q, lambda x: F.mul(c, x)))
    return group_from_generators(gens, q)


def agammal1_group(q: int) -> PermGroup:
    """AGammaL(1,q) on GF(q)."""
    p, e = prime_power(q)
    F = Field(p, e)
    zeta = F.primitive_element().index
    gens = [
        _perm_from_map(q, lambda x: F.add(x, 1)),
        _perm_from_map(q, lambda x: F.mul(zeta, x)),
    ]
    if e > 1:
        gens.append(_perm_from_map(q, F.frobenius))
    return group_from_generators(gens, q)


class DeletedModule:
    """Zero-sum vectors of GF(q)^n with deterministic vertex numbering.

    Coordinates 0..n-2 are free and the last is forced by the zero sum; the
    index is the base-q integer of the free coordinates (coordinate 0 least
    significant), each digit being a field index.
    """

    def __init__(self, q: int, n: int):
        pe = prime_power(q)
        if pe is None:
            raise NotPrimePower(f"{q} is not a prime power")
        self.q = q
        self.n = n
        self.F = Field(*pe)
        self.size = q ** (n - 1)

    def vector(self, index: int) -> list[int]:
        F, q = self.F, self.q
        v = []
        total = 0
        for _ in range(self.n - 1):
            d = index % q
            index //= q
            v.append(d)
            total = F.add(total, d)
        v.append(F.neg(total))
        return v

    def index(self, vector: Sequence) -> int:
        F = self.F
        vec = [F.element(x).index if not isinstance(x, int) else x for x in vector]
        if len(vec) != self.n:
            raise ValueError(f"expected {self.n} coordinates")
        total = 0
        for x in vec:
            total = F.add(total, x)
        if total != 0:
            raise ValueError("vector is not in the zero-sum module")
        out = 0
        for d in reversed(vec[:-1]):
            out = out * self.q + d
        return out

    def from_ints(self, coords: Sequence[int]) -> int:
        """Index of a vector given by integers read in the prime field."""
        return self.index([c % self.F.p for c in coords])

    def translation(self, vec: Sequence[int]) -> Permutation:
        F = self.F
        return Permutation(
            self.index([F.add(a, b) for a, b in zip(self.vector(i), vec)]) for i in range(self.size)
        )

    def coordinate_permutation(self, sigma: Sequence[int]) -> Permutation:
        """Move coordinate j to position sigma[j]."""
        out = []
        for i in range(self.size):
            v = self.vector(i)
            w = [0] * self.n
            for j, x in enumerate(v):
                w[sigma[j]] = x
            out.append(self.index(w))
        return Permutation(out)

    def spanning_translations(self) -> list[Permutation]:
        F, n = self.F, self.n
        gens = []
        for j in range(n - 1):
            for k in range(F.e):
                c = F.p**k  # x^k, a GF(p)-basis of GF(q)
                vec = [0] * n
                vec[j] = c
                vec[n - 1] = F.neg(c)
                gens.append(self.translation(vec))
        return gens

    def group(self, coordinate_gens: Sequence[Sequence[int]]) -> PermGroup:
        gens = self.spanning_translations()
        gens += [self.coordinate_permutation(s) for s in coordinate_gens]
        return group_from_generators(gens, self.size)


def affine_deleted_module(q: int, k: int, allow_even: bool = False, cap: int | None = None) -> PermGroup:
    """The deleted permutation module of Sym(n), n = q^k - 1, extended by Sym(n)."""
    pe = prime_power(q)
    if pe is None:
        raise NotPrimePower(f"{q} is not a prime power")
    if q % 2 == 0 and not allow_even:
        raise ValueError("q must be odd (pass allow_even=True to override)")
    if k < 1:
        raise ValueError("k must be at least 1")
    n = q**k - 1
    _check_cap(q ** (n - 1), cap)
    module = DeletedModule(q, n)
    coords = []
    if n >= 2:
        coords.append([1, 0] + list(range(2, n)))
    if n >= 3:
        coords.append([(j + 1) % n for j in range(n)])
    return module.group(coords)


def affine_deleted_module_order(q: int, k: int) -> int:
    n = q**k - 1
    return q ** (n - 1) * factorial(n)


def affine64_dihedral18() -> PermGroup:
    """2^6:D18 inside AGammaL(1,64): x -> x+1, x -> zeta^7 x, x -> x^8."""
    F = Field(2, 6)
    c = F.pow(F.primitive_element().index, 7)
    gens = [
        _perm_from_map(64, lambda x: x ^ 1),
        _perm_from_map(64, lambda x: F.mul(c, x)),
        _perm_from_map(64, lambda x: F.pow(x, 8)),
    ]
    return group_from_generators(gens, 64)


def affine64_frobenius42() -> PermGroup:
    """2^6:(7:6): AGL(1,7) permuting coordinates of the even-weight code in GF(2)^7."""
    module = DeletedModule(2, 7)
    return module.group([[(j + 1) % 7 for j in range(7)], [(3 * j) % 7 for j in range(7)]])


# -- derived actions ---------------------------------------------------------


def lex_min_coset_rep(Hchain, g: tuple) -> tuple:
    """Lexicographically least element of the right coset H g.

    ``Hchain`` must have base 0, 1, ..., n-1 in order.
    """
    c = g
    for lv in Hchain.levels:
        if len(lv.orbit) == 1:
            continue
        best = min(lv.orbit, key=c.__getitem__)
        u = lv.trans[best]
        if u is not None:
            c = _mul(u, c)
    return c


def coset_action(G: PermGroup, H_gens: Sequence[Permutation], cap: int | None = None) -> PermGroup:
    """Action of G on the right cosets of H = <H_gens>, cosets numbered in BFS order."""
    n = G.degree
    for h in H_gens:
        if h.degree != n or not G.contains(h):
            raise NotSubgroup("generator of H is not in G")
    H = group_from_generators(H_gens, n)
    index = G.order // H.order
    _check_cap(index, cap)
    Hchain = schreier_sims(H.chain.strong_generators(), n, tuple(range(n)), H.order)
    ident = tuple(range(n))
    start = lex_min_coset_rep(Hchain, ident)
    reps = [start]
    label = {start: 0}
    raw = [g.images for g in G.generators]
    images = [[] for _ in raw]
    k = 0
    while k < len(reps):
        r = reps[k]
        for gi, x in enumerate(raw):
            c = lex_min_coset_rep(Hchain, _mul(r, x))
            j = label.get(c)
            if j is None:
                j = label[c] = len(reps)
                reps.append(c)
            images[gi].append(j)
        k += 1
    if len(reps) != index:
        raise AssertionError("coset enumeration disagrees with |G:H|")
    gens = [Permutation(im, check=False) for im in images]
    return group_from_generators(gens, index)


def wreath_product_action(L: PermGroup, k: int, P: PermGroup, cap: int | None = None) -> PermGroup:
    """Product action of L wr P on Delta^k, point index sum x_i m^i."""
    m = L.degree
    if P.degree != k:
        raise ValueError(f"top group must act on {k} points, got degree {P.degree}")
    N = m**k
    _check_cap(N, cap)
    digits = []
    for x in range(N):
        d = []
        for _ in range(k):
            d.append(x % m)
            x //= m
        digits.append(d)
    weights = [m**i for i in range(k)]

    def encode(d):
        return sum(a * w for a, w in zip(d, weights))

    gens = []
    for i in range(k):
        for g in L.generators:
            out = []
            for d in digits:
                e = list(d)
                e[i] = g[d[i]]
                out.append(encode(e))
            gens.append(Permutation(out, check=False))
    for s in P.generators:
        out = []
        for d in digits:
            e = [0] * k
            for i, a in enumerate(d):
                e[s[i]] = a
            out.append(encode(e))
        gens.append(Permutation(out, check=False))
    return group_from_generators(gens, N)


def subset_action(G: PermGroup, k: int, cap: int | None = None) -> PermGroup:
    """Induced action on k-subsets, numbered in lexicographic order."""
    subsets = list(combinations(range(G.degree), k))
    _check_cap(len(subsets), cap)
    pos = {s: i for i, s in enumerate(subsets)}
    gens = [
        Permutation([pos[tuple(sorted(g[x] for x in s))] for s in subsets], check=False)
        for g in G.generators
    ]
    return group_from_generators(gens, len(subsets))


# -- projective plane, for the catalog -----------------------------------------


def projective_points(p: int, dim: int = 3) -> list[tuple[int, ...]]:
    """Normalized vectors of PG(dim-1, p), first non-zero coordinate 1, lex order."""
    pts = []
    for lead in range(dim):
        tail = dim - lead - 1

        def rec(prefix):
            if len(prefix) == tail:
                yield prefix
                return
            for a in range(p):
                yield from rec(prefix + (a,))

        for rest in rec(()):
            pts.append((0,) * lead + (1,) + rest)
    return pts


def projective_matrix_permutation(matrix: Sequence[Sequence[int]], p: int) -> Permutation:
    """Permutation of PG(d-1, p) induced by v -> v M (row vectors, p prime)."""
    dim = len(matrix)
    pts = projective_points(p, dim)
    pos = {v: i for i, v in enumerate(pts)}
    out = []
    for v in pts:
        w = [sum(v[i] * matrix[i][j] for i in range(dim)) % p for j in range(dim)]
        lead = next(x for x in w if x)
        inv = pow(lead, p - 2, p)
        out.append(pos[tuple(x * inv % p for x in w)])
    return Permutation(out)


def psl3_3() -> PermGroup:
    gens = [
        projective_matrix_permutation([[1, 1, 0], [0, 1, 0], [0, 0, 1]], 3),
        projective_matrix_permutation([[0, 1, 0], [0, 0, 1], [1, 0, 0]], 3),
    ]
    return group_from_generators(gens, 13)


# -- catalog ---------------------------------------------------------------

_M11 = ["(1,2,3,4,5,6,7,8,9,10,11)", "(3,7,11,8)(4,10,5,6)"]
_M12 = _M11 + ["(1,12)(2,11)(3,6)(4,8)(5,9)(7,10)"]
# generators (in M11 on 11 points) of a subgroup PSL(2,11) of index 12;
# found by scripts/find_psl211_in_m11.py
_M11_PSL211 = ["(1,4)(2,11)(3,6)(9,10)", "(2,4,3)(5,8,6)(7,9,11)"]


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    order: int
    degree: int
    build: Callable[[], PermGroup]
    description: str = ""


def _from_cycles(strings: Sequence[str], n: int) -> PermGroup:
    return group_from_generators([Permutation.parse(s, n) for s in strings], n)


def _m11_on_12() -> PermGroup:
    return coset_action(_from_cycles(_M11, 11), m11_psl211_generators())


def m11_psl211_generators() -> list[Permutation]:
    return [Permutation.parse(s, 11) for s in _M11_PSL211]


def _sym5_on_pairs() -> PermGroup:
    S5 = natural_group("Sym", 5)
    # stabilizer of the pair {0,1}: Sym{0,1} x Sym{2,3,4}
    H = [
        Permutation.from_cycles([(0, 1)], 5),
        Permutation.from_cycles([(2, 3)], 5),
        Permutation.from_cycles([(2, 3, 4)], 5),
    ]
    return coset_action(S5, H)


CATALOG: dict[str, CatalogEntry] = {
    e.name: e
    for e in [
        CatalogEntry("M11", 7920, 11, lambda: _from_cycles(_M11, 11), "Mathieu group M11, natural action"),
        CatalogEntry("M12", 95040, 12, lambda: _from_cycles(_M12, 12), "Mathieu group M12, natural action"),
        CatalogEntry("M11_12", 7920, 12, _m11_on_12, "M11 on the 12 cosets of PSL(2,11)"),
        CatalogEntry("M10", 720, 10, m10_group, "PSL(2,9).2 = M10 on the projective line"),
        CatalogEntry("PSL(3,3)", 5616, 13, psl3_3, "PSL(3,3) on the 13 points of PG(2,3)"),
        CatalogEntry("S5_PAIRS", 120, 10, _sym5_on_pairs, "Sym(5) on 2-subsets, as a coset action"),
        CatalogEntry("AFF64_D18", 64 * 18, 64, affine64_dihedral18, "2^6:D18 in AGammaL(1,64)"),
        CatalogEntry("AFF64_F42", 64 * 42, 64, affine64_frobenius42, "2^6:(7:6) on the even-weight code of length 7"),
        CatalogEntry("AGAMMAL1_8", 168, 8, lambda: agammal1_group(8), "AGammaL(1,8) on 8 points"),
    ]
}


def catalog_names() -> list[str]:
    return list(CATALOG)


def catalog_lookup(name: str) -> PermGroup:
    entry = CATALOG.get(name)
    if entry is None:
        raise UnknownName(f"no catalog group named {name!r}")
    G = entry.build()
    if G.order != entry.order or G.degree != entry.degree:
        raise AssertionError(
            f"catalog group {name} has order {G.order} on {G.degree} points, "
            f"expected {entry.order} on {entry.degree}"
        )
    return G
