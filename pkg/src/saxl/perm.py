"""Permutations of {0, ..., n-1} and the cycle-notation text formats.

Permutations act on the right: ``p(i)`` is the image of ``i`` and
``p * q`` applies ``p`` first, then ``q``.
"""

from __future__ import annotations

import re
from pathlib import Path
from typing import Iterable, Sequence

from .errors import MixedDegree, ParseError, PointOutOfRange


def _mul(a: tuple, b: tuple) -> tuple:
    return tuple(map(b.__getitem__, a))


def _inv(a: tuple) -> tuple:
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


class Permutation:
    """An immutable bijection on ``range(degree)``."""

    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int], *, check: bool = True):
        images = tuple(images)
        if check:
            n = len(images)
            if sorted(images) != list(range(n)):
                raise ValueError(f"not a permutation of range({n}): {images!r}")
        self.images = images
        self._hash = None

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(n), check=False)

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int) -> "Permutation":
        images = list(range(n))
        seen = set()
        for cyc in cycles:
            for x in cyc:
                if not 0 <= x < n:
                    raise PointOutOfRange(f"point {x} outside range({n})")
                if x in seen:
                    raise ValueError(f"point {x} occurs in two cycles")
                seen.add(x)
            for a, b in zip(cyc, list(cyc[1:]) + list(cyc[:1])):
                images[a] = b
        return cls(images, check=False)

    @classmethod
    def parse(cls, text: str, n: int, one_indexed: bool = True) -> "Permutation":
        """Parse disjoint-cycle notation such as ``"(1,2,3)(4,5)"``."""
        return cls.from_cycles(parse_cycles(text, one_indexed), n)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __getitem__(self, i: int) -> int:
        return self.images[i]

    def __len__(self) -> int:
        return len(self.images)

    def __iter__(self):
        return iter(self.images)

    def __mul__(self, other: "Permutation") -> "Permutation":
        if not isinstance(other, Permutation):
            return NotImplemented
        if len(other.images) != len(self.images):
            raise MixedDegree(f"degrees {self.degree} and {other.degree} differ")
        return Permutation(_mul(self.images, other.images), check=False)

    def __invert__(self) -> "Permutation":
        return Permutation(_inv(self.images), check=False)

    inverse = __invert__

    def __pow__(self, k: int) -> "Permutation":
        base = self if k >= 0 else ~self
        k = abs(k)
        result = tuple(range(self.degree))
        acc = base.images
        while k:
            if k & 1:
                result = _mul(result, acc)
            acc = _mul(acc, acc)
            k >>= 1
        return Permutation(result, check=False)

    def __eq__(self, other) -> bool:
        if isinstance(other, Permutation):
            return self.images == other.images
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.images)
        return self._hash

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def support(self) -> list[int]:
        return [i for i, x in enumerate(self.images) if i != x]

    def fixed_points(self) -> list[int]:
        return [i for i, x in enumerate(self.images) if i == x]

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for i in range(self.degree):
            if i in seen:
                continue
            cyc = [i]
            seen.add(i)
            j = self.images[i]
            while j != i:
                cyc.append(j)
                seen.add(j)
                j = self.images[j]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def order(self) -> int:
        from math import lcm

        return lcm(1, *(len(c) for c in self.cycles()))

    def sign(self) -> int:
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def to_cycle_string(self, one_indexed: bool = True) -> str:
        shift = 1 if one_indexed else 0
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + ",".join(str(x + shift) for x in c) + ")" for c in cyc)

    def __repr__(self) -> str:
        return f"Permutation({self.to_cycle_string(one_indexed=False)}, n={self.degree})"


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Apply ``p`` first, then ``q``."""
    return p * q


def inverse(p: Permutation) -> Permutation:
    return ~p


_CYCLE_RE = re.compile(r"\(\s*([0-9]+(?:\s*[, ]\s*[0-9]+)*)?\s*\)")


def parse_cycles(text: str, one_indexed: bool = True) -> list[list[int]]:
    shift = 1 if one_indexed else 0
    cycles = []
    pos = 0
    stripped = text.rstrip()
    while pos < len(stripped):
        if stripped[pos].isspace():
            pos += 1
            continue
        m = _CYCLE_RE.match(stripped, pos)
        if m is None:
            raise ParseError(f"malformed cycle notation {text!r}", pos)
        if m.group(1):
            pts = [int(x) - shift for x in re.split(r"\s*[, ]\s*", m.group(1).strip())]
            if min(pts) < 0:
                raise ParseError(f"point 0 is not valid in 1-indexed notation: {text!r}", pos)
            cycles.append(pts)
        pos = m.end()
    return cycles


def read_generators(path: str | Path) -> tuple[int, list[Permutation]]:
    """Read a generator file: a ``degree N`` header, then one permutation per line.

    Points are 1-indexed; blank lines and ``#`` comments are ignored.
    """
    return parse_generators(Path(path).read_text(encoding="utf-8"))


def parse_generators(text: str) -> tuple[int, list[Permutation]]:
    degree = None
    gens = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if degree is None:
            m = re.fullmatch(r"degree\s+([0-9]+)", line)
            if m is None:
                raise ParseError(f"line {lineno}: expected 'degree N' header, got {line!r}")
            degree = int(m.group(1))
            if degree < 1:
                raise ParseError(f"line {lineno}: degree must be positive")
            continue
        try:
            gens.append(Permutation.parse(line, degree))
        except PointOutOfRange as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
    if degree is None:
        raise ParseError("missing 'degree N' header")
    return degree, gens


def format_generators(degree: int, gens: Iterable[Permutation]) -> str:
    lines = [f"degree {degree}"]
    lines += [g.to_cycle_string() for g in gens]
    return "\n".join(lines) + "\n"


def write_generators(path: str | Path, degree: int, gens: Iterable[Permutation]) -> None:
    Path(path).write_text(format_generators(degree, gens), encoding="utf-8")
