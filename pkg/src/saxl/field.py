"""GF(p^e) in polynomial representation, plus the projective line over it.

Element ``i`` of a field is the polynomial whose coefficient vector, read as
a base-p integer with the constant term least significant, equals ``i``.
The modulus is the lexicographically smallest monic irreducible polynomial
(highest coefficients compared first), so GF(8) uses x^3 + x + 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterator

from .errors import DivisionByZero, FieldTooLarge, NotPrime, NotPrimePower

DEFAULT_FIELD_CAP = 2**20


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, e)`` with ``q = p**e``, or None."""
    if q < 2:
        return None
    p = next(d for d in range(2, q + 1) if q % d == 0)
    e = 0
    while q % p == 0:
        q //= p
        e += 1
    return (p, e) if q == 1 else None


def require_prime_power(q: int) -> tuple[int, int]:
    pe = prime_power(q)
    if pe is None:
        raise NotPrimePower(f"{q} is not a prime power")
    return pe


# -- coefficient-vector polynomials over GF(p), constant term first ------------


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: list[int], m: list[int], p: int) -> list[int]:
    a = _trim(list(a))
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mc in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mc) % p
        _trim(a)
    return a


def _poly_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _monic_polys(degree: int, p: int) -> Iterator[list[int]]:
    """Monic polynomials of the given degree in lexicographic order."""
    for k in range(p**degree):
        digits = []
        x = k
        for _ in range(degree):
            digits.append(x % p)
            x //= p
        yield digits + [1]


def is_irreducible(m: list[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree at most deg(m)/2."""
    d = len(m) - 1
    if d < 1:
        return False
    for k in range(1, d // 2 + 1):
        for f in _monic_polys(k, p):
            if not _poly_mod(m, f, p):
                return False
    return True


def smallest_irreducible(p: int, e: int) -> list[int]:
    # _monic_polys varies the constant term fastest, i.e. it walks the
    # coefficient vectors in lex order with the high coefficients first
    for m in _monic_polys(e, p):
        if is_irreducible(m, p):
            return m
    raise AssertionError("an irreducible polynomial always exists")


class Field:
    """The finite field GF(p^e)."""

    def __init__(self, p: int, e: int = 1, cap: int = DEFAULT_FIELD_CAP):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if e < 1:
            raise ValueError("extension degree must be at least 1")
        if p**e > cap:
            raise FieldTooLarge(f"GF({p}^{e}) exceeds the cap of {cap} elements")
        self.p = p
        self.e = e
        self.q = p**e
        self.modulus = smallest_irreducible(p, e)

    def __repr__(self) -> str:
        return f"Field(GF({self.p}^{self.e}))"

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and (self.p, self.e) == (other.p, other.e)

    def __hash__(self) -> int:
        return hash((self.p, self.e))

    # -- index <-> coefficients ------------------------------------------------

    def coeffs(self, i: int) -> list[int]:
        out = []
        for _ in range(self.e):
            out.append(i % self.p)
            i //= self.p
        return out

    def index(self, coeffs) -> int:
        out = 0
        for c in reversed(list(coeffs)[: self.e]):
            out = out * self.p + c % self.p
        return out

    def element(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            return value
        if isinstance(value, int):
            if not 0 <= value < self.q:
                raise ValueError(f"index {value} outside GF({self.q})")
            return FieldElement(self, value)
        return FieldElement(self, self.index(value))

    def __call__(self, value) -> "FieldElement":
        return self.element(value)

    def elements(self) -> list["FieldElement"]:
        return [FieldElement(self, i) for i in range(self.q)]

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    # -- arithmetic on indices -----------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.e == 1:
            return (a + b) % self.p
        return self.index(x + y for x, y in zip(self.coeffs(a), self.coeffs(b)))

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        return self.index(-x for x in self.coeffs(a))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def poly_mul(self, a: int, b: int) -> int:
        """Reference multiplication by polynomial reduction (no tables)."""
        prod_ = _poly_mul(_trim(self.coeffs(a)), _trim(self.coeffs(b)), self.p)
        return self.index(_poly_mod(prod_, self.modulus, self.p) + [0] * self.e)

    @cached_property
    def _tables(self) -> tuple[list[int], list[int]]:
        g = self._primitive_index()
        exp = [0] * (self.q - 1)
        log = [0] * self.q
        x = 1
        for k in range(self.q - 1):
            exp[k] = x
            log[x] = k
            x = self.poly_mul(x, g)
        return exp, log

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.e == 1:
            return a * b % self.p
        exp, log = self._tables
        return exp[(log[a] + log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("zero has no inverse")
        if self.e == 1:
            return pow(a, self.p - 2, self.p)
        exp, log = self._tables
        return exp[(-log[a]) % (self.q - 1)]

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            if k < 0:
                raise DivisionByZero("zero has no inverse")
            return 1 if k == 0 else 0
        if self.e == 1:
            return pow(a, k % (self.p - 1), self.p)
        exp, log = self._tables
        return exp[(log[a] * k) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def mult_order(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("zero has no multiplicative order")
        k, x = 1, a
        while x != 1:
            x = self.poly_mul(x, a)
            k += 1
        return k

    def _primitive_index(self) -> int:
        if self.q == 2:
            return 1
        n = self.q - 1
        primes = [d for d in range(2, n + 1) if n % d == 0 and is_prime(d)]
        for a in range(1, self.q):
            # order is n iff a^(n/r) != 1 for each prime r | n
            ok = True
            for r in primes:
                x, k, acc = 1, n // r, a
                while k:
                    if k & 1:
                        x = self.poly_mul(x, acc)
                    acc = self.poly_mul(acc, acc)
                    k >>= 1
                if x == 1:
                    ok = False
                    break
            if ok:
                return a
        raise AssertionError("the multiplicative group is cyclic")

    def primitive_element(self) -> "FieldElement":
        """Smallest-index generator of the multiplicative group."""
        return FieldElement(self, self._primitive_index())

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.p)


@dataclass(frozen=True)
class FieldElement:
    field: Field
    index: int

    @property
    def coeffs(self) -> list[int]:
        return self.field.coeffs(self.index)

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("elements of different fields")
            return other.index
        if isinstance(other, int):
            # integers embed through the prime field
            return other % self.field.p
        return NotImplemented

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.index, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.index, self._other(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field.sub(self._other(other), self.index))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.index, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.index, self._other(other)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.index))

    def __pow__(self, k: int):
        return FieldElement(self.field, self.field.pow(self.index, k))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.index))

    def is_zero(self) -> bool:
        return self.index == 0

    def __int__(self) -> int:
        return self.index

    def __repr__(self) -> str:
        return f"GF({self.field.q})[{self.index}]"


def field_make(p: int, e: int = 1, cap: int = DEFAULT_FIELD_CAP) -> Field:
    return Field(p, e, cap)


def field_arith(a: FieldElement, b: FieldElement | None, op: str, k: int | None = None) -> FieldElement:
    """Dispatch ``op`` in {add, mul, inv, pow, neg}; ``pow`` takes exponent ``k``."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inverse()
    if op == "neg":
        return -a
    if op == "pow":
        return a ** (k if k is not None else int(b))
    raise ValueError(f"unknown field operation {op!r}")


def primitive_element(F: Field) -> FieldElement:
    return F.primitive_element()


def _base_p(i: int, p: int) -> str:
    if i == 0:
        return "0"
    digits = []
    while i:
        digits.append("0123456789abcdefghijklmnopqrstuvwxyz"[i % p] if p <= 36 else f"[{i % p}]")
        i //= p
    return "".join(reversed(digits))


class ProjectiveLine:
    """GF(q) together with infinity; infinity is the last index ``q``."""

    def __init__(self, field: Field):
        self.field = field
        self.q = field.q
        self.infinity = field.q

    def __len__(self) -> int:
        return self.q + 1

    def label(self, i: int) -> str:
        if i == self.infinity:
            return "inf"
        return _base_p(i, self.field.p)

    def mobius(self, a: int, b: int, c: int, d: int) -> Callable[[int], int]:
        """The map x -> (a x + b) / (c x + d) on point indices."""
        F = self.field
        if F.sub(F.mul(a, d), F.mul(b, c)) == 0:
            raise ValueError("singular matrix")
        inf = self.infinity

        def f(x: int) -> int:
            if x == inf:
                return inf if c == 0 else F.div(a, c)
            num = F.add(F.mul(a, x), b)
            den = F.add(F.mul(c, x), d)
            return inf if den == 0 else F.div(num, den)

        return f

    def field_map(self, f: Callable[[int], int]) -> Callable[[int], int]:
        """Extend a map on field indices to fix infinity."""
        inf = self.infinity
        return lambda x: inf if x == inf else f(x)
