"""Finite fields as towers: prime fields, extensions, and quotient contexts.

Elements are plain data: an element of a prime field is an int in [0, p);
an element of an extension of degree t is a t-tuple of base-field elements
(little-endian in powers of the defining root).  Both are hashable and
compare structurally, so they work as dict keys without wrappers.

Every choice that could vary (defining modulus, primitive element, root of
unity, constrained generator) is pinned to the first hit in the canonical
enumeration, which counts coefficients lexicographically from the low
constant upward.  That keeps the whole construction reproducible.
"""

from __future__ import annotations

import math
from typing import Iterator, Union

from . import polys
from .errors import (
    InternalError,
    NotPrimeError,
    OrderMismatchError,
    ZeroElementError,
)
from .numtheory import factorize, is_prime

Element = Union[int, tuple]


class PrimeField:
    """The field of integers modulo a prime p; elements are ints."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise NotPrimeError(f"{p} is not prime")
        self.p = p
        self.char = p
        self.degree = 1
        self.order = p
        self.zero = 0
        self.one = 1 % p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def neg(self, a: int) -> int:
        return -a % self.p

    def mul(self, a: int, b: int) -> int:
        return a * b % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def pow(self, a: int, e: int) -> int:
        if e < 0 and a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, e, self.p)

    def from_index(self, i: int) -> int:
        return i % self.p

    def to_index(self, a: int) -> int:
        return a % self.p

    def elements(self) -> Iterator[int]:
        return iter(range(self.p))

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


class ExtensionField:
    """base[x] modulo a monic irreducible; elements are coefficient tuples."""

    def __init__(self, base, modulus: tuple, check: bool = True):
        if len(modulus) < 2 or modulus[-1] != base.one:
            raise ValueError("modulus must be monic of degree >= 1")
        if check and not polys.is_irreducible(base, modulus):
            raise ValueError("modulus is reducible")
        self.base = base
        self.modulus = tuple(modulus)
        self.degree = len(modulus) - 1
        self.char = base.char
        self.order = base.order**self.degree
        self.zero = (base.zero,) * self.degree
        self.one = self._pad((base.one,))
        # x**u mod modulus for u up to 2*(degree-1), used by mul's reduction
        self._xpow = []
        acc = (base.one,)
        for _ in range(2 * self.degree - 1):
            self._xpow.append(self._pad(acc))
            acc = polys.mod(base, polys.mul(base, acc, polys.x(base)), self.modulus)

    def _pad(self, coeffs) -> tuple:
        if len(coeffs) > self.degree:
            raise ValueError("coefficient sequence too long")
        return tuple(coeffs) + (self.base.zero,) * (self.degree - len(coeffs))

    def from_poly(self, coeffs) -> tuple:
        """Reduce a coefficient sequence over the base field to an element."""
        return self._pad(polys.mod(self.base, polys.trim(self.base, coeffs), self.modulus))

    def embed(self, c) -> tuple:
        """Image of a base-field element under the canonical inclusion."""
        return self._pad((c,))

    def in_base(self, a: tuple):
        """Return the base-field preimage of a, or None if a is not constant."""
        if any(c != self.base.zero for c in a[1:]):
            return None
        return a[0]

    def add(self, a: tuple, b: tuple) -> tuple:
        base = self.base
        return tuple(base.add(x, y) for x, y in zip(a, b))

    def sub(self, a: tuple, b: tuple) -> tuple:
        base = self.base
        return tuple(base.sub(x, y) for x, y in zip(a, b))

    def neg(self, a: tuple) -> tuple:
        base = self.base
        return tuple(base.neg(x) for x in a)

    def mul(self, a: tuple, b: tuple) -> tuple:
        base = self.base
        t = self.degree
        conv = [base.zero] * (2 * t - 1)
        for i, ca in enumerate(a):
            if ca == base.zero:
                continue
            for j, cb in enumerate(b):
                conv[i + j] = base.add(conv[i + j], base.mul(ca, cb))
        out = list(conv[:t])
        for u in range(t, 2 * t - 1):
            c = conv[u]
            if c == base.zero:
                continue
            red = self._xpow[u]
            for v in range(t):
                out[v] = base.add(out[v], base.mul(c, red[v]))
        return tuple(out)

    def inv(self, a: tuple) -> tuple:
        if a == self.zero:
            raise ZeroDivisionError("inverse of zero")
        return self.pow(a, self.order - 2)

    def pow(self, a: tuple, e: int) -> tuple:
        if e < 0:
            a = self.inv(a)
            e = -e
        result = self.one
        acc = a
        while e:
            if e & 1:
                result = self.mul(result, acc)
            acc = self.mul(acc, acc)
            e >>= 1
        return result

    def from_index(self, i: int) -> tuple:
        base = self.base
        digits = []
        for _ in range(self.degree):
            i, r = divmod(i, base.order)
            digits.append(base.from_index(r))
        return tuple(digits)

    def to_index(self, a: tuple) -> int:
        base = self.base
        i = 0
        for c in reversed(a):
            i = i * base.order + base.to_index(c)
        return i

    def elements(self) -> Iterator[tuple]:
        return (self.from_index(i) for i in range(self.order))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ExtensionField)
            and other.base == self.base
            and other.modulus == self.modulus
        )

    def __hash__(self):
        return hash(("ExtensionField", self.base, self.modulus))

    def __repr__(self):
        return f"ExtensionField(order={self.order}, base={self.base!r})"


Field = Union[PrimeField, ExtensionField]


def smallest_irreducible(base, t: int) -> tuple:
    """First monic irreducible of degree t over base, in canonical order."""
    if t < 1:
        raise ValueError("degree must be positive")
    for i in range(base.order**t):
        low = []
        rest = i
        for _ in range(t):
            rest, r = divmod(rest, base.order)
            low.append(base.from_index(r))
        cand = tuple(low) + (base.one,)
        if polys.is_irreducible(base, cand):
            return cand
    raise InternalError(f"no irreducible of degree {t} found")  # pragma: no cover


def build_field(p: int, t: int) -> Field:
    """The field of order p**t; plain residues for t = 1."""
    if t < 1:
        raise ValueError("degree must be positive")
    prime = PrimeField(p)
    if t == 1:
        return prime
    return ExtensionField(prime, smallest_irreducible(prime, t))


def extend_field(base, t: int) -> Field:
    """Degree-t extension of an arbitrary field context (identity for t = 1)."""
    if t == 1:
        return base
    return ExtensionField(base, smallest_irreducible(base, t))


def _order_given_primes(field, a, group_order: int, primes) -> int:
    k = group_order
    for r in primes:
        while k % r == 0 and field.pow(a, k // r) == field.one:
            k //= r
    return k


def element_order(field, a) -> int:
    """Multiplicative order of a nonzero element, via divisors of |F*|."""
    if a == field.zero:
        raise ZeroElementError("zero has no multiplicative order")
    group_order = field.order - 1
    if group_order == 0:
        raise ZeroElementError("zero has no multiplicative order")
    primes = [f.p for f in factorize(group_order)]
    return _order_given_primes(field, a, group_order, primes)


def find_primitive(field):
    """First element of maximal order in the canonical enumeration."""
    group_order = field.order - 1
    primes = [f.p for f in factorize(group_order)] if group_order > 1 else []
    for i in range(1, field.order):
        a = field.from_index(i)
        if _order_given_primes(field, a, group_order, primes) == group_order:
            return a
    raise InternalError("no primitive element found")  # pragma: no cover


_BRUTE_FORCE_LIMIT = 1 << 10


def baby_table(field, g, order: int) -> dict:
    """Baby steps for BSGS: element -> exponent, for exponents < ceil(sqrt(order))."""
    m = math.isqrt(order - 1) + 1
    table = {}
    acc = field.one
    for j in range(m):
        table.setdefault(acc, j)
        acc = field.mul(acc, g)
    return table


def discrete_log(field, g, y, order: int, babies: dict | None = None) -> int:
    """Smallest k >= 0 with g**k = y, given that the order of g is `order`.

    Baby-step giant-step when a table is supplied or the group is large;
    plain scan below the brute-force cutoff.
    """
    if y == field.zero:
        raise ZeroElementError("zero is outside the unit group")
    if babies is None and order < _BRUTE_FORCE_LIMIT:
        acc = field.one
        for k in range(order):
            if acc == y:
                return k
            acc = field.mul(acc, g)
        raise InternalError("element is not a power of the base")
    if babies is None:
        babies = baby_table(field, g, order)
    m = math.isqrt(order - 1) + 1
    giant = field.pow(g, -m)
    acc = y
    for i in range(m + 1):
        j = babies.get(acc)
        if j is not None:
            return (i * m + j) % order
        acc = field.mul(acc, giant)
    raise InternalError("element is not a power of the base")


class QuotientFieldCtx:
    """One quotient field F[x]/P with its rotation and generator data.

    `x_class` is the class of x, whose multiplicative order is
    n / gcd(n, rep) where rep is the minimal representative of the
    matching coset of residues.  `generator` is the canonical cyclic
    generator whose x_exponent-th power equals x_class; discrete logs are
    taken in that base.
    """

    def __init__(self, base_field, modulus: tuple, n: int, rep: int):
        self.base = base_field
        self.modulus = tuple(modulus)
        self.n = n
        self.rep = rep
        self.size = len(modulus) - 1
        self.field = ExtensionField(base_field, self.modulus)
        self.group_order = self.field.order - 1
        self.rep_gcd = math.gcd(n, rep)
        self.rotation_order = n // self.rep_gcd

        self.x_class = self.field.from_poly(polys.x(base_field))
        if element_order(self.field, self.x_class) != self.rotation_order:
            raise OrderMismatchError(
                f"class of x has wrong order in quotient of degree {self.size}"
            )
        if self.group_order * self.rep_gcd % n != 0:
            raise InternalError("rotation order does not divide the unit group order")
        self.x_exponent = self.group_order * self.rep_gcd // n

        self.generator = self._pick_generator()
        self._check_generator()
        self._babies = (
            baby_table(self.field, self.generator, self.group_order)
            if self.group_order >= _BRUTE_FORCE_LIMIT
            else None
        )

    def _pick_generator(self):
        """Smallest power of the canonical primitive that both generates the
        unit group and lands on x_class at the prescribed exponent."""
        n_units = self.group_order
        primitive = find_primitive(self.field)
        target = discrete_log(self.field, primitive, self.x_class, n_units)
        e = self.x_exponent
        if target % e != 0:
            raise InternalError("log of the class of x is not divisible by its exponent")
        u = target // e
        step = n_units // e
        for _ in range(n_units + 1):
            if math.gcd(u, n_units) == 1:
                return self.field.pow(primitive, u)
            u += step
        raise InternalError("no unit exponent reaches the class of x")  # pragma: no cover

    def _check_generator(self):
        field = self.field
        if field.pow(self.generator, self.group_order) != field.one:
            raise OrderMismatchError("generator order check failed")
        for f in factorize(self.group_order):
            if field.pow(self.generator, self.group_order // f.p) == field.one:
                raise OrderMismatchError("generator is not primitive")
        if field.pow(self.generator, self.x_exponent) != self.x_class:
            raise InternalError("generator does not reach the class of x")

    def dlog(self, y) -> int:
        """Discrete log of y base `generator`, in [0, group_order)."""
        return discrete_log(self.field, self.generator, y, self.group_order, self._babies)

    def __repr__(self):
        return (
            f"QuotientFieldCtx(order={self.field.order}, n={self.n}, rep={self.rep})"
        )
