"""Exact integer number theory shared by all other modules.

Everything here works on machine-range Python ints; inputs are desk-scale
by design (factorization targets up to ~1e7, moduli up to ~1e4), so plain
trial division and power scans are the right tools.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from typing import Iterable

from .errors import NotCoprimeError


@dataclass(frozen=True)
class PrimePowerFactor:
    """One prime-power block p**t of a factored modulus."""

    p: int
    t: int

    @property
    def value(self) -> int:
        return self.p**self.t

    def __iter__(self):
        return iter((self.p, self.t))


def is_prime(m: int) -> bool:
    """Trial-division primality test, fine for desk-scale inputs."""
    if m < 2:
        return False
    if m < 4:
        return True
    if m % 2 == 0:
        return False
    d = 3
    while d * d <= m:
        if m % d == 0:
            return False
        d += 2
    return True


def factorize(m: int, order: str = "desc") -> list[PrimePowerFactor]:
    """Prime-power factorization of m >= 1, ordered by p**t.

    order="desc" (default) sorts prime powers largest first, "asc" smallest
    first.  factorize(1) is the empty product.
    """
    if m < 1:
        raise ValueError(f"cannot factorize {m}; need a positive integer")
    if order not in ("asc", "desc"):
        raise ValueError(f"unknown factor order {order!r}")
    factors = []
    rest = m
    d = 2
    while d * d <= rest:
        if rest % d == 0:
            t = 0
            while rest % d == 0:
                rest //= d
                t += 1
            factors.append(PrimePowerFactor(d, t))
        d += 1 if d == 2 else 2
    if rest > 1:
        factors.append(PrimePowerFactor(rest, 1))
    factors.sort(key=lambda f: f.value, reverse=(order == "desc"))
    return factors


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r != 0:
        quot = old_r // r
        old_r, r = r, old_r - quot * r
        old_x, x = x, old_x - quot * x
        old_y, y = y, old_y - quot * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    if old_r == 0:
        return 0, 0, 0
    return old_r, old_x, old_y


def mult_order(a: int, m: int) -> int:
    """Smallest k >= 1 with a**k = 1 (mod m); requires gcd(a, m) = 1."""
    if m < 1:
        raise ValueError(f"modulus must be positive, got {m}")
    if m == 1:
        return 1
    a %= m
    if math.gcd(a, m) != 1:
        raise NotCoprimeError(f"{a} is not a unit modulo {m}")
    k = 1
    acc = a
    while acc != 1:
        acc = acc * a % m
        k += 1
    return k


def euler_phi(m: int) -> int:
    """Count of units modulo m."""
    if m < 1:
        raise ValueError(f"need a positive integer, got {m}")
    result = m
    for p, _ in factorize(m):
        result -= result // p
    return result


def gcd_of_set(n: int, values: Iterable[int]) -> int:
    """gcd of n and every element of values; gcd(n, {}) = gcd(n, {0}) = n."""
    if n < 1:
        raise ValueError(f"modulus must be positive, got {n}")
    return reduce(math.gcd, values, n)


@dataclass(frozen=True)
class RingParams:
    """Length n, color count q, and the ordered prime-power split of q.

    weights[i] = q / (q_1 * ... * q_{i+1}) are the mixed-radix weights; they
    satisfy sum((q_i - 1) * w_i) = q - 1, which makes color values in [0, q)
    decompose exactly into per-factor digits.
    """

    n: int
    q: int
    factors: tuple[PrimePowerFactor, ...]
    weights: tuple[int, ...]
    factor_order: str

    @classmethod
    def create(cls, n: int, q: int, factor_order: str = "desc") -> "RingParams":
        if n < 1 or q < 1:
            raise ValueError(f"need positive n and q, got n={n}, q={q}")
        if math.gcd(n, q) != 1:
            raise NotCoprimeError(f"n={n} and q={q} share a factor")
        factors = tuple(factorize(q, order=factor_order))
        weights = []
        running = 1
        for f in factors:
            running *= f.value
            weights.append(q // running)
        if sum((f.value - 1) * w for f, w in zip(factors, weights)) != q - 1:
            raise AssertionError("mixed-radix weight identity failed")
        return cls(n=n, q=q, factors=factors, weights=tuple(weights), factor_order=factor_order)
