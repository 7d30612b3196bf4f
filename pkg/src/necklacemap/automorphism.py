"""Unit-tuple automorphisms aligning rotation counters with the weighted sum.

For a given support (which cosets carry a nonzero residue), the rotation
counters of the discrete logs live in a product of cyclic groups
Z_{n/gcd(n, rep)}.  We multiply each coordinate by a unit h so that

    sum_i w_i * sum_{j in support_i} rep_{i,j} * h_{i,j}
        = gcd(n, all reps)  (mod n).

That calibration makes the weighted sum of the encoded function advance by
exactly gcd(n, reps) per rotation, which is what pins down a unique valid
rotation later.  The search for the lexicographically smallest unit tuple
is exhaustive; theory guarantees a (possibly non-diagonal) solution exists,
and on the supported instance range the diagonal search always succeeds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InternalError, NoSolutionError
from .numtheory import gcd_of_set

Support = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class UnitAutomorphism:
    """Coordinatewise multiplication by units, one per supported coset."""

    support: Support
    pairs: tuple[tuple[int, int], ...]
    moduli: tuple[int, ...]
    units: tuple[int, ...]

    def apply(self, turns: tuple[int, ...]) -> tuple[int, ...]:
        """Multiply each rotation counter by its unit."""
        if len(turns) != len(self.units):
            raise ValueError("coordinate count mismatch")
        return tuple(u * t % m for u, t, m in zip(self.units, turns, self.moduli))

    def apply_inv(self, values: tuple[int, ...]) -> tuple[int, ...]:
        """Inverse map: multiply by the modular inverses of the units."""
        if len(values) != len(self.units):
            raise ValueError("coordinate count mismatch")
        return tuple(
            pow(u, -1, m) * v % m for u, v, m in zip(self.units, values, self.moduli)
        )


class AutomorphismTable:
    """Lazy memo of unit tuples per support, keyed by the full support."""

    def __init__(self, tables):
        self._tables = tables
        self._memo: dict[Support, UnitAutomorphism] = {}

    def normalize(self, support) -> Support:
        blocks = self._tables.blocks
        if len(support) != len(blocks):
            raise ValueError("support must list one index set per factor")
        out = []
        for i, idxs in enumerate(support):
            idxs = tuple(sorted(set(idxs)))
            if idxs and not (0 <= idxs[0] and idxs[-1] < len(blocks[i].cosets)):
                raise ValueError(f"coset index out of range in factor {i}")
            out.append(idxs)
        return tuple(out)

    def for_support(self, support) -> UnitAutomorphism:
        key = self.normalize(support)
        hit = self._memo.get(key)
        if hit is not None:
            self._assert_valid(hit)
            return hit
        solved = self._solve(key)
        self._assert_valid(solved)
        self._memo[key] = solved
        return solved

    def _congruence_data(self, key: Support):
        params = self._tables.params
        n = params.n
        pairs = []
        reps = []
        moduli = []
        coeffs = []
        for i, idxs in enumerate(key):
            w = params.weights[i]
            for j in idxs:
                coset = self._tables.blocks[i].cosets[j]
                pairs.append((i, j))
                reps.append(coset.rep)
                moduli.append(n // math.gcd(n, coset.rep))
                coeffs.append(w * coset.rep % n)
        target = gcd_of_set(n, reps) % n
        return tuple(pairs), tuple(moduli), tuple(coeffs), target

    def _solve(self, key: Support) -> UnitAutomorphism:
        n = self._tables.params.n
        pairs, moduli, coeffs, target = self._congruence_data(key)
        choices = [
            (0,) if m == 1 else tuple(u for u in range(1, m) if math.gcd(u, m) == 1)
            for m in moduli
        ]
        picked = [0] * len(pairs)

        def search(pos: int, acc: int) -> bool:
            if pos == len(pairs):
                return acc == target
            for u in choices[pos]:
                picked[pos] = u
                if search(pos + 1, (acc + coeffs[pos] * u) % n):
                    return True
            return False

        if not search(0, 0):
            raise NoSolutionError(
                f"no diagonal unit tuple matches gcd for support {key} at n={n}"
            )
        return UnitAutomorphism(
            support=key, pairs=pairs, moduli=moduli, units=tuple(picked)
        )

    def _assert_valid(self, aut: UnitAutomorphism) -> None:
        n = self._tables.params.n
        _, moduli, coeffs, target = self._congruence_data(aut.support)
        if moduli != aut.moduli:
            raise InternalError("stored moduli drifted from the coset table")
        acc = 0
        for u, m, c in zip(aut.units, moduli, coeffs):
            if m == 1:
                if u != 0:
                    raise InternalError("nonzero unit stored for a trivial group")
            elif math.gcd(u, m) != 1:
                raise InternalError("stored coordinate is not a unit")
            acc = (acc + c * u) % n
        if acc != target:
            raise InternalError("stored unit tuple no longer satisfies its congruence")
