"""Exhaustive enumeration of both sides and full certification at desk scale.

This module is the ground truth: it enumerates every necklace and every
zero-sum function inside a size envelope, pushes each necklace through the
map, and checks totality, injectivity, surjectivity, the inverse round
trip, the rotation law of the log split, and every stratum count against
the closed-form formulas.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import product

from .bijection import function_support, map_necklace, unmap_function, weighted_sum
from .counting import stratum_count, stratum_keys
from .decomposition import CosetTable, build_tables, orbit_canonical, shift
from .dlog import profile
from .errors import EnvelopeExceededError
from .numtheory import RingParams

DEFAULT_ENVELOPE = 10**8


def _check_envelope(n: int, q: int, limit: int) -> None:
    if n * q**n > limit:
        raise EnvelopeExceededError(
            f"n*q^n = {n * q**n} exceeds the enumeration envelope {limit}"
        )


def enum_necklaces(n: int, q: int, limit: int = DEFAULT_ENVELOPE) -> list[tuple[int, ...]]:
    """One canonical (lexicographically least) word per rotation orbit."""
    _check_envelope(n, q, limit)
    out = []
    for word in product(range(q), repeat=n):
        if word == orbit_canonical(word):
            out.append(word)
    return out


def enum_functions(n: int, q: int, limit: int = DEFAULT_ENVELOPE) -> list[tuple[int, ...]]:
    """All functions Z_n -> [0, q) whose weighted sum vanishes mod n."""
    _check_envelope(n, q, limit)
    return [f for f in product(range(q), repeat=n) if weighted_sum(n, f) == 0]


def _full_support(tables: CosetTable) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(range(len(block.cosets))) for block in tables.blocks)


def _shift_lemma_holds(tables: CosetTable) -> bool:
    """Rotation law of the log split, checked exhaustively.

    Part one: for the bare word x, every supported coset shows one turn and
    zero offset.  Part two: on every fully-supported word, rotating by k
    adds k to the turns (mod rotation_order) and never moves the offset.
    """
    n, q = tables.params.n, tables.params.q
    full = _full_support(tables)

    word_x = (1 % q,) if n == 1 else (0, 1 % q) + (0,) * (n - 2)
    prof_x = profile(tables, word_x)
    if prof_x.support != full:
        return False
    for i, block in enumerate(tables.blocks):
        for j, qctx in enumerate(block.quotients):
            entry = prof_x.entry(i, j)
            if entry.turns % qctx.rotation_order != 1 % qctx.rotation_order:
                return False
            if entry.offset != 0:
                return False

    for word in product(range(q), repeat=n):
        base = profile(tables, word)
        if base.support != full:
            continue
        for k in range(1, n):
            rotated = profile(tables, shift(word, k))
            if rotated.support != full:
                return False
            for i, block in enumerate(tables.blocks):
                for j, qctx in enumerate(block.quotients):
                    b0 = base.entry(i, j)
                    bk = rotated.entry(i, j)
                    if bk.turns % qctx.rotation_order != (k + b0.turns) % qctx.rotation_order:
                        return False
                    if bk.offset != b0.offset:
                        return False
    return True


def verify_shift_lemma(
    n: int, q: int, factor_order: str = "desc", limit: int = DEFAULT_ENVELOPE
) -> bool:
    """Standalone entry point for the rotation-law check."""
    _check_envelope(n, q, limit)
    tables = build_tables(RingParams.create(n, q, factor_order))
    return _shift_lemma_holds(tables)


@dataclass(frozen=True)
class StratumRecord:
    support: tuple[tuple[int, ...], ...]
    formula: int
    necklace_side: int
    function_side: int


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one exhaustive certification run."""

    n: int
    q: int
    factor_order: str
    necklace_total: int
    function_total: int
    strata: tuple[StratumRecord, ...]
    total_ok: bool
    injective: bool
    surjective: bool
    inverse_ok: bool
    shift_lemma_ok: bool
    stratum_ok: bool
    elapsed: float

    @property
    def all_ok(self) -> bool:
        return (
            self.total_ok
            and self.injective
            and self.surjective
            and self.inverse_ok
            and self.shift_lemma_ok
            and self.stratum_ok
        )

    def flag_items(self) -> list[tuple[str, bool]]:
        return [
            ("total", self.total_ok),
            ("injective", self.injective),
            ("surjective", self.surjective),
            ("inverse_ok", self.inverse_ok),
            ("shift_lemma_ok", self.shift_lemma_ok),
            ("stratum_ok", self.stratum_ok),
        ]

    def to_payload(self) -> dict:
        """JSON-ready content; counts as decimal strings, no timing."""
        return {
            "necklaces": str(self.necklace_total),
            "functions": str(self.function_total),
            "flags": {name: ok for name, ok in self.flag_items()},
            "certified": self.all_ok,
            "strata": [
                {
                    "support": [[j + 1 for j in idxs] for idxs in rec.support],
                    "formula": str(rec.formula),
                    "necklace_side": str(rec.necklace_side),
                    "function_side": str(rec.function_side),
                }
                for rec in self.strata
            ],
        }


def verify_bijection(
    n: int, q: int, factor_order: str = "desc", limit: int = DEFAULT_ENVELOPE
) -> VerificationReport:
    """Map every necklace, compare against every zero-sum function."""
    _check_envelope(n, q, limit)
    started = time.perf_counter()
    tables = build_tables(RingParams.create(n, q, factor_order))

    necklaces = enum_necklaces(n, q, limit)
    functions = enum_functions(n, q, limit)
    function_set = set(functions)

    images = []
    total_ok = True
    for word in necklaces:
        image = map_necklace(tables, word)
        images.append(image)
        if len(image) != n or weighted_sum(n, image) != 0:
            total_ok = False
        if any(not 0 <= c < q for c in image):
            total_ok = False

    image_set = set(images)
    injective = len(image_set) == len(images)
    surjective = image_set == function_set
    inverse_ok = all(
        unmap_function(tables, image) == word for word, image in zip(necklaces, images)
    )
    shift_lemma_ok = _shift_lemma_holds(tables)

    necklace_by_key: dict = {}
    for word in necklaces:
        key = profile(tables, word).support
        necklace_by_key[key] = necklace_by_key.get(key, 0) + 1
    function_by_key: dict = {}
    for values in functions:
        key = function_support(tables, values)
        function_by_key[key] = function_by_key.get(key, 0) + 1

    strata = []
    stratum_ok = True
    for key in stratum_keys(tables):
        rec = StratumRecord(
            support=key,
            formula=stratum_count(tables, key),
            necklace_side=necklace_by_key.get(key, 0),
            function_side=function_by_key.get(key, 0),
        )
        if not rec.formula == rec.necklace_side == rec.function_side:
            stratum_ok = False
        strata.append(rec)
    if sum(r.formula for r in strata) != len(necklaces):
        stratum_ok = False
    if sum(r.function_side for r in strata) != len(functions):
        stratum_ok = False

    return VerificationReport(
        n=n,
        q=q,
        factor_order=factor_order,
        necklace_total=len(necklaces),
        function_total=len(functions),
        strata=tuple(strata),
        total_ok=total_ok,
        injective=injective,
        surjective=surjective,
        inverse_ok=inverse_ok,
        shift_lemma_ok=shift_lemma_ok,
        stratum_ok=stratum_ok,
        elapsed=time.perf_counter() - started,
    )
