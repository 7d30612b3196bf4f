"""Discrete logs of word residues and their rotation/offset split.

In each quotient field the log of a nonzero residue splits as
log = turns * x_exponent + offset.  Rotating the word by one place adds
x_exponent to the log, so `turns` advances by one (mod rotation_order)
while `offset` never moves; offset is the rotation-invariant part.
"""

from __future__ import annotations

from dataclasses import dataclass

from .decomposition import CosetTable, crt_split
from .fields import QuotientFieldCtx


@dataclass(frozen=True)
class DlogEntry:
    log: int
    turns: int
    offset: int


@dataclass(frozen=True, eq=True)
class ResidueProfile:
    """Support pattern plus the split logs of all nonzero residues."""

    support: tuple[tuple[int, ...], ...]
    entries: dict

    def entry(self, i: int, j: int) -> DlogEntry:
        return self.entries[(i, j)]


def dlog(qctx: QuotientFieldCtx, y) -> int:
    """Discrete log of y base the quotient's constrained generator."""
    return qctx.dlog(y)


def split_log(qctx: QuotientFieldCtx, log: int) -> tuple[int, int]:
    """(turns, offset) with log = turns * x_exponent + offset."""
    if not 0 <= log < max(qctx.group_order, 1):
        raise ValueError(f"log {log} outside [0, {qctx.group_order})")
    return divmod(log, qctx.x_exponent)


def profile(tables: CosetTable, word) -> ResidueProfile:
    """Support and split discrete logs for one word."""
    residues = crt_split(tables, word)
    support = []
    entries = {}
    for i, (block, group) in enumerate(zip(tables.blocks, residues)):
        live = []
        for j, (qctx, residue) in enumerate(zip(block.quotients, group)):
            if residue == qctx.field.zero:
                continue
            live.append(j)
            log = qctx.dlog(residue)
            turns, offset = split_log(qctx, log)
            entries[(i, j)] = DlogEntry(log=log, turns=turns, offset=offset)
        support.append(tuple(live))
    return ResidueProfile(support=tuple(support), entries=entries)
