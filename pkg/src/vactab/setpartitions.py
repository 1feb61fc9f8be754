"""Set partitions of {1..k}, Stirling and Bell numbers, and the triangular encoding.

The triangular encoding records, for every block b_1 < b_2 < ... < b_s, the
successive pairs (b_1, b_2), (b_2, b_3), ... A pair (a, b) with a < b sits in
column a of the triangle (counted from the left) and row b (counted from the
top); at most one pair uses a given a and at most one a given b.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cache
from math import comb
from typing import Iterable, Iterator

from .errors import ParseError, VactabError


@dataclass(frozen=True)
class SetPartition:
    """Blocks of {1..k} in canonical form: sorted blocks ordered by their minima."""

    k: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        blocks = tuple(sorted((tuple(sorted(b)) for b in self.blocks), key=lambda b: b[0] if b else 0))
        object.__setattr__(self, "blocks", blocks)
        seen = [x for b in blocks for x in b]
        if any(not b for b in blocks) or sorted(seen) != list(range(1, self.k + 1)):
            raise VactabError(f"blocks {blocks} do not partition 1..{self.k}")

    @classmethod
    def of(cls, blocks: Iterable[Iterable[int]], k: int | None = None) -> "SetPartition":
        blocks = [tuple(b) for b in blocks]
        if k is None:
            k = sum(len(b) for b in blocks)
        return cls(k, tuple(blocks))

    @property
    def n_blocks(self) -> int:
        return len(self.blocks)

    def minima(self) -> list[int]:
        return sorted(b[0] for b in self.blocks)

    def maxima(self) -> list[int]:
        return sorted(b[-1] for b in self.blocks)

    def __str__(self) -> str:
        return format_set_partition(self)


@dataclass(frozen=True)
class DeltaFilling:
    """Crosses of the triangle as pairs (a, b), a < b <= k."""

    k: int
    crosses: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        crosses = frozenset((int(a), int(b)) for a, b in self.crosses)
        object.__setattr__(self, "crosses", crosses)
        if any(not (1 <= a < b <= self.k) for a, b in crosses):
            raise VactabError(f"triangle crosses must satisfy 1 <= a < b <= {self.k}")
        if len({a for a, _ in crosses}) != len(crosses) or len({b for _, b in crosses}) != len(crosses):
            raise VactabError("at most one cross per row and per column of the triangle")


def _restricted_growth(k: int) -> Iterator[list[int]]:
    """Restricted growth strings a_1..a_k (a_1 = 0, a_i <= 1 + max of the previous)."""
    if k == 0:
        yield []
        return
    word = [0] * k

    def rec(i: int, top: int) -> Iterator[list[int]]:
        if i == k:
            yield word
            return
        for v in range(top + 2):
            word[i] = v
            yield from rec(i + 1, max(top, v))

    yield from rec(1, 0)


def enumerate_set_partitions(k: int, l: int | None = None) -> list[SetPartition]:
    out = []
    for word in _restricted_growth(k):
        n_blocks = max(word) + 1 if word else 0
        if l is not None and n_blocks != l:
            continue
        blocks: list[list[int]] = [[] for _ in range(n_blocks)]
        for i, v in enumerate(word, 1):
            blocks[v].append(i)
        out.append(SetPartition(k, tuple(tuple(b) for b in blocks)))
    return out


@cache
def stirling(k: int, l: int) -> int:
    """S(k, l) via S(k, l) = l S(k-1, l) + S(k-1, l-1)."""
    if k == 0 or l == 0:
        return 1 if k == l else 0
    if l > k or l < 0:
        return 0
    return l * stirling(k - 1, l) + stirling(k - 1, l - 1)


@cache
def bell(m: int) -> int:
    """B_m via B_{m+1} = sum_i C(m, i) B_i."""
    if m == 0:
        return 1
    return sum(comb(m - 1, i) * bell(i) for i in range(m))


def to_delta_filling(pi: SetPartition) -> DeltaFilling:
    return DeltaFilling(pi.k, frozenset((a, b) for block in pi.blocks for a, b in zip(block, block[1:])))


def from_delta_filling(d: DeltaFilling) -> SetPartition:
    successor = dict(d.crosses)
    has_pred = {b for _, b in d.crosses}
    blocks = []
    for start in range(1, d.k + 1):
        if start in has_pred:
            continue
        block = [start]
        while block[-1] in successor:
            block.append(successor[block[-1]])
        blocks.append(tuple(block))
    return SetPartition(d.k, tuple(blocks))


def format_set_partition(pi: SetPartition) -> str:
    return " | ".join(" ".join(map(str, b)) for b in pi.blocks)


def parse_set_partition(text: str, k: int | None = None) -> SetPartition:
    """Parse ``"1 2 3 | 4 6 | 5"`` (commas also accepted inside blocks)."""
    try:
        blocks = [tuple(int(x) for x in b.replace(",", " ").split()) for b in text.split("|")]
        return SetPartition.of([b for b in blocks if b] if text.strip() else [], k)
    except (ValueError, VactabError) as exc:
        raise ParseError(f"malformed set partition {text!r}: {exc}") from None


def set_partition_to_json(pi: SetPartition) -> str:
    return json.dumps([list(b) for b in pi.blocks])
