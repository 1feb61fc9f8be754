"""Integer partitions and the lattice operations on Ferrers diagrams.

Partitions are stored as weakly decreasing tuples of positive integers, so
equality, hashing and ordering are the tuple ones. Rows are 1-based.
"""
from __future__ import annotations

from functools import cache
from itertools import zip_longest
from typing import Iterable, Iterator

from .errors import BadShape, InvalidCorner, ParseError


class Partition(tuple):
    """A weakly decreasing tuple of positive parts; ``Partition()`` is the empty partition."""

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        if any(p < 1 for p in parts):
            raise BadShape(f"parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise BadShape(f"parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def part(self, row: int) -> int:
        """Length of ``row`` (1-based); 0 past the last row."""
        return self[row - 1] if 1 <= row <= len(self) else 0

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    def __str__(self) -> str:
        return format_partition(self)


EMPTY = Partition()


def contains(mu: Partition, nu: Partition) -> bool:
    """True iff the Ferrers diagram of ``nu`` lies inside that of ``mu``."""
    return len(nu) <= len(mu) and all(b <= a for a, b in zip(mu, nu))


def union(mu: Partition, nu: Partition) -> Partition:
    return Partition(max(a, b) for a, b in zip_longest(mu, nu, fillvalue=0))


def intersect(mu: Partition, nu: Partition) -> Partition:
    return Partition(min(a, b) for a, b in zip(mu, nu))


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return EMPTY
    return Partition(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def can_add(lam: Partition, row: int) -> bool:
    return row >= 1 and row <= len(lam) + 1 and (row == 1 or lam.part(row - 1) > lam.part(row))


def can_remove(lam: Partition, row: int) -> bool:
    return 1 <= row <= len(lam) and lam.part(row) > lam.part(row + 1)


def add_cell(lam: Partition, row: int) -> Partition:
    if not can_add(lam, row):
        raise InvalidCorner(f"cannot add a cell to row {row} of {format_partition(lam)}")
    parts = list(lam) + [0]
    parts[row - 1] += 1
    return Partition(parts)


def remove_cell(lam: Partition, row: int) -> Partition:
    if not can_remove(lam, row):
        raise InvalidCorner(f"cannot remove a cell from row {row} of {format_partition(lam)}")
    parts = list(lam)
    parts[row - 1] -= 1
    return Partition(parts)


def addable_rows(lam: Partition) -> list[int]:
    return [r for r in range(1, len(lam) + 2) if can_add(lam, r)]


def removable_rows(lam: Partition) -> list[int]:
    return [r for r in range(1, len(lam) + 1) if can_remove(lam, r)]


def diff_by_one(a: Partition, b: Partition) -> int | None:
    """Row in which ``a`` and ``b`` differ, provided they differ by exactly one cell."""
    if abs(a.size - b.size) != 1:
        return None
    rows = [i for i, (x, y) in enumerate(zip_longest(a, b, fillvalue=0), 1) if x != y]
    if len(rows) != 1:
        return None
    return rows[0]


@cache
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse lexicographic order, ``(n)`` first."""

    def gen(remaining: int, largest: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    if n < 0:
        return ()
    return tuple(Partition(p) for p in gen(n, n))


def row_shape(n: int) -> Partition:
    return Partition((n,)) if n else EMPTY


def column_shape(n: int) -> Partition:
    return Partition((1,) * n)


def truncate(lam: Partition) -> Partition:
    """Drop the first part."""
    return Partition(lam[1:])


# text formats

def parse_partition(text: str) -> Partition:
    """Parse ``"3,2,1"``, the compact ``"321"`` (parts <= 9 only), or ``"-"`` for the empty partition."""
    s = text.strip()
    if s in ("-", "∅"):
        return EMPTY
    try:
        if "," in s:
            toks = s.split(",")
            if toks[-1] == "" and len(toks) > 1:
                toks.pop()
            parts = [int(tok) for tok in toks]
        elif s.isdigit():
            parts = [int(ch) for ch in s]
        else:
            raise ValueError
    except ValueError:
        raise ParseError(f"malformed partition: {text!r}") from None
    if any(p < 1 for p in parts):
        raise ParseError(f"parts must be positive: {text!r}")
    try:
        return Partition(parts)
    except BadShape:
        raise ParseError(f"not weakly decreasing: {text!r}") from None


def format_partition(lam: Partition) -> str:
    """Canonical comma form; the empty partition is ``"-"``.

    A single part above 9 gets a trailing comma (``"12,"``) so it cannot be
    read back as the compact form.
    """
    if not lam:
        return "-"
    text = ",".join(map(str, lam))
    return text + "," if len(lam) == 1 and lam[0] > 9 else text


def format_compact(lam: Partition) -> str:
    """Compact digit string such as ``"321"``; falls back to commas when a part exceeds 9."""
    if not lam:
        return "-"
    if lam[0] > 9:
        return format_partition(lam)
    return "".join(map(str, lam))
