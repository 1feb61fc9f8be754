"""Standard Young tableaux as saturated chains, and vacillating tableaux.

A vacillating tableau of length K from lam to mu is a sequence
lam = lam^0 > lam^1 < lam^2 > ... < lam^{2K} = mu in which every step removes
(odd steps) or adds (even steps) exactly one cell. ``count_vactab`` gives
m^lam_mu(K).
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import cache
from typing import Iterator, Sequence

from .errors import BadEndpoints, BadShape, ParseError, SizeMismatch
from .partitions import (
    EMPTY,
    Partition,
    add_cell,
    addable_rows,
    contains,
    diff_by_one,
    format_compact,
    parse_partition,
    partitions_of,
    remove_cell,
    removable_rows,
)


@dataclass(frozen=True)
class SytChain:
    """Saturated chain from the empty partition; equivalent to a standard Young tableau."""

    chain: tuple[Partition, ...]

    def __post_init__(self) -> None:
        chain = tuple(Partition(p) for p in self.chain)
        object.__setattr__(self, "chain", chain)
        if not chain or chain[0] != EMPTY:
            raise BadShape("a standard tableau chain starts at the empty partition")
        for a, b in zip(chain, chain[1:]):
            if b.size != a.size + 1 or not contains(b, a):
                raise BadShape(f"{format_compact(a)} -> {format_compact(b)} does not add one cell")

    @property
    def shape(self) -> Partition:
        return self.chain[-1]

    @property
    def growth_rows(self) -> tuple[int, ...]:
        return tuple(diff_by_one(a, b) for a, b in zip(self.chain, self.chain[1:]))

    def __str__(self) -> str:
        return "/".join(" ".join(map(str, row)) for row in syt_to_tableau(self))


@dataclass(frozen=True)
class VacillatingTableau:
    seq: tuple[Partition, ...]

    def __post_init__(self) -> None:
        seq = tuple(Partition(p) for p in self.seq)
        object.__setattr__(self, "seq", seq)
        if len(seq) % 2 != 1:
            raise BadShape("a vacillating tableau has an odd number of entries")
        for i, (a, b) in enumerate(zip(seq, seq[1:])):
            big, small = (a, b) if i % 2 == 0 else (b, a)
            if big.size != small.size + 1 or not contains(big, small):
                raise BadShape(
                    f"step {i + 1}: {format_compact(a)} -> {format_compact(b)} "
                    f"must {'remove' if i % 2 == 0 else 'add'} one cell"
                )

    @property
    def length(self) -> int:
        return len(self.seq) // 2

    @property
    def start(self) -> Partition:
        return self.seq[0]

    @property
    def end(self) -> Partition:
        return self.seq[-1]

    @property
    def edits(self) -> tuple[int, ...]:
        """Row edited at each step; this is the key of the canonical order."""
        return tuple(diff_by_one(a, b) for a, b in zip(self.seq, self.seq[1:]))

    def __str__(self) -> str:
        return format_vactab(self)


# standard tableaux

@cache
def count_syt(lam: Partition) -> int:
    """f^lam by removing corners recursively."""
    lam = Partition(lam)
    if not lam:
        return 1
    return sum(count_syt(remove_cell(lam, r)) for r in removable_rows(lam))


def enumerate_syt(lam: Partition) -> list[SytChain]:
    lam = Partition(lam)

    def grow(chain: list[Partition]) -> Iterator[tuple[Partition, ...]]:
        cur = chain[-1]
        if cur == lam:
            yield tuple(chain)
            return
        for r in addable_rows(cur):
            if cur.part(r) < lam.part(r):
                chain.append(add_cell(cur, r))
                yield from grow(chain)
                chain.pop()

    return [SytChain(c) for c in grow([EMPTY])]


def syt_to_tableau(chain: SytChain) -> list[list[int]]:
    rows: list[list[int]] = []
    for entry, r in enumerate(chain.growth_rows, 1):
        if r > len(rows):
            rows.append([])
        rows[r - 1].append(entry)
    return rows


def tableau_to_syt(rows: Sequence[Sequence[int]]) -> SytChain:
    where = {}
    for r, row in enumerate(rows, 1):
        for entry in row:
            where[entry] = r
    n = len(where)
    if sorted(where) != list(range(1, n + 1)):
        raise BadShape("entries must be 1..n")
    chain = [EMPTY]
    for entry in range(1, n + 1):
        try:
            chain.append(add_cell(chain[-1], where[entry]))
        except ValueError:
            raise BadShape("rows and columns must increase") from None
    syt = SytChain(tuple(chain))
    if syt_to_tableau(syt) != [list(r) for r in rows]:
        raise BadShape("rows and columns must increase")
    return syt


def parse_syt(text: str) -> SytChain:
    """Rows separated by ``/``, entries by spaces or commas: ``"1 2 3/4 5/6"``."""
    try:
        rows = [[int(x) for x in re.split(r"[ ,]+", row.strip())] for row in text.split("/") if row.strip()]
    except ValueError:
        raise ParseError(f"malformed tableau: {text!r}") from None
    try:
        return tableau_to_syt(rows)
    except BadShape as exc:
        raise ParseError(str(exc)) from None


# vacillating tableaux

@cache
def _count(start: Partition, target: Partition, steps_left: int) -> int:
    if steps_left == 0:
        return 1 if start == target else 0
    # the shape after the next step must be able to reach target
    if abs(start.size - target.size) > steps_left:
        return 0
    if steps_left % 2 == 0:
        return sum(_count(remove_cell(start, r), target, steps_left - 1) for r in removable_rows(start))
    return sum(_count(add_cell(start, r), target, steps_left - 1) for r in addable_rows(start))


def _check_sizes(lam: Partition, mu: Partition) -> None:
    if lam.size != mu.size:
        raise SizeMismatch(f"|{format_compact(lam)}| != |{format_compact(mu)}|")


def count_vactab(lam: Partition, mu: Partition, k: int) -> int:
    """m^lam_mu(k)."""
    lam, mu = Partition(lam), Partition(mu)
    _check_sizes(lam, mu)
    return _count(lam, mu, 2 * k)


def enumerate_vactab(lam: Partition, mu: Partition, k: int) -> list[VacillatingTableau]:
    """All vacillating tableaux from lam to mu of length k, ordered lexicographically by edited rows."""
    lam, mu = Partition(lam), Partition(mu)
    _check_sizes(lam, mu)
    out: list[VacillatingTableau] = []
    seq = [lam]

    def walk(steps_left: int) -> None:
        cur = seq[-1]
        if steps_left == 0:
            if cur == mu:
                out.append(VacillatingTableau(tuple(seq)))
            return
        if steps_left % 2 == 0:
            nexts = [remove_cell(cur, r) for r in removable_rows(cur)]
        else:
            nexts = [add_cell(cur, r) for r in addable_rows(cur)]
        for nxt in nexts:
            if _count(nxt, mu, steps_left - 1):
                seq.append(nxt)
                walk(steps_left - 1)
                seq.pop()

    walk(2 * k)
    return out


def reverse_vactab(v: VacillatingTableau) -> VacillatingTableau:
    return VacillatingTableau(v.seq[::-1])


def split_vactab(v: VacillatingTableau) -> tuple[VacillatingTableau, VacillatingTableau]:
    """Cut a tableau of length 2k from (n) to (n) at its middle.

    Returns the first half and the reversed second half, both running from
    (n) to the middle shape.
    """
    if v.length % 2 or v.start != v.end or len(v.start) > 1:
        raise BadEndpoints("split needs even length and endpoints (n), (n)")
    half = len(v.seq) // 2
    return VacillatingTableau(v.seq[: half + 1]), VacillatingTableau(v.seq[half:][::-1])


def glue_vactab(first: VacillatingTableau, second: VacillatingTableau) -> VacillatingTableau:
    """Inverse of :func:`split_vactab`."""
    if first.end != second.end:
        raise BadEndpoints("halves must share their final shape")
    return VacillatingTableau(first.seq + second.seq[::-1][1:])


def format_vactab(v: VacillatingTableau) -> str:
    toks = [format_compact(v.seq[0])]
    for i, p in enumerate(v.seq[1:]):
        toks.append(">" if i % 2 == 0 else "<")
        toks.append(format_compact(p))
    return "".join(toks)


def parse_vactab(text: str) -> VacillatingTableau:
    """Parse ``"321>32<42>41<51>5<6"``; separators must alternate starting with ``>``."""
    s = text.replace(" ", "").replace("⊃", ">").replace("⊂", "<")
    parts = re.split(r"([<>])", s)
    seps = parts[1::2]
    if any(sep != (">" if i % 2 == 0 else "<") for i, sep in enumerate(seps)):
        raise ParseError(f"separators must alternate >,<: {text!r}")
    try:
        return VacillatingTableau(tuple(parse_partition(p) for p in parts[0::2]))
    except BadShape as exc:
        raise ParseError(str(exc)) from None


def vactab_to_json(v: VacillatingTableau) -> str:
    return json.dumps([list(p) for p in v.seq])


def vactab_from_json(text: str) -> VacillatingTableau:
    try:
        return VacillatingTableau(tuple(Partition(p) for p in json.loads(text)))
    except (ValueError, TypeError) as exc:
        raise ParseError(f"malformed tableau JSON: {exc}") from None


def sum_f_times_m(n: int, mu: Partition, k: int) -> int:
    """sum over lam |- n of f^lam * m^lam_mu(k)."""
    return sum(count_syt(lam) * count_vactab(lam, mu, k) for lam in partitions_of(n))
