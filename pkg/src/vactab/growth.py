"""Growth diagrams on left- and bottom-justified cell arrangements.

Coordinates are 1-based from the bottom-left: cell ``(r, c)`` is the c-th cell
of the r-th row counted upward. Corner ``(r, c)`` (0-based lattice point) is
the top-right corner of cell ``(r, c)``, so a cell has corners

    nu=(r, c-1)   lam=(r, c)
    rho=(r-1, c-1) mu=(r-1, c)

and the growth sweep runs row by row from the bottom.
"""
from __future__ import annotations

import json
import re
from bisect import bisect_left
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import InvalidBoundary, InvalidFilling, ParseError, RuleViolation
from .partitions import (
    EMPTY,
    Partition,
    add_cell,
    conjugate,
    contains,
    diff_by_one,
    format_compact,
    intersect,
    parse_partition,
    remove_cell,
    union,
)

Corner = tuple[int, int]
Cell = tuple[int, int]

H, V = "h", "v"


@dataclass(frozen=True)
class CellArrangement:
    """Row lengths listed bottom to top; they must weakly decrease upward."""

    row_lengths: tuple[int, ...]

    def __post_init__(self) -> None:
        lengths = tuple(int(x) for x in self.row_lengths)
        object.__setattr__(self, "row_lengths", lengths)
        if any(x < 1 for x in lengths):
            raise InvalidFilling(f"row lengths must be positive: {lengths}")
        if any(a < b for a, b in zip(lengths, lengths[1:])):
            raise InvalidFilling(f"row lengths must weakly decrease upward: {lengths}")

    @property
    def n_rows(self) -> int:
        return len(self.row_lengths)

    @property
    def n_cols(self) -> int:
        return self.row_lengths[0] if self.row_lengths else 0

    def row_length(self, r: int) -> int:
        return self.row_lengths[r - 1] if 1 <= r <= self.n_rows else 0

    def col_height(self, c: int) -> int:
        return sum(1 for x in self.row_lengths if x >= c)

    def extent(self, r: int) -> int:
        """Largest column index of a corner on horizontal line ``r``."""
        return self.row_length(max(r, 1))

    def __contains__(self, cell: Cell) -> bool:
        r, c = cell
        return 1 <= r <= self.n_rows and 1 <= c <= self.row_length(r)

    def cells(self) -> Iterator[Cell]:
        for r, length in enumerate(self.row_lengths, 1):
            for c in range(1, length + 1):
                yield r, c

    def corners(self) -> Iterator[Corner]:
        for r in range(self.n_rows + 1):
            for c in range(self.extent(r) + 1):
                yield r, c

    def boundary_path(self) -> tuple[list[Corner], list[str]]:
        """Corners of the top-right boundary from top-left to bottom-right, with step directions."""
        if not self.row_lengths:
            return [(0, 0)], []
        r = self.n_rows
        path: list[Corner] = [(r, 0)]
        steps: list[str] = []
        c = 0
        while r > 0:
            while c < self.row_length(r):
                c += 1
                path.append((r, c))
                steps.append(H)
            r -= 1
            path.append((r, c))
            steps.append(V)
        return path, steps


@dataclass(frozen=True)
class Filling:
    """Crosses on an arrangement, at most one per row and per column."""

    arrangement: CellArrangement
    crosses: frozenset[Cell] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        crosses = frozenset((int(r), int(c)) for r, c in self.crosses)
        object.__setattr__(self, "crosses", crosses)
        for cell in crosses:
            if cell not in self.arrangement:
                raise InvalidFilling(f"cross {cell} lies outside the arrangement")
        if len({r for r, _ in crosses}) != len(crosses):
            raise InvalidFilling("two crosses share a row")
        if len({c for _, c in crosses}) != len(crosses):
            raise InvalidFilling("two crosses share a column")

    @classmethod
    def of(cls, row_lengths: Sequence[int], crosses: Iterable[Cell]) -> "Filling":
        return cls(CellArrangement(tuple(row_lengths)), frozenset(crosses))

    def col_in_row(self, r: int) -> int | None:
        for rr, c in self.crosses:
            if rr == r:
                return c
        return None

    def row_in_col(self, c: int) -> int | None:
        for r, cc in self.crosses:
            if cc == c:
                return r
        return None

    def to_json(self) -> str:
        return json.dumps({"rows": list(self.arrangement.row_lengths),
                           "crosses": [list(x) for x in sorted(self.crosses)]})

    @classmethod
    def from_json(cls, text: str) -> "Filling":
        try:
            data = json.loads(text)
            rows = [int(x) for x in data["rows"]]
            crosses = [(int(r), int(c)) for r, c in data.get("crosses", [])]
        except (ValueError, KeyError, TypeError) as exc:
            raise ParseError(f"malformed filling JSON: {exc}") from None
        return cls.of(rows, crosses)


@dataclass(frozen=True)
class BoundaryWord:
    """Labels along the top-right boundary, top-left corner first."""

    labels: tuple[Partition, ...]
    steps: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "labels", tuple(Partition(p) for p in self.labels))
        object.__setattr__(self, "steps", tuple(self.steps))
        validate_boundary(self.labels, self.steps)

    def __str__(self) -> str:
        return format_boundary(self)


@dataclass
class GrowthDiagram:
    filling: Filling
    labels: dict[Corner, Partition]

    @property
    def arrangement(self) -> CellArrangement:
        return self.filling.arrangement

    def __getitem__(self, corner: Corner) -> Partition:
        return self.labels[corner]


def enumerate_fillings(arrangement: CellArrangement) -> Iterator[Filling]:
    """Every placement of crosses with at most one per row and per column."""

    def place(r: int, used: frozenset[int], chosen: list[Cell]) -> Iterator[Filling]:
        if r > arrangement.n_rows:
            yield Filling(arrangement, frozenset(chosen))
            return
        yield from place(r + 1, used, chosen)
        for c in range(1, arrangement.row_length(r) + 1):
            if c not in used:
                chosen.append((r, c))
                yield from place(r + 1, used | {c}, chosen)
                chosen.pop()

    yield from place(1, frozenset(), [])


# local rules

def local_forward(rho: Partition, nu: Partition, mu: Partition, has_cross: bool) -> Partition:
    """Label of the top-right corner of a cell from its other three corners."""
    if has_cross:
        if not (rho == mu == nu):
            raise RuleViolation("cross in a cell whose corners are not all equal")
        return add_cell(rho, 1)
    if rho == mu == nu:
        return rho
    for side in (mu, nu):
        if side != rho and not (contains(side, rho) and side.size == rho.size + 1):
            raise RuleViolation(f"{side} does not cover {rho}")
    if rho == mu:
        return nu
    if rho == nu:
        return mu
    if mu != nu:
        return union(mu, nu)
    k = diff_by_one(rho, mu)
    return add_cell(mu, k + 1)


def local_backward(lam: Partition, nu: Partition, mu: Partition) -> tuple[Partition, bool]:
    """Bottom-left label of a cell and whether the cell holds a cross."""
    for side in (mu, nu):
        if side != lam and not (contains(lam, side) and side.size + 1 == lam.size):
            raise RuleViolation(f"{side} is not covered by {lam}")
    if lam == mu == nu:
        return lam, False
    if lam == mu:
        return nu, False
    if lam == nu:
        return mu, False
    if mu != nu:
        return intersect(mu, nu), False
    k = diff_by_one(lam, mu)
    if k == 1:
        return mu, True
    return remove_cell(mu, k - 1), False


# global constructions

def forward_growth(filling: Filling) -> GrowthDiagram:
    arr = filling.arrangement
    labels: dict[Corner, Partition] = {}
    for r in range(arr.n_rows + 1):
        for c in range(arr.extent(r) + 1):
            if r == 0 or c == 0:
                labels[r, c] = EMPTY
    for r, c in arr.cells():
        labels[r, c] = local_forward(
            labels[r - 1, c - 1], labels[r, c - 1], labels[r - 1, c], (r, c) in filling.crosses
        )
    return GrowthDiagram(filling, labels)


def read_boundary(diagram: GrowthDiagram) -> BoundaryWord:
    path, steps = diagram.arrangement.boundary_path()
    return BoundaryWord(tuple(diagram.labels[p] for p in path), tuple(steps))


def validate_boundary(labels: Sequence[Partition], steps: Sequence[str]) -> None:
    if len(labels) != len(steps) + 1:
        raise InvalidBoundary("need exactly one more label than steps")
    if labels[0] != EMPTY or labels[-1] != EMPTY:
        raise InvalidBoundary("boundary must start and end with the empty partition")
    for i, (a, b, step) in enumerate(zip(labels, labels[1:], steps)):
        if step == H:
            small, big = a, b
        elif step == V:
            small, big = b, a
        else:
            raise InvalidBoundary(f"unknown step {step!r}")
        if small == big:
            continue
        if not (contains(big, small) and big.size == small.size + 1):
            raise InvalidBoundary(
                f"step {i + 1} ({step}) from {format_compact(a)} to {format_compact(b)} is not a legal edge"
            )


def backward_growth(arrangement: CellArrangement, boundary: BoundaryWord | Sequence[Partition]) -> Filling:
    """Reconstruct the unique filling whose growth diagram has the given boundary."""
    path, steps = arrangement.boundary_path()
    if isinstance(boundary, BoundaryWord):
        if tuple(boundary.steps) != tuple(steps):
            raise InvalidBoundary("boundary steps do not match the arrangement's shape")
        word = boundary.labels
    else:
        word = tuple(Partition(p) for p in boundary)
        if len(word) != len(path):
            raise InvalidBoundary(f"expected {len(path)} boundary labels, got {len(word)}")
        validate_boundary(word, steps)
    labels: dict[Corner, Partition] = dict(zip(path, word))
    crosses = set()
    for r in range(arrangement.n_rows, 0, -1):
        for c in range(arrangement.row_length(r), 0, -1):
            rho, cross = local_backward(labels[r, c], labels[r, c - 1], labels[r - 1, c])
            prev = labels.get((r - 1, c - 1))
            if prev is not None and prev != rho:
                raise InvalidBoundary(f"inconsistent label at corner {(r - 1, c - 1)}")
            labels[r - 1, c - 1] = rho
            if cross:
                crosses.add((r, c))
    for (r, c), lab in labels.items():
        if (r == 0 or c == 0) and lab != EMPTY:
            raise InvalidBoundary(f"left/bottom corner {(r, c)} reconstructed as {format_compact(lab)}")
    try:
        return Filling(arrangement, frozenset(crosses))
    except InvalidFilling as exc:
        raise InvalidBoundary(str(exc)) from None


def check_growth_conditions(diagram: GrowthDiagram) -> list[str]:
    """Violations of the two defining conditions of a growth diagram, read literally."""
    arr, lab, crosses = diagram.arrangement, diagram.labels, diagram.filling.crosses
    problems = []

    def covers(big: Partition, small: Partition) -> bool:
        return big == small or (contains(big, small) and big.size == small.size + 1)

    for (r, c), here in lab.items():
        right, top = lab.get((r, c + 1)), lab.get((r + 1, c))
        if right is not None:
            if not covers(right, here):
                problems.append(f"C1 horizontal at {(r, c)}")
            if r > 0:
                column_clear = not any(cc == c + 1 and rr <= r for rr, cc in crosses)
                bottoms_equal = lab[r - 1, c] == lab[r - 1, c + 1]
                if (here == right) != (column_clear and bottoms_equal):
                    problems.append(f"C2 horizontal at {(r, c)}")
        if top is not None:
            if not covers(top, here):
                problems.append(f"C1 vertical at {(r, c)}")
            if c > 0:
                row_clear = not any(rr == r + 1 and cc <= c for rr, cc in crosses)
                lefts_equal = lab[r, c - 1] == lab[r + 1, c - 1]
                if (here == top) != (row_clear and lefts_equal):
                    problems.append(f"C2 vertical at {(r, c)}")
    return problems


# Greene oracle: brute force over subsets of crosses, no local rules involved.

def _longest_monotone(points: Sequence[Cell], increasing: bool) -> int:
    tails: list[int] = []
    for row, _ in sorted(points, key=lambda p: p[1]):
        key = row if increasing else -row
        i = bisect_left(tails, key)
        if i == len(tails):
            tails.append(key)
        else:
            tails[i] = key
    return len(tails)


def _chain_union_stats(points: Sequence[Cell]) -> tuple[list[int], list[int]]:
    """``ne[j]``/``se[j]``: max size of a union of j NE-/SE-chains, j = 0..len(points).

    A set is a union of j NE-chains iff its longest SE-chain has length <= j
    (the crosses form a permutation poset), and symmetrically.
    """
    m = len(points)
    ne = [0] * (m + 1)
    se = [0] * (m + 1)
    for size in range(m, -1, -1):
        for subset in combinations(points, size):
            longest_ne = _longest_monotone(subset, True)
            longest_se = _longest_monotone(subset, False)
            for j in range(longest_se, m + 1):
                ne[j] = max(ne[j], size)
            for j in range(longest_ne, m + 1):
                se[j] = max(se[j], size)
    return ne, se


def _crosses_below(filling: Filling, r: int, c: int) -> list[Cell]:
    return [(rr, cc) for rr, cc in filling.crosses if rr <= r and cc <= c]


def ne_chain_stat(filling: Filling, r: int, c: int, j: int) -> int:
    points = _crosses_below(filling, r, c)
    ne, _ = _chain_union_stats(points)
    return ne[min(j, len(points))]


def se_chain_stat(filling: Filling, r: int, c: int, j: int) -> int:
    points = _crosses_below(filling, r, c)
    _, se = _chain_union_stats(points)
    return se[min(j, len(points))]


def greene_shape(filling: Filling, r: int, c: int) -> Partition:
    """Shape at corner ``(r, c)`` predicted by chain-union sizes in the rectangle below-left."""
    ne, _ = _chain_union_stats(_crosses_below(filling, r, c))
    return Partition(ne[j] - ne[j - 1] for j in range(1, len(ne)))


def greene_shapes(filling: Filling, r: int, c: int) -> tuple[Partition, Partition]:
    """NE-derived shape and the conjugate of the SE-derived shape; equal when both clauses hold."""
    ne, se = _chain_union_stats(_crosses_below(filling, r, c))
    from_ne = Partition(ne[j] - ne[j - 1] for j in range(1, len(ne)))
    from_se = Partition(se[j] - se[j - 1] for j in range(1, len(se)))
    return from_ne, conjugate(from_se)


# text

def format_boundary(word: BoundaryWord) -> str:
    """``<``/``>`` separators when every step changes size, else ``h<``, ``h=``, ``v>``, ``v=``."""
    toks = [format_compact(word.labels[0])]
    short = all(a != b for a, b in zip(word.labels, word.labels[1:]))
    for a, b, step in zip(word.labels, word.labels[1:], word.steps):
        if short:
            sep = "<" if step == H else ">"
        else:
            sep = step + ("=" if a == b else ("<" if step == H else ">"))
        toks.append(sep)
        toks.append(format_compact(b))
    return "".join(toks)


def parse_boundary(text: str) -> BoundaryWord:
    parts = re.split(r"(h<|h=|v>|v=|<|>)", text.replace(" ", ""))
    labels = [parse_partition(p) for p in parts[0::2]]
    steps = []
    for sep in parts[1::2]:
        if sep in ("<", "h<", "h="):
            steps.append(H)
        else:
            steps.append(V)
    for sep, a, b in zip(parts[1::2], labels, labels[1:]):
        if sep.endswith("=") and a != b:
            raise ParseError(f"flat step {sep!r} between different labels")
    return BoundaryWord(tuple(labels), tuple(steps))


def render_ascii(diagram: GrowthDiagram) -> str:
    """Corner labels in compact notation, ``X`` for crosses, ``.`` for empty cells."""
    arr = diagram.arrangement
    width = max(len(format_compact(p)) for p in diagram.labels.values())
    lines = []
    for r in range(arr.n_rows, -1, -1):
        if r < arr.n_rows:
            row = r + 1
            cells = [" " * width]
            for c in range(1, arr.row_length(row) + 1):
                cells.append(" X " if (row, c) in diagram.filling.crosses else " . ")
                cells.append(" " * width)
            lines.append("".join(cells).rstrip())
        corner_line = []
        for c in range(arr.extent(r) + 1):
            if c:
                corner_line.append("   ")
            corner_line.append(format_compact(diagram.labels[r, c]).ljust(width))
        lines.append("".join(corner_line).rstrip())
    return "\n".join(lines)
