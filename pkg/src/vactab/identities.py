"""Growth-diagram bijections behind six counting identities for vacillating tableaux.

Every pipeline works on the staircase arrangement for parameters (n, k): n
bottom rows of length n+k, topped by k rows of lengths n+k-1, ..., n. Its
top-right boundary splits into a fixed increasing prefix (n+1 labels), a
vacillating tableau of length k, and a fixed decreasing suffix (n+1 labels).

Identities, with the families they relate:

* ``sequences``  n^k = sum_lam f^lam m^lam_(n)(k)
* ``bell``       B_2k = sum_lam (m^lam_(n)(k))^2 = m^(n)_(n)(2k), n >= 2k
* ``bounded``    sum_{l<=n} S(k,l) = m^(n)_(n)(k)
* ``shaped``     n^k = sum_lam f^lam m^lam_mu(k), mu |- n (true only for mu = (n) or (1^n))
* ``column``     S(k,n) + S(k,n-1) = m^(n)_(1^n)(k)
* ``hook``       sum_{l<=n-2} S(k,l) + sum_{l<=n-1} l^2 S(k,l) + (n-1)^2 S(k,n) = m^(n-1,1)_(n-1,1)(k)

Function suffixes follow the same names (``seq_to_pair_row`` is the
``sequences`` map, whose tableaux end at the one-row shape).
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterator, Sequence

from .errors import (
    BadEndpoints,
    BadParams,
    BadShape,
    NotInFamily,
    NTooSmall,
    OutOfRange,
    PropertyViolation,
    ShapeMismatch,
    TooManyBlocks,
    WrongBlockCount,
)
from .growth import CellArrangement, Filling, backward_growth, forward_growth, read_boundary
from .partitions import EMPTY, Partition, column_shape, format_compact, partitions_of, remove_cell, row_shape, truncate
from .setpartitions import (
    DeltaFilling,
    SetPartition,
    enumerate_set_partitions,
    from_delta_filling,
    stirling,
    to_delta_filling,
)
from .tableaux import (
    SytChain,
    VacillatingTableau,
    count_vactab,
    enumerate_vactab,
    reverse_vactab,
    split_vactab,
    sum_f_times_m,
)

Cell = tuple[int, int]
IDENTITIES = ("sequences", "bell", "bounded", "shaped", "column", "hook")
# short numeric ids kept by the command line
ID_ALIASES = dict(zip(("1.1", "1.2", "1.3", "1.4", "1.5", "1.6"), IDENTITIES))


def resolve_identity(name: str) -> str:
    name = ID_ALIASES.get(name, name)
    if name not in IDENTITIES:
        raise BadParams(f"unknown identity {name!r}; choose from {', '.join(IDENTITIES)}")
    return name


@dataclass(frozen=True)
class Staircase:
    n: int
    k: int

    def __post_init__(self) -> None:
        if self.n < 1 or self.k < 0:
            raise BadParams(f"staircase needs n >= 1 and k >= 0, got n={self.n}, k={self.k}")

    @property
    def arrangement(self) -> CellArrangement:
        n, k = self.n, self.k
        return CellArrangement(tuple([n + k] * n + list(range(n + k - 1, n - 1, -1))))

    def top_row(self, t: int) -> int:
        """Global row of the t-th row counted from the top (1-based)."""
        return self.n + self.k + 1 - t


@dataclass(frozen=True)
class BoundaryDecomposition:
    prefix: tuple[Partition, ...]
    middle: VacillatingTableau
    suffix: tuple[Partition, ...]

    def __post_init__(self) -> None:
        if self.prefix[-1] != self.middle.start or self.middle.end != self.suffix[0]:
            raise BadEndpoints("prefix, middle and suffix must share their endpoints")

    @classmethod
    def split(cls, n: int, k: int, labels: Sequence[Partition]) -> "BoundaryDecomposition":
        labels = tuple(labels)
        if len(labels) != 2 * n + 2 * k + 1:
            raise BadShape(f"expected {2 * n + 2 * k + 1} boundary labels, got {len(labels)}")
        return cls(labels[: n + 1], VacillatingTableau(labels[n : n + 2 * k + 1]), labels[n + 2 * k :])

    def labels(self) -> tuple[Partition, ...]:
        return self.prefix + self.middle.seq[1:] + self.suffix[1:]


# fixed tails

def row_chain(n: int) -> tuple[Partition, ...]:
    return tuple(row_shape(i) for i in range(n + 1))


def column_chain(n: int) -> tuple[Partition, ...]:
    return tuple(column_shape(i) for i in range(n + 1))


def hook_chain(n: int) -> tuple[Partition, ...]:
    """Empty, (1), (1,1), (2,1), ..., (n-1,1)."""
    return (EMPTY, Partition((1,))) + tuple(Partition((j, 1)) for j in range(1, n))


def shrink_by_last_row(mu: Partition) -> tuple[Partition, ...]:
    """mu, then repeatedly drop a cell from the last row, down to the empty partition."""
    out = [Partition(mu)]
    while out[-1]:
        out.append(remove_cell(out[-1], len(out[-1])))
    return tuple(out)


# triangle <-> global coordinates (the only place this conversion happens)

def delta_to_global(n: int, k: int, pair: tuple[int, int]) -> Cell:
    """Pair (a, b), a < b, sits in triangle column a and triangle row b counted from the top."""
    a, b = pair
    return n + k + 1 - b, n + a


def global_to_delta(n: int, k: int, cell: Cell) -> tuple[int, int]:
    r, c = cell
    return c - n, n + k + 1 - r


def _in_triangle(n: int, cell: Cell) -> bool:
    return cell[0] > n and cell[1] > n


# shared growth plumbing

def _decompose(n: int, k: int, filling: Filling) -> BoundaryDecomposition:
    return BoundaryDecomposition.split(n, k, read_boundary(forward_growth(filling)).labels)


def _rebuild(n: int, k: int, labels: Sequence[Partition]) -> Filling:
    return backward_growth(Staircase(n, k).arrangement, labels)


def _check_k(k: int, minimum: int = 1) -> None:
    if k < minimum:
        raise BadParams(f"k must be at least {minimum}, got {k}")


def _is_ne_chain(cells: Sequence[Cell]) -> bool:
    ordered = sorted(cells)
    return all(c1 < c2 for (_, c1), (_, c2) in zip(ordered, ordered[1:]))


def _require_full(f: Filling, st: Staircase) -> None:
    arr = st.arrangement
    if f.arrangement != arr:
        raise PropertyViolation("filling is not on the staircase arrangement for these parameters")
    if len(f.crosses) != arr.n_rows or arr.n_rows != arr.n_cols:
        raise PropertyViolation("need exactly one cross in every row and every column")


# sequences: one-row target and arbitrary target

def _check_seq(n: int, k: int, seq: Sequence[int]) -> tuple[int, ...]:
    seq = tuple(int(x) for x in seq)
    if len(seq) != k:
        raise OutOfRange(f"sequence must have length {k}")
    if any(not 1 <= x <= n for x in seq):
        raise OutOfRange(f"sequence entries must lie in 1..{n}")
    return seq


def _top_crosses(n: int, k: int, seq: Sequence[int]) -> tuple[list[Cell], list[int]]:
    st = Staircase(n, k)
    free = list(range(1, n + k + 1))
    crosses = []
    for t, i in enumerate(seq, 1):
        crosses.append((st.top_row(t), free.pop(i - 1)))
    return crosses, free


def _segments(n: int, mu: Partition, free: list[int]) -> list[Cell]:
    """Bottom mu_1 rows take the rightmost mu_1 free columns, the next mu_2 rows the block left of that, ..."""
    crosses = []
    row = 1
    right = len(free)
    for part in mu:
        block = free[right - part : right]
        for col in block:
            crosses.append((row, col))
            row += 1
        right -= part
    return crosses


def seq_to_filling_shaped(n: int, k: int, mu: Partition, seq: Sequence[int]) -> Filling:
    mu = Partition(mu)
    if mu.size != n:
        raise BadShape(f"mu must be a partition of {n}")
    seq = _check_seq(n, k, seq)
    top, free = _top_crosses(n, k, seq)
    return Filling(Staircase(n, k).arrangement, frozenset(top + _segments(n, mu, free)))


def seq_to_filling_row(n: int, k: int, seq: Sequence[int]) -> Filling:
    return seq_to_filling_shaped(n, k, row_shape(n), seq)


def filling_to_seq_shaped(f: Filling, n: int, k: int, mu: Partition) -> tuple[int, ...]:
    """Read the sequence off the top rows after checking the filling belongs to the family for mu."""
    st = Staircase(n, k)
    _require_full(f, st)
    free = list(range(1, n + k + 1))
    seq = []
    for t in range(1, k + 1):
        col = f.col_in_row(st.top_row(t))
        seq.append(free.index(col) + 1)
        free.remove(col)
    expected = set(_segments(n, Partition(mu), free))
    if {(r, f.col_in_row(r)) for r in range(1, n + 1)} != expected:
        raise PropertyViolation("bottom rows are not arranged as the required chains")
    return tuple(seq)


def filling_to_seq_row(f: Filling, n: int, k: int) -> tuple[int, ...]:
    return filling_to_seq_shaped(f, n, k, row_shape(n))


def filling_to_pair_shaped(f: Filling, n: int, k: int, mu: Partition) -> tuple[SytChain, VacillatingTableau]:
    filling_to_seq_shaped(f, n, k, mu)
    dec = _decompose(n, k, f)
    if dec.suffix != shrink_by_last_row(Partition(mu)):
        raise PropertyViolation("boundary suffix is not the expected shrinking chain")
    return SytChain(dec.prefix), dec.middle


def filling_to_pair_row(f: Filling, n: int, k: int) -> tuple[SytChain, VacillatingTableau]:
    return filling_to_pair_shaped(f, n, k, row_shape(n))


def seq_to_pair_shaped(n: int, k: int, mu: Partition, seq: Sequence[int]) -> tuple[SytChain, VacillatingTableau]:
    return filling_to_pair_shaped(seq_to_filling_shaped(n, k, mu, seq), n, k, mu)


def seq_to_pair_row(n: int, k: int, seq: Sequence[int]) -> tuple[SytChain, VacillatingTableau]:
    return seq_to_pair_shaped(n, k, row_shape(n), seq)


def pair_to_seq_shaped(n: int, k: int, mu: Partition, pair: tuple[SytChain, VacillatingTableau]) -> tuple[int, ...]:
    syt, v = pair
    mu = Partition(mu)
    if syt.shape.size != n or v.length != k or syt.shape != v.start or v.end != mu:
        raise ShapeMismatch(
            f"need a tableau of size {n} whose shape starts a length-{k} vacillating tableau ending at {mu}"
        )
    labels = syt.chain + v.seq[1:] + shrink_by_last_row(mu)[1:]
    return filling_to_seq_shaped(_rebuild(n, k, labels), n, k, mu)


def pair_to_seq_row(n: int, k: int, pair: tuple[SytChain, VacillatingTableau]) -> tuple[int, ...]:
    return pair_to_seq_shaped(n, k, row_shape(n), pair)


def all_sequences(n: int, k: int) -> Iterator[tuple[int, ...]]:
    return product(range(1, n + 1), repeat=k)


# set partitions: shared triangle placement

def _triangle_crosses(n: int, k: int, pi: SetPartition) -> tuple[list[Cell], list[int], list[int]]:
    """Global triangle crosses plus the sorted free rows and free columns of the top-right region."""
    if pi.k != k:
        raise BadParams(f"set partition is of 1..{pi.k}, expected 1..{k}")
    delta = [delta_to_global(n, k, p) for p in sorted(to_delta_filling(pi).crosses)]
    free_rows = sorted(n + k + 1 - m for m in pi.minima())
    free_cols = sorted(n + m for m in pi.maxima())
    return delta, free_rows, free_cols


def _triangle_partition(f: Filling, n: int, k: int) -> SetPartition:
    pairs = frozenset(global_to_delta(n, k, x) for x in f.crosses if _in_triangle(n, x))
    return from_delta_filling(DeltaFilling(k, pairs))


def _with_tails(n: int, k: int, f: Filling, prefix: tuple[Partition, ...], suffix: tuple[Partition, ...]) -> VacillatingTableau:
    dec = _decompose(n, k, f)
    if dec.prefix != prefix or dec.suffix != suffix:
        raise PropertyViolation("boundary tails differ from the fixed chains of this family")
    return dec.middle


def _from_middle(n: int, k: int, v: VacillatingTableau, prefix, suffix) -> Filling:
    if v.length != k or v.start != prefix[-1] or v.end != suffix[0]:
        raise BadEndpoints(
            f"need a length-{k} vacillating tableau from {prefix[-1]} to {suffix[0]}"
        )
    return _rebuild(n, k, prefix + v.seq[1:] + suffix[1:])


# set partitions with at most n blocks

def sp_to_filling_bounded(n: int, k: int, pi: SetPartition) -> Filling:
    _check_k(k)
    l = pi.n_blocks
    if l > n:
        raise TooManyBlocks(f"{l} blocks exceed n={n}")
    delta, free_rows, free_cols = _triangle_crosses(n, k, pi)
    crosses = [(i, i) for i in range(1, n - l + 1)] + delta
    crosses += [(r, n - l + i) for i, r in enumerate(free_rows, 1)]
    crosses += [(n - l + i, c) for i, c in enumerate(free_cols, 1)]
    return Filling(Staircase(n, k).arrangement, frozenset(crosses))


def sp_to_vactab_bounded(n: int, k: int, pi: SetPartition) -> VacillatingTableau:
    f = sp_to_filling_bounded(n, k, pi)
    return _with_tails(n, k, f, row_chain(n), row_chain(n)[::-1])


def vactab_to_sp_bounded(n: int, k: int, v: VacillatingTableau) -> SetPartition:
    _check_k(k)
    f = _from_middle(n, k, v, row_chain(n), row_chain(n)[::-1])
    pi = _triangle_partition(f, n, k)
    if sp_to_filling_bounded(n, k, pi) != f:
        raise PropertyViolation("reconstructed filling lies outside the family")
    return pi


# set partitions with n or n-1 blocks

def sp_to_filling_column(n: int, k: int, pi: SetPartition) -> Filling:
    _check_k(k)
    l = pi.n_blocks
    if l not in (n - 1, n):
        raise WrongBlockCount(f"need {n - 1} or {n} blocks, got {l}")
    delta, free_rows, free_cols = _triangle_crosses(n, k, pi)
    crosses = list(delta)
    # free rows form a SE-chain in the first columns: highest row leftmost
    crosses += [(r, i) for i, r in enumerate(sorted(free_rows, reverse=True), 1)]
    first_row = 1 if l == n else 2
    crosses += [(first_row + i, c) for i, c in enumerate(free_cols)]
    if l == n - 1:
        crosses.append((1, n))
    return Filling(Staircase(n, k).arrangement, frozenset(crosses))


def _tails_column(n: int) -> tuple[tuple[Partition, ...], tuple[Partition, ...]]:
    return column_chain(n), row_chain(n)[::-1]


def sp_to_vactab_column(n: int, k: int, pi: SetPartition) -> VacillatingTableau:
    """Returned from (n) to (1^n); the boundary itself reads it in the opposite direction."""
    prefix, suffix = _tails_column(n)
    return reverse_vactab(_with_tails(n, k, sp_to_filling_column(n, k, pi), prefix, suffix))


def vactab_to_sp_column(n: int, k: int, v: VacillatingTableau) -> SetPartition:
    _check_k(k)
    prefix, suffix = _tails_column(n)
    f = _from_middle(n, k, reverse_vactab(v), prefix, suffix)
    pi = _triangle_partition(f, n, k)
    if pi.n_blocks not in (n - 1, n) or sp_to_filling_column(n, k, pi) != f:
        raise PropertyViolation("reconstructed filling lies outside the family")
    return pi


# hook-shaped endpoints

@dataclass(frozen=True)
class HookCode:
    """Data classifying a filling of the hook family: structural case, set partition, two indices."""

    case: int
    partition: SetPartition
    a: int = 1
    b: int = 1


def _has_hook_properties(f: Filling, n: int) -> bool:
    col_of = {r: c for r, c in f.crosses}
    row_of = {c: r for r, c in f.crosses}
    if any(r not in col_of for r in range(1, n + 1)) or any(c not in row_of for c in range(1, n + 1)):
        return False
    if not _is_ne_chain([(r, col_of[r]) for r in range(2, n + 1)]) or col_of[1] < col_of[2]:
        return False
    return _is_ne_chain([(row_of[c], c) for c in range(2, n + 1)]) and row_of[1] > row_of[2]


def enumerate_fillings_hook(n: int, k: int) -> list[Filling]:
    """All family members by brute force over full rook placements (no use of the case structure)."""
    if n < 2:
        raise BadParams("the hook family needs n >= 2")
    _check_k(k)
    arr = Staircase(n, k).arrangement
    out = []
    for seq in all_sequences(n, k):
        top, free = _top_crosses(n, k, seq)
        for perm in permutations(free):
            f = Filling(arr, frozenset(top + [(r, c) for r, c in enumerate(perm, 1)]))
            if _has_hook_properties(f, n):
                out.append(f)
    return sorted(out, key=lambda f: sorted(f.crosses))


def _check_hook_code(n: int, code: HookCode) -> None:
    l = code.partition.n_blocks
    if code.case == 1:
        ok = 1 <= l <= n - 2 and code.a == code.b == 1
    elif code.case == 2:
        ok = 1 <= l <= n - 1 and 1 <= code.a <= l and 1 <= code.b <= l
    elif code.case == 3:
        ok = l == n and 1 <= code.a <= n - 1 and 1 <= code.b <= n - 1
    else:
        ok = False
    if not ok:
        raise NotInFamily(f"invalid code for n={n}: case {code.case}, {l} blocks, a={code.a}, b={code.b}")


def encode_hook(n: int, k: int, code: HookCode) -> Filling:
    if n < 2:
        raise BadParams("the hook family needs n >= 2")
    _check_k(k)
    _check_hook_code(n, code)
    l = code.partition.n_blocks
    delta, R, C = _triangle_crosses(n, k, code.partition)
    crosses = list(delta)
    if code.case == 1:
        crosses += [(1, 2), (2, 1)] + [(i, i) for i in range(3, n - l + 1)]
        crosses += [(r, n - l + i) for i, r in enumerate(R, 1)]
        crosses += [(n - l + i, c) for i, c in enumerate(C, 1)]
    else:
        # case 2: diagonal 2..n-l+1, the rest of the chains fill the top-right of the square
        # case 3: no diagonal; index shifted so column 1 never extends the chain
        pick = code.a - 1 if code.case == 2 else code.a
        pick_c = code.b - 1 if code.case == 2 else code.b
        start = n - l + 2 if code.case == 2 else 2
        if code.case == 2:
            crosses += [(i, i) for i in range(2, n - l + 2)]
        crosses.append((R[pick], 1))
        crosses += [(r, start + i) for i, r in enumerate(R[:pick] + R[pick + 1 :])]
        crosses.append((1, C[pick_c]))
        crosses += [(start + i, c) for i, c in enumerate(C[:pick_c] + C[pick_c + 1 :])]
    return Filling(Staircase(n, k).arrangement, frozenset(crosses))


def classify_hook(f: Filling, n: int, k: int) -> HookCode:
    if f.arrangement != Staircase(n, k).arrangement or not _has_hook_properties(f, n):
        raise NotInFamily("filling does not have the hook-family properties")
    pi = _triangle_partition(f, n, k)
    l = pi.n_blocks
    R = sorted(n + k + 1 - m for m in pi.minima())
    C = sorted(n + m for m in pi.maxima())
    if (1, 2) in f.crosses and (2, 1) in f.crosses:
        code = HookCode(1, pi)
    elif (2, 2) in f.crosses:
        code = HookCode(2, pi, R.index(f.row_in_col(1)) + 1, C.index(f.col_in_row(1)) + 1)
    else:
        row1, col1 = f.row_in_col(1), f.col_in_row(1)
        if row1 not in R or col1 not in C:
            raise NotInFamily("corner crosses are not in the free rows/columns")
        code = HookCode(3, pi, R.index(row1), C.index(col1))
    try:
        ok = encode_hook(n, k, code) == f
    except NotInFamily:
        ok = False
    if not ok:
        raise NotInFamily("filling matches none of the three structural cases")
    return code


def all_hook_codes(n: int, k: int) -> Iterator[HookCode]:
    for pi in enumerate_set_partitions(k):
        l = pi.n_blocks
        if l <= n - 2:
            yield HookCode(1, pi)
        if l <= n - 1:
            for a, b in product(range(1, l + 1), repeat=2):
                yield HookCode(2, pi, a, b)
        if l == n:
            for a, b in product(range(1, n), repeat=2):
                yield HookCode(3, pi, a, b)


def _tails_hook(n: int) -> tuple[tuple[Partition, ...], tuple[Partition, ...]]:
    return hook_chain(n), hook_chain(n)[::-1]


def filling_to_vactab_hook(f: Filling, n: int, k: int) -> VacillatingTableau:
    prefix, suffix = _tails_hook(n)
    return _with_tails(n, k, f, prefix, suffix)


def code_to_vactab_hook(n: int, k: int, code: HookCode) -> VacillatingTableau:
    return filling_to_vactab_hook(encode_hook(n, k, code), n, k)


def vactab_to_code_hook(n: int, k: int, v: VacillatingTableau) -> HookCode:
    if n < 2:
        raise BadParams("the hook family needs n >= 2")
    _check_k(k)
    prefix, suffix = _tails_hook(n)
    return classify_hook(_from_middle(n, k, v, prefix, suffix), n, k)


# limiting tableaux

@dataclass(frozen=True)
class LimitingTableau:
    """Truncated middle shapes; consecutive entries are weakly nested and may coincide."""

    seq: tuple[Partition, ...]

    def __str__(self) -> str:
        toks = [format_compact(self.seq[0])]
        for i, p in enumerate(self.seq[1:]):
            toks.append(">" if i % 2 == 0 else "<")
            toks.append(format_compact(p))
        return "".join(toks)


def offset_bound(seq: Sequence[int]) -> int:
    """max over t of seq[t] + t - 1: below this n the top crosses do not even fit."""
    return max((x + t for t, x in enumerate(seq)), default=1)


def stability_bound(seq: Sequence[int]) -> int:
    """max(seq) + k; from here on the truncated middle no longer depends on n.

    The smaller :func:`offset_bound` is not enough: for seq = (1) the
    truncations at n = 1 and n = 2 differ.
    """
    return max(seq, default=0) + len(seq) if seq else 1


def truncated_middle(k: int, seq: Sequence[int], n: int) -> LimitingTableau:
    _, v = seq_to_pair_row(n, k, seq)
    return LimitingTableau(tuple(truncate(p) for p in v.seq))


def limiting_vactab(k: int, seq: Sequence[int], n: int) -> LimitingTableau:
    seq = tuple(seq)
    if n < stability_bound(seq):
        raise NTooSmall(f"n={n} is below the stability bound {stability_bound(seq)}")
    return truncated_middle(k, seq, n)


# counting both sides

@dataclass(frozen=True)
class IdentityReport:
    identity: str
    n: int
    k: int
    lhs: int
    rhs: int
    middle: int | None = None
    mu: Partition | None = None

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs and (self.middle is None or self.middle == self.lhs)

    def __str__(self) -> str:
        values = [self.lhs] + ([self.middle] if self.middle is not None else []) + [self.rhs]
        return " = ".join(map(str, values)) + (" ok" if self.ok else " mismatch")


def hook_side(n: int, k: int) -> int:
    return (
        sum(stirling(k, l) for l in range(1, n - 1))
        + sum(l * l * stirling(k, l) for l in range(1, n))
        + (n - 1) ** 2 * stirling(k, n)
    )


def verify_identity(identity: str, n: int, k: int, mu: Partition | None = None) -> IdentityReport:
    """Closed (or set-partition) side as ``lhs``, tableau count as ``rhs``."""
    identity = resolve_identity(identity)
    if n < 1 or k < 0:
        raise BadParams("need n >= 1 and k >= 0")
    if identity in ("bounded", "column", "hook"):
        _check_k(k)
    top = row_shape(n)
    if identity == "sequences":
        return IdentityReport(identity, n, k, n**k, sum_f_times_m(n, top, k))
    if identity == "bell":
        if n < 2 * k:
            raise BadParams(f"the bell identity needs n >= 2k (n={n}, k={k})")
        squares = sum(count_vactab(lam, top, k) ** 2 for lam in partitions_of(n))
        return IdentityReport(identity, n, k, len(enumerate_set_partitions(2 * k)),
                              count_vactab(top, top, 2 * k), middle=squares)
    if identity == "bounded":
        return IdentityReport(identity, n, k, sum(stirling(k, l) for l in range(1, n + 1)),
                              count_vactab(top, top, k))
    if identity == "shaped":
        mu = top if mu is None else Partition(mu)
        if mu.size != n:
            raise BadParams(f"mu must be a partition of n={n}")
        return IdentityReport(identity, n, k, n**k, sum_f_times_m(n, mu, k), mu=mu)
    if identity == "column":
        return IdentityReport(identity, n, k, stirling(k, n) + stirling(k, n - 1),
                              count_vactab(top, column_shape(n), k))
    if n < 2:
        raise BadParams("the hook identity needs n >= 2")
    hook = Partition((n - 1, 1))
    return IdentityReport(identity, n, k, hook_side(n, k), count_vactab(hook, hook, k))


def split_pairs(n: int, k: int) -> dict[Partition, int]:
    """Group the length-2k tableaux from (n) to (n) by middle shape via :func:`split_vactab`."""
    top = row_shape(n)
    groups: dict[Partition, int] = {}
    for v in enumerate_vactab(top, top, 2 * k):
        first, _ = split_vactab(v)
        groups[first.end] = groups.get(first.end, 0) + 1
    return groups

