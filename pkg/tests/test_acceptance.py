"""Acceptance criteria, one test each. Every test prints a single PASS/FAIL line."""

import random
import time
from itertools import product

import pytest

from conftest import SEQ_EXAMPLE, TWO_BLOCK_EXAMPLE, staircase_filling
from vactab.cli import load_listing
from vactab.growth import (
    CellArrangement,
    backward_growth,
    enumerate_fillings,
    forward_growth,
    greene_shapes,
    read_boundary,
)
from vactab.identities import (
    filling_to_pair_row,
    offset_bound,
    pair_to_seq_row,
    pair_to_seq_shaped,
    seq_to_filling_row,
    seq_to_pair_shaped,
    sp_to_vactab_bounded,
    sp_to_vactab_column,
    truncated_middle,
    vactab_to_sp_bounded,
    vactab_to_sp_column,
)
from vactab.partitions import Partition, partitions_of
from vactab.setpartitions import (
    SetPartition,
    bell,
    enumerate_set_partitions,
    from_delta_filling,
    parse_set_partition,
    stirling,
    to_delta_filling,
)
from vactab.tableaux import (
    count_syt,
    count_vactab,
    enumerate_vactab,
    format_vactab,
    parse_vactab,
    reverse_vactab,
)

P = Partition


@pytest.fixture
def report(capsys):
    def emit(number, label, ok, detail, elapsed=None, limit=None):
        within = limit is None or elapsed < limit
        timing = "" if elapsed is None else f" [{elapsed:.2f}s, limit {limit}s]"
        line = f"{'PASS' if ok and within else 'FAIL'} criterion {number}: {label}: {detail}{timing}"
        with capsys.disabled():
            print("\n" + line)
        assert ok, line
        assert within, line
    return emit


def _listing(report, number, which, start, end, k, count):
    t0 = time.perf_counter()
    listing = enumerate_vactab(start, end, k)
    elapsed = time.perf_counter() - t0
    produced = {format_vactab(v) for v in listing}
    fixture = set(load_listing(which))
    ok = len(listing) == count and produced == fixture
    report(number, f"reference listing {which}", ok,
           f"{len(listing)} enumerated, {len(fixture)} transcribed, set-equal={produced == fixture}", elapsed, 1)


def test_criterion_01_listing_a(report):
    _listing(report, 1, "A", P((3,)), P((3,)), 5, 41)


def test_criterion_02_listing_b(report):
    _listing(report, 2, "B", P((3,)), P((1, 1, 1)), 5, 40)


def test_criterion_03_listing_c(report):
    _listing(report, 3, "C", P((2, 1)), P((2, 1)), 3, 18)


def test_criterion_04_sequences(report):
    t0 = time.perf_counter()
    bad = [(n, k) for n in range(1, 6) for k in range(5)
           if n**k != sum(count_syt(lam) * count_vactab(lam, P((n,)), k) for lam in partitions_of(n))]
    report(4, "sequence count vs row-shape tableaux, n<=5, k<=4", not bad,
           f"mismatches {bad}", time.perf_counter() - t0, 10)


def test_criterion_05_bell(report):
    t0 = time.perf_counter()
    b4, b6 = len(enumerate_set_partitions(4)), len(enumerate_set_partitions(6))
    squares = sum(count_vactab(lam, P((4,)), 2) ** 2 for lam in partitions_of(4))
    m4, m6 = count_vactab(P((4,)), P((4,)), 4), count_vactab(P((6,)), P((6,)), 6)
    ok = b4 == 15 == squares == m4 and b6 == 203 == m6
    report(5, "Bell numbers", ok, f"B4={b4} squares={squares} m={m4}; B6={b6} m={m6}",
           time.perf_counter() - t0, 60)


def test_criterion_06_up_to_n_blocks(report):
    t0 = time.perf_counter()
    bad = [(n, k) for n in range(1, 5) for k in range(1, 7)
           if sum(stirling(k, l) for l in range(1, n + 1)) != count_vactab(P((n,)), P((n,)), k)]
    report(6, "partitions into at most n blocks, n<=4, 1<=k<=6", not bad,
           f"mismatches {bad}", time.perf_counter() - t0, 30)


def test_criterion_07_any_final_shape(report):
    t0 = time.perf_counter()
    bad = []
    for n in range(1, 5):
        for mu in partitions_of(n):
            for k in range(4):
                total = sum(count_syt(lam) * count_vactab(lam, mu, k) for lam in partitions_of(n))
                if total != n**k:
                    bad.append((n, tuple(mu), k, n**k, total))
    detail = f"{len(bad)} mismatches, e.g. (n, mu, k, lhs, rhs)={bad[:2]}" if bad else "all equal"
    report(7, "sequence count vs tableaux ending at every shape, n<=4, k<=3", not bad,
           detail, time.perf_counter() - t0, 10)


def test_criterion_08_top_two_blocks(report):
    t0 = time.perf_counter()
    bad = [(n, k) for n in range(1, 5) for k in range(1, 7)
           if stirling(k, n) + stirling(k, n - 1) != count_vactab(P((n,)), P((1,) * n), k)]
    report(8, "partitions into n or n-1 blocks, n<=4, 1<=k<=6", not bad,
           f"mismatches {bad}", time.perf_counter() - t0, 30)


def test_criterion_09_hook(report):
    t0 = time.perf_counter()
    bad = []
    for n in range(2, 6):
        for k in range(1, 5):
            lhs = (sum(stirling(k, l) for l in range(1, n - 1))
                   + sum(l * l * stirling(k, l) for l in range(1, n))
                   + (n - 1) ** 2 * stirling(k, n))
            hook = P((n - 1, 1))
            if lhs != count_vactab(hook, hook, k):
                bad.append((n, k))
    report(9, "hook-shape tableaux, 2<=n<=5, 1<=k<=4", not bad,
           f"mismatches {bad}", time.perf_counter() - t0, 30)


def test_criterion_10_worked_examples(report):
    checks = {}
    f = seq_to_filling_row(6, 3, (3, 4, 2))
    syt, v = filling_to_pair_row(f, 6, 3)
    checks["sequences"] = (f == staircase_filling(6, 3, [(c, r) for r, c in SEQ_EXAMPLE])
                           and str(syt) == "1 2 3/4 5/6" and str(v) == "321>32<42>41<51>5<6"
                           and pair_to_seq_row(6, 3, (syt, v)) == (3, 4, 2))
    syt, v = seq_to_pair_shaped(6, 3, P((3, 2, 1)), (2, 2, 3))
    checks["segmented"] = (str(syt) == "1 2/3 5/4/6" and str(v) == "2211>221<2211>221<222>221<321"
                           and pair_to_seq_shaped(6, 3, P((3, 2, 1)), (syt, v)) == (2, 2, 3))
    pi = SetPartition.of(TWO_BLOCK_EXAMPLE)
    v = sp_to_vactab_bounded(3, 10, pi)
    checks["at most n blocks"] = (str(v) == "3>2<3>2<3>2<3>2<3>2<21>2<21>2<21>2<3>2<3>2<3"
                                  and vactab_to_sp_bounded(3, 10, v) == pi)
    pairs = [("1 2 | 3 4 5 7 | 6 8 9 10", "111>11<21>11<111>11<21>11<21>11<21>2<21>2<21>2<3>2<3>2<3"),
             ("1 2 6 8 9 10 | 3 4 5 7", "111>11<21>11<21>2<3>2<3>2<21>2<21>2<21>2<3>2<3>2<3")]
    checks["n or n-1 blocks"] = all(
        str(reverse_vactab(sp_to_vactab_column(3, 10, parse_set_partition(t)))) == s
        and vactab_to_sp_column(3, 10, reverse_vactab(parse_vactab(s))) == parse_set_partition(t)
        for t, s in pairs)
    failed = [name for name, ok in checks.items() if not ok]
    report(10, "worked examples", not failed, f"failed {failed}" if failed else f"{len(checks)} pipelines match")


def _arrangements(max_rows, max_len):
    for rows in range(1, max_rows + 1):
        for lengths in product(range(1, max_len + 1), repeat=rows):
            if all(a >= b for a, b in zip(lengths, lengths[1:])):
                yield CellArrangement(lengths)


def test_criterion_11_growth_exhaustive(report):
    t0 = time.perf_counter()
    arrangements = fillings = 0
    problems = []
    for arr in _arrangements(4, 4):
        arrangements += 1
        for f in enumerate_fillings(arr):
            fillings += 1
            d = forward_growth(f)
            if backward_growth(arr, read_boundary(d)) != f:
                problems.append(("round trip", f))
            for corner, lab in d.labels.items():
                ne, se = greene_shapes(f, *corner)
                if not ne == lab == se:
                    problems.append(("chain statistics", f, corner))
    report(11, "growth round trip and chain statistics, <=4 rows of length <=4", not problems,
           f"{arrangements} arrangements, {fillings} fillings, {len(problems)} problems",
           time.perf_counter() - t0, 120)


def test_criterion_12_truncated_middle(report):
    rng = random.Random(20240611)
    unstable = []
    for _ in range(20):
        k = rng.randint(1, 4)
        seq = tuple(rng.randint(1, 6) for _ in range(k))
        n = offset_bound(seq)
        if truncated_middle(k, seq, n) != truncated_middle(k, seq, n + 3):
            unstable.append(seq)
    detail = f"{len(unstable)} of 20 differ between n=bound and n=bound+3, e.g. {unstable[:3]}"
    report(12, "truncated middle independent of n", not unstable, detail)


def test_criterion_13_structure(report):
    t0 = time.perf_counter()
    asym = [(lam, mu, k) for n in range(1, 5) for lam in partitions_of(n) for mu in partitions_of(n)
            for k in range(5) if count_vactab(lam, mu, k) != count_vactab(mu, lam, k)]
    delta_bad = [pi for k in range(1, 7) for pi in enumerate_set_partitions(k)
                 if from_delta_filling(to_delta_filling(pi)) != pi]
    bell_bad = [k for k in range(9)
                if not sum(stirling(k, l) for l in range(k + 1)) == bell(k) == len(enumerate_set_partitions(k))]
    ok = not (asym or delta_bad or bell_bad)
    report(13, "symmetry, triangle round trip, Stirling sums", ok,
           f"asymmetric {len(asym)}, round-trip failures {len(delta_bad)}, Bell mismatches {bell_bad}",
           time.perf_counter() - t0, 60)
