import pytest

from vactab.growth import Filling
from vactab.identities import Staircase


def staircase_filling(n, k, col_row_pairs):
    """Build a staircase filling from (column, row) pairs."""
    return Filling(Staircase(n, k).arrangement, frozenset((r, c) for c, r in col_row_pairs))


SEQ_EXAMPLE = [(6, 9), (5, 8), (4, 7), (3, 6), (2, 4), (1, 1), (7, 2), (9, 3), (8, 5)]  # (row, col)
HOOK_CASE1 = [(1, 2), (2, 1), (3, 3), (8, 4), (9, 5), (4, 6), (5, 9), (6, 8), (7, 7)]
HOOK_CASE2 = [(1, 8), (9, 1), (2, 2), (7, 4), (8, 5), (3, 3), (4, 6), (5, 9), (6, 7)]
HOOK_CASE3 = [(1, 8), (9, 1), (5, 2), (7, 4), (6, 5), (8, 3), (2, 6), (3, 9), (4, 7)]
TWO_BLOCK_EXAMPLE = [(1, 2, 3, 4, 5, 7), (6, 8, 9, 10)]


@pytest.fixture
def seq_example_filling():
    return Filling(Staircase(6, 3).arrangement, frozenset(SEQ_EXAMPLE))
