import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from hyperstate.intrank import bareiss_rank


def matrices(lo=-3, hi=3):
    return st.integers(1, 6).flatmap(
        lambda r: st.integers(1, 6).flatmap(
            lambda c: st.lists(st.lists(st.integers(lo, hi), min_size=c, max_size=c), min_size=r, max_size=r)
        )
    )


@given(matrices())
def test_matches_sympy(rows):
    assert bareiss_rank(rows) == sympy.Matrix(rows).rank()


@given(matrices(-1, 1).filter(lambda rows: all(v != 0 for row in rows for v in row)))
def test_sign_matrices_match_sympy(rows):
    assert bareiss_rank(rows) == sympy.Matrix(rows).rank()


@pytest.mark.parametrize(
    "rows, expected",
    [
        ([[1, 1], [1, -1]], 2),
        ([[1, 1], [1, 1]], 1),
        ([[0, 0], [0, 0]], 0),
        ([[0, 1, 2], [0, 2, 4], [1, 0, 0]], 2),
        ([], 0),
    ],
)
def test_small(rows, expected):
    assert bareiss_rank(rows) == expected


def test_ragged():
    with pytest.raises(ValueError):
        bareiss_rank([[1, 2], [3]])
