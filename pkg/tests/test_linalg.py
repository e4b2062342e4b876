from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from frobenius_gluing.linalg import (GF2, QQ, Echelon, FieldChoice, bareiss_rank, kernel_basis,
                                     rank, sparse_rank)


def naive_rank(rows, p=0):
    """Textbook Gaussian elimination over Fractions (or mod p)."""
    m = [[Fraction(x) if not p else x % p for x in r] for r in rows]
    r = 0
    for c in range(len(m[0]) if m else 0):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(len(m)):
            if i != r and m[i][c]:
                if p:
                    f = m[i][c] * pow(m[r][c], -1, p)
                    m[i] = [(a - f * b) % p for a, b in zip(m[i], m[r])]
                else:
                    f = m[i][c] / m[r][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
    return r


def to_columns(rows):
    n_cols = len(rows[0]) if rows else 0
    return [{i: row[j] for i, row in enumerate(rows) if row[j]} for j in range(n_cols)]


matrices = st.integers(1, 7).flatmap(
    lambda n: st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n), min_size=1,
                       max_size=7))


def test_field_choice():
    assert str(QQ) == "QQ" and str(GF2) == "GF(2)"
    assert FieldChoice.prime(7).characteristic == 7
    with pytest.raises(ValueError):
        FieldChoice.prime(6)


def test_bareiss_examples():
    assert bareiss_rank([[1, 2], [2, 4]]) == 1
    assert bareiss_rank([[0, 0], [0, 0]]) == 0
    assert bareiss_rank([[2, 1, 0], [1, 2, 1], [0, 1, 2]]) == 3
    assert bareiss_rank([]) == 0


def test_field_dependent_rank():
    # determinant 2: full rank over Q, rank 1 over GF(2)
    rows = [[1, 1], [1, -1]]
    assert rank(to_columns(rows), 2, QQ) == 2
    assert rank(to_columns(rows), 2, GF2) == 1


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_rank_agrees_with_naive(rows):
    cols = to_columns(rows)
    expected = naive_rank(rows)
    assert bareiss_rank(rows) == expected
    assert sparse_rank(cols, QQ) == expected
    assert rank(cols, len(rows), QQ) == expected


@settings(max_examples=100, deadline=None)
@given(matrices, st.sampled_from([2, 3, 5]))
def test_rank_mod_p(rows, p):
    assert sparse_rank(to_columns(rows), FieldChoice(p)) == naive_rank(rows, p)


@settings(max_examples=100, deadline=None)
@given(matrices, st.sampled_from([0, 2, 3]))
def test_kernel_basis(rows, p):
    field = FieldChoice(p)
    cols = to_columns(rows)
    ker = kernel_basis(cols, field)
    assert len(ker) == len(cols) - naive_rank(rows, p)
    for vec in ker:
        for i in range(len(rows)):
            s = sum(c * cols[j].get(i, 0) for j, c in vec.items())
            assert (s % p if p else s) == 0
    # the kernel vectors are independent
    assert sparse_rank(ker, field) == len(ker)


def test_echelon_add_reports_independence():
    e = Echelon(QQ)
    assert e.add({0: 2, 1: 4})
    assert not e.add({0: 1, 1: 2})
    assert e.add({1: 1})
    assert len(e) == 2
    assert e.reduce({0: 5, 1: 7}) == {}
