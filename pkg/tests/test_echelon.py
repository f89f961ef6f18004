"""Exact echelon kernel: pure-Python and compiled paths must agree."""

import random
from fractions import Fraction

import pytest

from veronese_jets import _echelon_py
from veronese_jets.echelon import KERNEL_IMPLEMENTATION, GradedPieceMatrix

try:
    from veronese_jets import _echelon_cy
except ImportError:
    _echelon_cy = None


def test_rank_of_dependent_rows():
    # x^2 - y^2, x^2 + y^2, x^2 span a 2-dimensional space
    m = GradedPieceMatrix(["x2", "y2"])
    assert m.insert({"x2": 1, "y2": -1})
    assert m.insert({"x2": 1, "y2": 1})
    assert not m.insert({"x2": 1})
    assert m.rank == 2


def test_contains_and_membership():
    m = GradedPieceMatrix(3)
    m.insert({0: 1, 1: 2})
    m.insert({1: 1, 2: 1})
    assert m.contains({0: 2, 1: 5, 2: 1})
    assert not m.contains({0: 1, 1: 1, 2: 1})
    assert m.contains({})


def test_fraction_rows_are_scaled():
    m = GradedPieceMatrix(2)
    m.insert({0: Fraction(1, 3), 1: Fraction(1, 6)})
    rows = m.pivot_rows()
    assert rows == [[(0, Fraction(2)), (1, Fraction(1))]]


def test_duplicate_labels_rejected():
    with pytest.raises(ValueError):
        GradedPieceMatrix(["a", "a"])


def test_unknown_label_rejected():
    m = GradedPieceMatrix(["a", "b"])
    with pytest.raises(ValueError):
        m.insert({"c": 1})


def naive_rank(rows, ncols):
    # dense fraction elimination as the oracle
    mat = [[Fraction(r.get(j, 0)) for j in range(ncols)] for r in rows]
    rank = 0
    for col in range(ncols):
        pivot = None
        for i in range(rank, len(mat)):
            if mat[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = Fraction(1) / mat[rank][col]
        mat[rank] = [v * inv for v in mat[rank]]
        for i in range(len(mat)):
            if i != rank and mat[i][col]:
                f = mat[i][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[rank])]
        rank += 1
    return rank


def test_rank_matches_dense_oracle():
    rng = random.Random(23)
    for _ in range(30):
        ncols = rng.randint(1, 8)
        rows = []
        for _ in range(rng.randint(1, 12)):
            row = {
                j: Fraction(rng.randint(-5, 5), rng.randint(1, 4))
                for j in rng.sample(range(ncols), rng.randint(0, ncols))
            }
            rows.append({j: v for j, v in row.items() if v})
        m = GradedPieceMatrix(ncols)
        for row in rows:
            m.insert(row)
        assert m.rank == naive_rank(rows, ncols)


def test_reduced_rows_are_canonical():
    m = GradedPieceMatrix(3)
    m.insert({0: 2, 1: 2, 2: 4})
    m.insert({1: 3, 2: 3})
    rows = m.reduced_rows()
    # back-substituted, gcd-normalized, leading coefficient positive
    assert rows == [[(0, Fraction(1)), (2, Fraction(1))], [(1, Fraction(1)), (2, Fraction(1))]]


@pytest.mark.skipif(_echelon_cy is None, reason="compiled kernel not built")
def test_pure_and_compiled_kernels_agree():
    assert _echelon_py.IMPLEMENTATION == "python"
    assert _echelon_cy.IMPLEMENTATION == "cython"
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(1, 6)
        cols1 = sorted(rng.sample(range(10), n))
        vals1 = [rng.randint(-9, 9) or 1 for _ in range(n)]
        m = rng.randint(1, 6)
        cols2 = sorted(rng.sample(range(10), m))
        vals2 = [rng.randint(-9, 9) or 1 for _ in range(m)]
        a, b = rng.randint(-5, 5) or 1, rng.randint(-5, 5) or 1
        assert _echelon_py.axpy(a, cols1, vals1, b, cols2, vals2) == _echelon_cy.axpy(
            a, cols1, vals1, b, cols2, vals2
        )
        c1, v1 = list(cols1), list(vals1)
        c2, v2 = list(cols1), list(vals1)
        _echelon_py.normalize(c1, v1)
        _echelon_cy.normalize(c2, v2)
        assert (c1, v1) == (c2, v2)


def test_kernel_selection_reports_something():
    assert KERNEL_IMPLEMENTATION in ("python", "cython")
