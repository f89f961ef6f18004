"""Truncated q-series and weight-character arithmetic."""

import random
from fractions import Fraction

import pytest

from veronese_jets.errors import TruncationError
from veronese_jets.qseries import LaurentCharacter, QSeries, q_pochhammer


def naive_mul(a, b, qmax):
    # reference convolution, no shortcuts
    out = [Fraction(0)] * (qmax + 1)
    for i, ca in enumerate(a):
        for j, cb in enumerate(b):
            if i + j <= qmax:
                out[i + j] += ca * cb
    return out


def test_basic_arithmetic():
    f = QSeries(4, [1, 2, 3])
    g = QSeries(4, [0, 1, 0, 5])
    assert (f + g).coeffs == [1, 3, 3, 5, 0]
    assert (f - g).coeffs == [1, 1, 3, -5, 0]
    assert (f * 2).coeffs == [2, 4, 6, 0, 0]
    assert f.coefficient(1) == 2
    assert f.coefficient(4) == 0
    with pytest.raises(TruncationError):
        f.coefficient(5)


def test_mul_matches_naive_convolution():
    rng = random.Random(11)
    for _ in range(40):
        qmax = rng.randint(0, 7)
        a = [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(qmax + 1)]
        b = [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(qmax + 1)]
        got = QSeries(qmax, a) * QSeries(qmax, b)
        assert got.coeffs == naive_mul(a, b, qmax)


def test_monomial_shift_truncate():
    m = QSeries.monomial(2, 5, 3)
    assert m.coeffs == [0, 0, 3, 0, 0, 0]
    assert m.shift(2).coeffs == [0, 0, 0, 0, 3, 0]
    assert m.shift(4).coeffs == [0, 0, 0, 0, 0, 0]
    assert m.truncate(2).coeffs == [0, 0, 3]


def test_inverse_against_recursive_oracle():
    rng = random.Random(5)
    for _ in range(20):
        qmax = rng.randint(0, 6)
        coeffs = [Fraction(rng.randint(1, 3))] + [
            Fraction(rng.randint(-3, 3)) for _ in range(qmax)
        ]
        f = QSeries(qmax, coeffs)
        inv = f.inverse()
        # reference: solve sum_{i<=k} c_i * d_{k-i} = [k == 0] one row at a time
        d = [Fraction(1) / coeffs[0]]
        for k in range(1, qmax + 1):
            acc = Fraction(0)
            for i in range(1, k + 1):
                acc += coeffs[i] * d[k - i]
            d.append(-acc / coeffs[0])
        assert inv.coeffs == d
        assert (f * inv).coeffs == [1] + [0] * qmax


def test_inverse_of_pochhammer_frozen():
    # 1/(q)_2 through q^3: partitions into parts <= 2
    inv = q_pochhammer(2, 3).inverse()
    assert inv.coeffs == [1, 1, 2, 2]
    with pytest.raises(ZeroDivisionError):
        QSeries(2, [0, 1]).inverse()


def test_pochhammer_values():
    assert q_pochhammer(0, 3).coeffs == [1, 0, 0, 0]
    assert q_pochhammer(1, 3).coeffs == [1, -1, 0, 0]
    # (1-q)(1-q^2) = 1 - q - q^2 + q^3
    assert q_pochhammer(2, 3).coeffs == [1, -1, -1, 1]


def test_at_one_and_as_ints():
    f = QSeries(3, [1, 2, 0, 4])
    assert f.at_one() == 7
    assert f.as_ints() == [1, 2, 0, 4]
    with pytest.raises(ValueError):
        QSeries(1, [Fraction(1, 2)]).as_ints()


def test_character_arithmetic_and_table():
    f = QSeries(2, [1, 1])
    ch = LaurentCharacter(2, {2: f, -2: f, 0: QSeries(2, [1])})
    assert ch.weights() == [-2, 0, 2]
    assert ch.coefficient(2, 1) == 1
    assert ch.coefficient(4, 0) == 0
    sq = ch * ch
    # weights add; coefficient of weight 4 is f*f
    assert sq.coefficient(4, 2) == (f * f).coefficient(2)
    assert ch.table() == [(-2, [1, 1, 0]), (0, [1, 0, 0]), (2, [1, 1, 0])]
    assert ch.weight_dims_at_one() == {-2: 2, 0: 1, 2: 2}


def test_character_dominates():
    big = LaurentCharacter(2, {0: QSeries(2, [2, 1, 1])})
    small = LaurentCharacter(2, {0: QSeries(2, [1, 1, 0])})
    assert big.dominates(small)
    assert not small.dominates(big)
    # extra weight on the right breaks domination
    wider = LaurentCharacter(2, {0: QSeries(2, [1]), 2: QSeries(2, [1])})
    assert not big.dominates(wider)


def test_character_qmax_mismatch_rejected():
    with pytest.raises(ValueError):
        LaurentCharacter(3, {0: QSeries(2, [1])})
    a = LaurentCharacter(2, {0: QSeries(2, [1])})
    b = LaurentCharacter(3, {0: QSeries(3, [1])})
    with pytest.raises(ValueError):
        a + b
