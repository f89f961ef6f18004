"""Closed-form q-combinatorics: Gaussian binomials, supernomials, Demazure
and global Demazure characters, and the composition-sum Hilbert series of
the leading-term quotient.

Everything here is definition-faithful enumeration over exact rationals;
the linear-algebra modules verify these formulas against independently
built objects.
"""

from fractions import Fraction
from functools import lru_cache

from .qseries import LaurentCharacter, QSeries, q_pochhammer


@lru_cache(maxsize=None)
def _qbinom_coeffs(m, k):
    """Full coefficient tuple of the Gaussian binomial [m choose k]_q."""
    if k < 0 or k > m:
        return (0,)
    if k == 0 or k == m:
        return (1,)
    a = _qbinom_coeffs(m - 1, k - 1)
    b = _qbinom_coeffs(m - 1, k)  # enters shifted by q^k
    out = [0] * (k * (m - k) + 1)
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i + k] += c
    return tuple(out)


def qbinom(m, k, qmax):
    """Gaussian binomial coefficient, truncated at qmax; 0 outside 0<=k<=m."""
    if qmax < 0:
        raise ValueError("qmax must be nonnegative")
    return QSeries(qmax, _qbinom_coeffs(m, k))


def supernomial(L, a, qmax):
    """q-supernomial coefficient of the composition L at weight a.

    Direct enumeration of tuples (j_1..j_N) with j_k <= L_k + j_{k+1} and
    sum j_k = (a + L'_N)/2, where L'_N = sum_k k*L_k; the prefactor is
    q^(sum_{k>=2} j_{k-1} (L_k + ... + L_N - j_k)).  Zero when the parity
    constraint a = L'_N (mod 2) fails or |a| exceeds L'_N.
    """
    L = tuple(int(v) for v in L)
    if not L or any(v < 0 for v in L):
        raise ValueError("L must be a nonempty nonnegative integer vector")
    N = len(L)
    weighted = sum((idx + 1) * v for idx, v in enumerate(L))
    out = QSeries.zero(qmax)
    top = a + weighted
    if top % 2 or top < 0 or top > 2 * weighted:
        return out
    target = top // 2
    tails = [sum(L[k:]) for k in range(N + 1)]  # tails[k] = L_{k+1} + ... + L_N
    # wsum[k] = largest possible j_1 + ... + j_k given j_{k+1} = 0
    wsum = [sum((idx + 1) * v for idx, v in enumerate(L[:k])) for k in range(N + 1)]

    tuples = []

    def descend(k, j_next, remaining, acc):
        # choosing j_k, k runs N..1; acc collects (j_N, ..., j_{k+1})
        if k == 0:
            if remaining == 0:
                tuples.append(acc)
            return
        bound = min(L[k - 1] + j_next, remaining)
        for j in range(bound + 1):
            if remaining - j > (k - 1) * j + wsum[k - 1]:
                continue  # lower slots cannot absorb the rest
            descend(k - 1, j, remaining - j, acc + (j,))

    descend(N, 0, target, ())

    for rev in tuples:
        js = rev[::-1]  # js[k-1] = j_k
        shift = 0
        for k in range(2, N + 1):
            shift += js[k - 2] * (tails[k - 1] - js[k - 1])
        if shift > qmax:
            continue
        term = qbinom(L[N - 1], js[N - 1], qmax)
        for k in range(N - 1, 0, -1):
            term = term * qbinom(L[k - 1] + js[k], js[k - 1], qmax)
        out = out + term.shift(shift)
    return out


def demazure_level_vector(l, n):
    """The composition (0, ..., 0, n) of length l feeding the supernomial."""
    if l < 1:
        raise ValueError("level l must be >= 1")
    if n < 0:
        raise ValueError("n must be >= 0")
    return (0,) * (l - 1) + (n,)


def demazure_character(l, n, qmax):
    """Character of the level-l Demazure module with highest weight l*n."""
    L = demazure_level_vector(l, n)
    terms = {}
    for a in range(-l * n, l * n + 1, 2):
        s = supernomial(L, a, qmax)
        if not s.is_zero():
            terms[a] = s
    return LaurentCharacter(qmax, terms)


def global_demazure_character(l, n, qmax):
    """Demazure character divided by (q)_n, the highest-weight algebra factor."""
    inv = q_pochhammer(n, qmax).inverse()
    return demazure_character(l, n, qmax) * inv


def demazure_qdegree_bound(l, n):
    """Upper bound l*n*(n-1)/2 for the top q-degree of the Demazure character.

    Attained for n <= 2 (the true top is l*floor(n^2/4)); safe as a default
    stabilization window because it never undershoots.
    """
    return l * n * (n - 1) // 2


def _compositions(total, parts):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def hilbert_leading_quotient(l, n, qmax):
    """Multigraded Hilbert series of the leading-term quotient, x-degree n.

    Sum over compositions (n_0..n_l) of n of
    e^(sum n_i (2i - l)) * q^(sum_{r-s>=2} n_s n_r (r-s-1)) / prod (q)_{n_i}.
    """
    if l < 1:
        raise ValueError("level l must be >= 1")
    if n < 0:
        raise ValueError("n must be >= 0")
    inv_poch = [q_pochhammer(m, qmax).inverse() for m in range(n + 1)]
    terms = {}
    for comp in _compositions(n, l + 1):
        weight = sum(ni * (2 * i - l) for i, ni in enumerate(comp))
        shift = 0
        for s in range(l + 1):
            if not comp[s]:
                continue
            for r in range(s + 2, l + 1):
                shift += comp[s] * comp[r] * (r - s - 1)
        if shift > qmax:
            continue
        series = QSeries.monomial(shift, qmax)
        for ni in comp:
            series = series * inv_poch[ni]
        terms[weight] = terms.get(weight, QSeries.zero(qmax)) + series
    return LaurentCharacter(qmax, terms)


def weyl_character(l, qmax):
    """Character of the (l+1)-dimensional irreducible sl2 module, q-degree 0."""
    one = Fraction(1)
    return LaurentCharacter(
        qmax, {2 * j - l: QSeries(qmax, (one,)) for j in range(l + 1)}
    )
