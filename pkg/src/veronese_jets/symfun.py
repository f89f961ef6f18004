"""Symmetric polynomials in the spectral variables z_1..z_n.

Provides power sums, elementary symmetric polynomials (optionally with one
variable omitted), the Newton expression of each elementary polynomial in
abstract power-sum variables, and the classical leading-term algorithm that
rewrites any symmetric polynomial first in elementary polynomials and from
there in power sums.  Everything is exact over Fraction.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .poly import SparsePoly, substitute


@lru_cache(maxsize=None)
def power_sum_z(i, n):
    """p_i = z_1^i + ... + z_n^i; p_0 is the constant n."""
    if i < 0 or n < 0:
        raise ValueError("negative index")
    if i == 0:
        return SparsePoly.constant(n)
    return SparsePoly.from_terms(
        [(((("z", j), i),), Fraction(1)) for j in range(1, n + 1)]
    )


@lru_cache(maxsize=None)
def elementary_z(k, n, omit=None):
    """e_k of z_1..z_n, skipping z_omit when omit is given (1-based)."""
    if k < 0 or n < 0:
        raise ValueError("negative index")
    idx = [j for j in range(1, n + 1) if j != omit]
    if k > len(idx):
        return SparsePoly.zero()
    return SparsePoly.from_terms(
        [
            (tuple((("z", j), 1) for j in chosen), Fraction(1))
            for chosen in combinations(idx, k)
        ]
    )


@lru_cache(maxsize=None)
def newton_to_elementary(j):
    """The j-th elementary symmetric polynomial written in abstract power
    sums p_1..p_j via the Newton recursion e_j = (1/j) sum_{i=1}^{j}
    (-1)^(i-1) e_{j-i} p_i."""
    if j < 0:
        raise ValueError("negative index")
    if j == 0:
        return SparsePoly.one()
    acc = SparsePoly.zero()
    for i in range(1, j + 1):
        term = newton_to_elementary(j - i) * SparsePoly.variable(("p", i))
        acc = acc + term * Fraction((-1) ** (i - 1), j)
    return acc


def expand_power_sums(f, n):
    """Substitute p_i -> z_1^i + ... + z_n^i into a power-sum polynomial."""
    degrees = {v[1] for mono in f.terms for v, _ in mono if v[0] == "p"}
    images = {("p", i): power_sum_z(i, n) for i in degrees}
    return substitute(f, images)


def _lex_exponents(mono, n):
    exps = [0] * n
    for v, e in mono:
        if v[0] != "z" or not 1 <= v[1] <= n:
            raise ValueError("expected a polynomial in z_1..z_%d" % n)
        exps[v[1] - 1] = e
    return tuple(exps)


def symmetric_to_elementary(f, n):
    """Write a symmetric polynomial in z_1..z_n as a polynomial in
    e_1..e_n.

    Returns {(m_1..m_n): coefficient} meaning sum of c * e_1^m_1 ... e_n^m_n.
    Repeatedly strips the lex-leading term: a symmetric polynomial's leading
    exponent vector (a_1 >= ... >= a_n) is matched exactly by
    prod_k e_k^(a_k - a_{k+1}).  Raises ValueError if f is not symmetric.
    """
    work = f
    out = {}
    while not work.is_zero():
        lead = max(work.terms, key=lambda m: _lex_exponents(m, n))
        a = _lex_exponents(lead, n) + (0,)
        if any(a[t] < a[t + 1] for t in range(n)):
            raise ValueError("polynomial is not symmetric in z_1..z_%d" % n)
        m = tuple(a[t] - a[t + 1] for t in range(n))
        c = work.terms[lead]
        prod = SparsePoly.one()
        for k, e in enumerate(m, start=1):
            for _ in range(e):
                prod = prod * elementary_z(k, n)
        work = work - prod * c
        out[m] = c
    return out


def to_power_sums(f, n):
    """Write a symmetric polynomial in z_1..z_n as a polynomial in the
    abstract power-sum variables p_1..p_n."""
    total = SparsePoly.zero()
    for m, c in symmetric_to_elementary(f, n).items():
        prod = SparsePoly.constant(c)
        for k, e in enumerate(m, start=1):
            for _ in range(e):
                prod = prod * newton_to_elementary(k)
        total = total + prod
    return total


def omitted_elementary_products(mu, n):
    """q_mu = sum_{i=1}^n prod_{k=1}^n (e_{n-k} without z_i)^(mu_k).

    mu is a composition with n parts; the result is symmetric in z_1..z_n.
    """
    if len(mu) != n:
        raise ValueError("mu needs exactly n parts")
    total = SparsePoly.zero()
    for i in range(1, n + 1):
        prod = SparsePoly.one()
        for idx, e in enumerate(mu):
            factor = elementary_z(n - idx - 1, n, omit=i)
            for _ in range(e):
                prod = prod * factor
        total = total + prod
    return total
