"""Jet coordinate rings of Veronese curves and their graded quotients.

For a degree-l Veronese curve the jet ring lives in variables x_j^(i),
0 <= j <= l.  Three ideals are materialized piecewise: the span of the
quadratic relation series coefficients, the span of their leading-term
monomial pairs, and the exact kernel of the substitution
x_j(t) -> a(t)^(l-j) b(t)^j.  Graded quotient dimensions come from exact
row reduction; no Groebner machinery is ever needed because the ideals are
generated in x-degree 2 and respect every grading used here.
"""

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .characters import global_demazure_character, hilbert_leading_quotient
from .echelon import GradedPieceMatrix
from .poly import (
    SparsePoly,
    multidegree,
    render_poly,
    sort_monomials,
    substitute,
    veronese_images,
    x_series,
)
from .qseries import LaurentCharacter, QSeries


@dataclass(frozen=True)
class JetRingSpec:
    """Finite slice descriptor: which graded piece of which jet ring."""

    l: int
    n: int
    qmax: int
    tmax: int

    @classmethod
    def make(cls, l, n, qmax, tmax=None):
        if l < 1:
            raise ValueError("Veronese degree l must be >= 1")
        if n < 0:
            raise ValueError("x-degree n must be >= 0")
        if qmax < 0:
            raise ValueError("qmax must be >= 0")
        if tmax is None:
            tmax = qmax
        if tmax < qmax:
            raise ValueError("tmax must be >= qmax for exact graded pieces")
        return cls(l, n, qmax, tmax)


@dataclass
class RelationCoefficient:
    s: int
    r: int
    w: int
    k: int
    poly: SparsePoly


def relation_index_set(l):
    """All (s, r, w) with r - s >= 2 and 0 <= w <= r - s - 2."""
    return [
        (s, r, w)
        for s in range(l + 1)
        for r in range(s + 2, l + 1)
        for w in range(r - s - 1)
    ]


def relation_series_count(l):
    return sum(r - s - 1 for s in range(l + 1) for r in range(s + 2, l + 1))


def _coefficients_of(series, l, s, r, w, tmax, expect_pair):
    out = []
    for k in range(tmax + 1):
        p = series.coefficient(k)
        if p.is_zero():
            continue
        md = multidegree(p, l)
        # the relation series are homogeneous in everything but deg_prime
        assert md.deg1 == 2
        assert md.deg2 == k + w
        assert md.deg3 == 2 * (r + s) - 2 * l
        if expect_pair:
            assert md.by_var is not None
        out.append(RelationCoefficient(s, r, w, k, p))
    return out


@lru_cache(maxsize=None)
def _quadratic_relations(l, tmax):
    gens = []
    for s, r, w in relation_index_set(l):
        series = None
        for u in range(s, r):
            c = Fraction((-1) ** u * comb(r - s - 1, u - s))
            term = x_series(u, tmax + w).derivative(w) * x_series(r + s - u, tmax)
            term = term * c
            series = term if series is None else series + term
        gens.extend(_coefficients_of(series, l, s, r, w, tmax, expect_pair=False))
    return tuple(gens)


@lru_cache(maxsize=None)
def _leading_relations(l, tmax):
    gens = []
    for s, r, w in relation_index_set(l):
        series = x_series(s, tmax + w).derivative(w) * x_series(r, tmax)
        gens.extend(_coefficients_of(series, l, s, r, w, tmax, expect_pair=True))
    return tuple(gens)


def quadratic_relations(spec):
    """Coefficients of the quadratic relation series through t^tmax.

    Series (s, r, w) is sum_{u=s}^{r-1} (-1)^u C(r-s-1, u-s) times the w-th
    t-derivative of x_u(t) times x_{r+s-u}(t); its t^k coefficients generate
    the jet ideal of the Veronese quadrics.
    """
    return list(_quadratic_relations(spec.l, spec.tmax))


def leading_term_relations(spec):
    """Coefficients of the monomial-pair series: w-th derivative of x_s(t)
    times x_r(t), the deg_prime-leading parts of the quadratic series."""
    return list(_leading_relations(spec.l, spec.tmax))


def relation_dump(spec, kind="quadratic"):
    """Golden-file form: [{s, r, w, k, polynomial}] with canonical text."""
    gens = quadratic_relations(spec) if kind == "quadratic" else leading_term_relations(spec)
    return [
        {"s": g.s, "r": g.r, "w": g.w, "k": g.k, "polynomial": render_poly(g.poly)}
        for g in gens
    ]


def kernel_membership(p, l, order):
    """Exact test that p maps to zero under x_j(t) -> a(t)^(l-j) b(t)^j.

    The substitution is symbolic in the a/b series coefficients through
    t^order, so a True answer is a certificate at that order.
    """
    return substitute(p, veronese_images(l, order)).is_zero()


@lru_cache(maxsize=None)
def _piece_monomials(l, n, k, weight):
    """Ambient monomials with deg1 = n, deg2 = k, deg3 = weight, in
    canonical descending order."""
    total = weight + n * l
    if total < 0 or total % 2 or total > 2 * n * l:
        return ()
    goal_j = total // 2
    found = []

    def extend(slots, j_min, i_min, rem_j, rem_i, acc):
        if slots == 0:
            if rem_j == 0 and rem_i == 0:
                found.append(tuple(acc))
            return
        for j in range(j_min, l + 1):
            if j * slots > rem_j:
                break
            start = i_min if j == j_min else 0
            for i in range(start, rem_i + 1):
                acc.append((j, i))
                extend(slots - 1, j, i, rem_j - j, rem_i - i, acc)
                acc.pop()

    extend(n, 0, 0, goal_j, k, [])
    monos = []
    for pairs in found:
        counts = {}
        for j, i in pairs:
            counts[(j, i)] = counts.get((j, i), 0) + 1
        monos.append(tuple((("x", j, i), e) for (j, i), e in sorted(counts.items())))
    return tuple(sort_monomials(monos))


def _ideal_piece_dim(l, n, k, weight, gens):
    ambient = _piece_monomials(l, n, k, weight)
    if not ambient:
        return 0
    if n < 2:
        return len(ambient)
    matrix = GradedPieceMatrix(list(ambient))
    for g in gens:
        gdeg2 = g.k + g.w
        if gdeg2 > k:
            continue
        gweight = 2 * (g.r + g.s) - 2 * l
        for mono in _piece_monomials(l, n - 2, k - gdeg2, weight - gweight):
            row = g.poly * SparsePoly({mono: Fraction(1)})
            matrix.insert(row.terms)
    return len(ambient) - matrix.rank


def _image_piece_dim(l, n, k, weight, order):
    ambient = _piece_monomials(l, n, k, weight)
    if not ambient:
        return 0
    images = veronese_images(l, order)
    rows = []
    support = set()
    for mono in ambient:
        img = substitute(SparsePoly({mono: Fraction(1)}), images)
        rows.append(img)
        support.update(img.terms)
    matrix = GradedPieceMatrix(sort_monomials(support))
    for img in rows:
        matrix.insert(img.terms)
    return matrix.rank


_IDEAL_KINDS = ("quadratic", "leading", "kernel")


def _piece_dim(spec, ideal, weight, k):
    if ideal == "quadratic":
        return _ideal_piece_dim(spec.l, spec.n, k, weight, _quadratic_relations(spec.l, spec.tmax))
    if ideal == "leading":
        return _ideal_piece_dim(spec.l, spec.n, k, weight, _leading_relations(spec.l, spec.tmax))
    if ideal == "kernel":
        return _image_piece_dim(spec.l, spec.n, k, weight, spec.tmax)
    raise ValueError("unknown ideal kind %r (expected one of %s)" % (ideal, ", ".join(_IDEAL_KINDS)))


def _piece_dim_task(args):
    spec, ideal, weight, k = args
    return weight, k, _piece_dim(spec, ideal, weight, k)


def resolve_workers(workers=None):
    """Worker count: explicit argument, else VERONESE_JETS_WORKERS, else 1."""
    if workers is None:
        raw = os.environ.get("VERONESE_JETS_WORKERS", "")
        workers = int(raw) if raw.strip() else 1
    return max(1, workers)


def quotient_character(spec, ideal="quadratic", workers=None):
    """Character of the x-degree-n piece of the quotient by the chosen ideal.

    For 'quadratic' and 'leading' the piece dimension is the ambient count
    minus the rank of the span of monomial-times-generator rows (exact:
    the ideals are multigraded and generated in x-degree 2).  For 'kernel'
    it is the rank of the substitution image of the ambient piece.
    Distinct (weight, k) pieces are independent; workers > 1 farms them to
    a process pool.
    """
    workers = resolve_workers(workers)
    tasks = [
        (spec, ideal, weight, k)
        for weight in range(-spec.n * spec.l, spec.n * spec.l + 1, 2)
        for k in range(spec.qmax + 1)
    ]
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_piece_dim_task, tasks, chunksize=4))
    else:
        results = [_piece_dim_task(t) for t in tasks]
    dims = {}
    for weight, k, dim in results:
        dims.setdefault(weight, [0] * (spec.qmax + 1))[k] = dim
    terms = {
        weight: QSeries(spec.qmax, coeffs)
        for weight, coeffs in dims.items()
        if any(coeffs)
    }
    return LaurentCharacter(spec.qmax, terms)


def _int_or_str(c):
    c = Fraction(c)
    return int(c) if c.denominator == 1 else str(c)


def verify_reduced(l, nmax, qmax, workers=None):
    """Compare four independently computed characters that must coincide
    exactly when the quadratic ideal cuts out the substitution kernel.

    For every n <= nmax: quotient by the quadratic ideal, quotient by the
    substitution kernel, the global Demazure character, and the
    composition-sum Hilbert series, coefficientwise through qmax.
    """
    results = []
    all_ok = True
    for n in range(nmax + 1):
        spec = JetRingSpec.make(l, n, qmax)
        chars = {
            "quadratic": quotient_character(spec, "quadratic", workers),
            "kernel": quotient_character(spec, "kernel", workers),
            "global_demazure": global_demazure_character(l, n, qmax),
            "hilbert_leading": hilbert_leading_quotient(l, n, qmax),
        }
        weights = sorted(set().union(*(c.terms.keys() for c in chars.values())))
        compared = []
        n_ok = True
        for weight in weights:
            for k in range(qmax + 1):
                vals = {name: c.coefficient(weight, k) for name, c in chars.items()}
                match = len(set(vals.values())) == 1
                n_ok = n_ok and match
                entry = {"weight": weight, "k": k, "match": match}
                entry.update({name: _int_or_str(v) for name, v in vals.items()})
                compared.append(entry)
        results.append({"n": n, "ok": n_ok, "compared": compared})
        all_ok = all_ok and n_ok
    return {"l": l, "nmax": nmax, "qmax": qmax, "ok": all_ok, "results": results}
