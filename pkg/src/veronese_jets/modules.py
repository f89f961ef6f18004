"""Cyclic sl2 current modules realized inside C[u_1..u_n, z_1..z_n].

The ambient ring carries the nilpotency mask u_j^(l+1) = 0.  The module is
the closure of 1 under multiplication by the power sums p_i = sum z_j^i and
the lowering generators g_i = sum u_j z_j^i, built piece by piece in the
bigrading (u-degree, z-degree).  On top of the closure: current-operator
actions and a closure report, exact fiber dimensions of the family over the
power-sum base, a fusion-style filtration character for tensor products of
irreducibles at distinct points, and the symmetric-function identities the
module relations come from.
"""

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .characters import _compositions, demazure_qdegree_bound
from .echelon import GradedPieceMatrix
from .errors import StabilizationError
from .poly import SparsePoly, render_poly, sort_monomials, var_key
from .qseries import LaurentCharacter, QSeries
from .symfun import elementary_z, power_sum_z


@dataclass(frozen=True)
class ModuleSpec:
    """Which closure to build: sl2 level l, n spectral slots, q-degree cap."""

    l: int
    n: int
    qmax: int

    @classmethod
    def make(cls, l, n, qmax):
        if l < 1:
            raise ValueError("level l must be >= 1")
        if n < 0:
            raise ValueError("slot count n must be >= 0")
        if qmax < 0:
            raise ValueError("qmax must be >= 0")
        return cls(l, n, qmax)


@lru_cache(maxsize=None)
def power_sum(i, n, umax):
    """p_i = z_1^i + ... + z_n^i with the nilpotency mask attached."""
    if i == 0:
        return SparsePoly.constant(n, umax)
    return SparsePoly.from_terms(
        [(((("z", j), i),), Fraction(1)) for j in range(1, n + 1)], umax
    )


@lru_cache(maxsize=None)
def lowering_sum(i, n, umax):
    """g_i = u_1 z_1^i + ... + u_n z_n^i with the nilpotency mask attached."""
    monos = []
    for j in range(1, n + 1):
        if i == 0:
            monos.append(((("u", j), 1),))
        else:
            monos.append(((("u", j), 1), (("z", j), i)))
    return SparsePoly.from_terms([(m, Fraction(1)) for m in monos], umax)


def _bounded_compositions(total, parts, bound):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(min(total, bound) + 1):
        for rest in _bounded_compositions(total - first, parts - 1, bound):
            yield (first,) + rest


@lru_cache(maxsize=None)
def module_monomials(l, n, d, k):
    """Monomials of u-degree d (each u-exponent <= l) and z-degree k, in
    canonical descending order."""
    if d < 0 or k < 0:
        return ()
    monos = []
    for ue in _bounded_compositions(d, n, l):
        upairs = [(("u", j + 1), e) for j, e in enumerate(ue) if e]
        for ze in _compositions(k, n):
            zpairs = [(("z", j + 1), e) for j, e in enumerate(ze) if e]
            monos.append(tuple(upairs + zpairs))
    return tuple(sort_monomials(monos))


def u_z_bidegree(p):
    """(u-degree, z-degree) of a bihomogeneous polynomial in u/z variables."""
    if p.is_zero():
        raise ValueError("zero polynomial has no bidegree")
    got = None
    for mono in p.terms:
        d = k = 0
        for v, e in mono:
            if v[0] == "u":
                d += e
            elif v[0] == "z":
                k += e
            else:
                raise ValueError("expected u/z variables only")
        if got is None:
            got = (d, k)
        elif got != (d, k):
            raise ValueError("polynomial is not bihomogeneous in (u, z) degrees")
    return got


class GradedBasis:
    """Exact bases of the bigraded pieces of a cyclic closure.

    matrices maps (d, k) to the echelon span of the piece of u-degree d and
    z-degree k; polys holds the corresponding basis polynomials.  The sl2
    weight of u-degree d is l*n - 2*d.
    """

    def __init__(self, spec, matrices, polys):
        self.spec = spec
        self.matrices = matrices
        self.polys = polys

    def dimension(self, d, k):
        m = self.matrices.get((d, k))
        return m.rank if m is not None else 0

    def total_dimension(self):
        return sum(m.rank for m in self.matrices.values())

    def character(self):
        spec = self.spec
        dims = {}
        for (d, k), m in self.matrices.items():
            w = spec.l * spec.n - 2 * d
            dims.setdefault(w, [0] * (spec.qmax + 1))[k] = m.rank
        terms = {
            w: QSeries(spec.qmax, coeffs) for w, coeffs in dims.items() if any(coeffs)
        }
        return LaurentCharacter(spec.qmax, terms)

    def contains(self, p):
        if p.is_zero():
            return True
        d, k = u_z_bidegree(p)
        m = self.matrices.get((d, k))
        return m is not None and m.contains(p.terms)

    def dump(self):
        """Canonical listing: [{weight, qdeg, dim, basis}] with fully
        reduced basis polynomials as text."""
        out = []
        for d, k in sorted(self.matrices):
            m = self.matrices[(d, k)]
            out.append(
                {
                    "weight": self.spec.l * self.spec.n - 2 * d,
                    "qdeg": k,
                    "dim": m.rank,
                    "basis": [
                        render_poly(SparsePoly.from_terms(row, self.spec.l))
                        for row in m.reduced_rows()
                    ],
                }
            )
        return out


def build_global_demazure(spec):
    """Close {1} under the p_i (1 <= i <= qmax) and g_i (0 <= i <= qmax).

    Pieces are processed in lexicographic order of (k, d); multiplication by
    p_i feeds (d, k) from (d, k - i) and by g_i from (d - 1, k - i), so
    every piece is complete the moment it is visited and no worklist is
    needed.
    """
    l, n, qmax = spec.l, spec.n, spec.qmax
    p_gens = {i: power_sum(i, n, l) for i in range(1, qmax + 1)}
    g_gens = {i: lowering_sum(i, n, l) for i in range(qmax + 1)}
    matrices = {}
    polys = {}

    def feed(target, p):
        if p.is_zero():
            return
        m = matrices.get(target)
        if m is None:
            cols = module_monomials(l, n, target[0], target[1])
            if not cols:
                return
            m = matrices[target] = GradedPieceMatrix(list(cols))
        m.insert(p.terms)

    for k in range(qmax + 1):
        for d in range(l * n + 1):
            target = (d, k)
            if target == (0, 0):
                feed(target, SparsePoly.one(l))
            for i in range(1, k + 1):
                for b in polys.get((d, k - i), ()):
                    feed(target, b * p_gens[i])
            for i in range(k + 1):
                for b in polys.get((d - 1, k - i), ()):
                    feed(target, b * g_gens[i])
            m = matrices.get(target)
            if m is not None:
                polys[target] = [SparsePoly.from_terms(row, l) for row in m.pivot_rows()]
    return GradedBasis(spec, matrices, polys)


def _adjust(mono, changes):
    exps = dict(mono)
    for v, delta in changes:
        e = exps.get(v, 0) + delta
        if e < 0:
            raise ValueError("negative exponent after adjustment")
        if e:
            exps[v] = e
        elif v in exps:
            del exps[v]
    return tuple(sorted(exps.items(), key=lambda ve: var_key(ve[0])))


def apply_current(kind, i, p, l, n):
    """Action of the current operators on a masked module polynomial.

    f t^i is multiplication by g_i; h t^i scales each monomial slotwise by
    l - 2*(u-exponent) and appends z_j^i; e t^i lowers one u-exponent with
    coefficient a*(l - a + 1) and appends z_j^i.
    """
    if i < 0:
        raise ValueError("negative current degree")
    if kind == "f":
        return p * lowering_sum(i, n, l)
    if kind not in ("e", "h"):
        raise ValueError("operator kind must be 'e', 'h' or 'f'")
    pairs = []
    for mono, c in p.terms.items():
        exps = dict(mono)
        for j in range(1, n + 1):
            a = exps.get(("u", j), 0)
            if kind == "h":
                coeff = c * (l - 2 * a)
                if coeff:
                    pairs.append((_adjust(mono, [(("z", j), i)]), coeff))
            elif a:
                coeff = c * a * (l - a + 1)
                pairs.append((_adjust(mono, [(("u", j), -1), (("z", j), i)]), coeff))
    return SparsePoly.from_terms(pairs, p.umax)


def operator_closure_report(basis):
    """Verify the closure is stable under e, h, f in every current degree
    that stays within the q-degree window."""
    spec = basis.spec
    shift = {"e": -1, "h": 0, "f": 1}
    checked = {"e": 0, "h": 0, "f": 0}
    failures = []
    for d, k in sorted(basis.polys):
        for b in basis.polys[(d, k)]:
            for i in range(spec.qmax - k + 1):
                for kind in ("e", "h", "f"):
                    img = apply_current(kind, i, b, spec.l, spec.n)
                    checked[kind] += 1
                    if img.is_zero():
                        continue
                    m = basis.matrices.get((d + shift[kind], k + i))
                    if m is None or not m.contains(img.terms):
                        failures.append({"kind": kind, "i": i, "d": d, "k": k})
    return {"checked": checked, "failures": failures, "ok": not failures}


def default_fiber_qmax(l, n):
    """One past the top q-degree of the level-l, n-slot character; the two
    windows qmax-1 and qmax then both exceed every generator degree."""
    return demazure_qdegree_bound(l, n) + 1


def _newton_power_sum_check(n, qmax):
    """p_m for m > n equals sum_j (-1)^(j+1) e_j p_{m-j} identically, so the
    fiber ideal is generated by p_1 - c_1 .. p_n - c_n alone."""
    for m in range(n + 1, qmax + 1):
        rhs = SparsePoly.zero()
        for j in range(1, n + 1):
            term = elementary_z(j, n) * power_sum_z(m - j, n)
            rhs = rhs + term * Fraction((-1) ** (j + 1))
        if power_sum_z(m, n) != rhs:
            return False
    return True


def _fiber_window_dims(basis, pvals, window):
    spec = basis.spec
    l, n = spec.l, spec.n
    out = {}
    for d in range(l * n + 1):
        ks = [k for k in range(window + 1) if (d, k) in basis.matrices]
        if not ks:
            continue
        dim_m = sum(basis.matrices[(d, k)].rank for k in ks)
        labels = [mono for k in ks for mono in module_monomials(l, n, d, k)]
        relmat = GradedPieceMatrix(labels)
        for k in ks:
            for b in basis.polys[(d, k)]:
                for i in range(1, n + 1):
                    if k + i > window:
                        continue
                    rel = b * power_sum(i, n, l) - b * pvals[i]
                    relmat.insert(rel.terms)
        out[l * n - 2 * d] = dim_m - relmat.rank
    return out


@dataclass
class FiberReport:
    l: int
    n: int
    qmax: int
    point: tuple
    total: int
    by_weight: dict
    expected: int

    @property
    def ok(self):
        return self.total == self.expected


def fiber_dimension(spec, point, basis=None):
    """Exact dimension of the fiber of the closure over a base point.

    The point is given by its coordinates c_1..c_n; the fiber is the
    quotient by the ideal generated by p_i - p_i(c), i = 1..n (higher power
    sums are dependent by the Newton identity, which is re-checked here).
    Dimensions are computed in the two windows qmax-1 and qmax; if they
    disagree the truncation is too short and StabilizationError is raised.
    """
    l, n, qmax = spec.l, spec.n, spec.qmax
    point = tuple(Fraction(c) for c in point)
    if len(point) != n:
        raise ValueError("expected %d point coordinates" % n)
    if qmax < 1:
        raise ValueError("qmax must be >= 1 to form a stabilization window pair")
    if not _newton_power_sum_check(n, qmax):
        raise AssertionError("Newton power-sum recurrence failed; fiber ideal incomplete")
    if basis is None:
        basis = build_global_demazure(spec)
    pvals = {i: sum(c ** i for c in point) for i in range(1, n + 1)}
    prev = _fiber_window_dims(basis, pvals, qmax - 1)
    now = _fiber_window_dims(basis, pvals, qmax)
    report = FiberReport(l, n, qmax, point, sum(now.values()), now, (l + 1) ** n)
    if prev != now:
        err = StabilizationError(
            "fiber dimensions did not stabilize between windows %d and %d; increase qmax"
            % (qmax - 1, qmax),
            needed_order=qmax + 1,
        )
        err.report = report
        raise err
    return report


def fusion_character(levels, points, qmax):
    """Character of the degree filtration on a tensor product of sl2
    irreducibles of the given levels at pairwise distinct evaluation points.

    Slot j carries the divided-power basis v_0..v_{levels[j]} with
    f v_a = (a+1) v_{a+1}, e v_a = (l-a+1) v_{a-1}, h v_a = (l-2a) v_a, and
    the current operator x t^i acts as sum_j c_j^i x^(slot j).  Operators
    with i >= n are slotwise dependent on the lower ones through the
    recurrence c^i = sum_j (-1)^(j+1) e_j(c) c^(i-j), so the filtration is
    generated in degrees below n.  Raises StabilizationError if the
    filtration has not exhausted the tensor product by degree qmax.
    """
    levels = tuple(int(v) for v in levels)
    n = len(levels)
    if n == 0:
        raise ValueError("need at least one tensor factor")
    if any(v < 1 for v in levels):
        raise ValueError("levels must be >= 1")
    points = tuple(Fraction(c) for c in points)
    if len(points) != n:
        raise ValueError("expected %d evaluation points" % n)
    if len(set(points)) != n:
        raise ValueError("evaluation points must be pairwise distinct")
    if qmax < 0:
        raise ValueError("qmax must be >= 0")

    elem = {
        j: sum(
            _product([points[t] for t in chosen])
            for chosen in itertools.combinations(range(n), j)
        )
        for j in range(1, n + 1)
    }
    for i in range(n, qmax + 1):
        for c in points:
            lhs = c ** i
            rhs = sum(
                (-1) ** (j + 1) * elem[j] * c ** (i - j) for j in range(1, n + 1)
            )
            if lhs != rhs:
                raise AssertionError("evaluation-point recurrence failed")

    states = list(itertools.product(*(range(v + 1) for v in levels)))
    cols = {}
    for st in states:
        w = sum(levels[j] - 2 * st[j] for j in range(n))
        cols.setdefault(w, []).append(st)
    target = 1
    for v in levels:
        target *= v + 1

    ops = []
    for i in range(min(n, qmax + 1)):
        scal = [points[j] ** i for j in range(n)]
        ops.append(("f", i, -2, scal))
        ops.append(("h", i, 0, scal))
        ops.append(("e", i, 2, scal))

    def apply(op, vec):
        kind, i, _, scal = op
        out = {}
        for st, c in vec.items():
            for j in range(n):
                a = st[j]
                if kind == "f":
                    if a < levels[j]:
                        key = st[:j] + (a + 1,) + st[j + 1 :]
                        val = c * (a + 1) * scal[j]
                    else:
                        continue
                elif kind == "e":
                    if a > 0:
                        key = st[:j] + (a - 1,) + st[j + 1 :]
                        val = c * (levels[j] - a + 1) * scal[j]
                    else:
                        continue
                else:
                    key = st
                    val = c * (levels[j] - 2 * a) * scal[j]
                if val:
                    s = out.get(key, 0) + val
                    if s:
                        out[key] = s
                    elif key in out:
                        del out[key]
        return out

    mats = {}

    def matrix(w, d):
        m = mats.get((w, d))
        if m is None:
            m = mats[(w, d)] = GradedPieceMatrix(cols[w])
        return m

    def insert_from(vec, w, d0):
        if not matrix(w, d0).insert(vec):
            return False
        for d in range(d0 + 1, qmax + 1):
            if not matrix(w, d).insert(vec):
                break
        return True

    w0 = sum(levels)
    v0 = {(0,) * n: Fraction(1)}
    insert_from(v0, w0, 0)
    work = [(v0, w0, 0)]
    while work:
        vec, w, d = work.pop()
        for op in ops:
            d2 = d + op[1]
            if d2 > qmax:
                continue
            img = apply(op, vec)
            if not img:
                continue
            w2 = w + op[2]
            if insert_from(img, w2, d2):
                work.append((img, w2, d2))

    got = sum(m.rank for (w, d), m in mats.items() if d == qmax)
    if got != target:
        raise StabilizationError(
            "filtration reached dimension %d of %d by degree %d; increase qmax"
            % (got, target, qmax),
            needed_order=qmax + 1,
        )

    terms = {}
    for w in sorted(cols):
        coeffs = []
        prev = 0
        for d in range(qmax + 1):
            m = mats.get((w, d))
            r = m.rank if m is not None else 0
            coeffs.append(r - prev)
            prev = r
        if any(coeffs):
            terms[w] = QSeries(qmax, coeffs)
    return LaurentCharacter(qmax, terms)


def _product(values):
    out = Fraction(1)
    for v in values:
        out *= v
    return out


def demazure_relation_check(l, n):
    """Check the two symmetric identities behind the module relations.

    (a) g_n = sum_{j=1}^n (-1)^(j+1) g_{n-j} e_j(z) in the free ring;
    (b) sum over compositions mu of l+1 into n parts of
        (-1)^(sum k mu_k) * multinomial(l+1; mu) * prod_k g_{k-1}^(mu_k)
        * q_mu(z) vanishes under the mask, where
        q_mu = sum_i prod_k (e_{n-k} omitting z_i)^(mu_k);
    plus the top coefficient of (b) at mu = (0..0, l+1), which must be
    (-1)^(n(l+1)) * n so that g_{n-1}^(l+1) is actually eliminated.
    """
    from .symfun import omitted_elementary_products

    if n < 1:
        raise ValueError("need n >= 1")
    rhs = SparsePoly.zero()
    for j in range(1, n + 1):
        term = lowering_sum(n - j, n, None) * elementary_z(j, n)
        rhs = rhs + term * Fraction((-1) ** (j + 1))
    newton_ok = lowering_sum(n, n, None) == rhs

    total = SparsePoly.zero(l)
    top_got = None
    top_mu = (0,) * (n - 1) + (l + 1,)
    for mu in _compositions(l + 1, n):
        sign = (-1) ** sum((idx + 1) * m for idx, m in enumerate(mu))
        coeff = factorial(l + 1)
        for m in mu:
            coeff //= factorial(m)
        gprod = SparsePoly.one(l)
        for idx, m in enumerate(mu):
            for _ in range(m):
                gprod = gprod * lowering_sum(idx, n, l)
        zsum = omitted_elementary_products(mu, n).with_mask(l)
        total = total + gprod * zsum * (sign * coeff)
        if mu == top_mu:
            top_got = sign * coeff * zsum.terms.get((), Fraction(0))
    masked_ok = total.is_zero()
    top_expected = Fraction((-1) ** (n * (l + 1)) * n)
    return {
        "l": l,
        "n": n,
        "newton_identity": newton_ok,
        "masked_identity": masked_ok,
        "top_coefficient": {
            "got": str(top_got),
            "expected": str(top_expected),
            "ok": top_got == top_expected,
        },
        "ok": newton_ok and masked_ok and top_got == top_expected,
    }


def cartan_product_law_check(l, n, qmax, trials=12, seed=7):
    """h t^i on a product of lowering generators matches the derivation law
    l * p_i * x - 2 * sum_t (x with factor t bumped from g_a to g_{a+i})."""
    rng = random.Random(seed)
    for _ in range(trials):
        count = rng.randint(1, 3)
        degrees = [rng.randint(0, qmax) for _ in range(count)]
        i = rng.randint(0, qmax)
        x = SparsePoly.one(l)
        for a in degrees:
            x = x * lowering_sum(a, n, l)
        lhs = apply_current("h", i, x, l, n)
        rhs = power_sum(i, n, l) * x * l
        for t in range(count):
            y = SparsePoly.one(l)
            for idx, a in enumerate(degrees):
                y = y * lowering_sum(a + (i if idx == t else 0), n, l)
            rhs = rhs - y * 2
        if lhs != rhs:
            return False
    return True
