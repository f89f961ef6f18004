"""Sparse exact multivariate polynomials over indexed variable families.

Variables are plain tuples:

    ("x", j, i)   jet coordinate, outer index j, series order i
    ("u", j)      nilpotent module variable for tensor slot j
    ("z", j)      spectral module variable for tensor slot j
    ("a", i)      first substitution series coefficient
    ("b", i)      second substitution series coefficient
    ("p", i)      abstract power sum

A monomial is a tuple of (variable, positive exponent) pairs sorted by
variable key; the empty tuple is 1.  SparsePoly maps monomials to nonzero
Fractions.  The optional mask umax attaches the quotient relation
u_j^(umax+1) = 0: arithmetic drops any monomial whose u-exponent exceeds
umax, so masked values live in the quotient ring directly.

The canonical monomial order used everywhere (matrix columns, rendering) is
graded reverse lexicographic with variables ordered by (family, outer,
inner), listed from the largest monomial down.
"""

from fractions import Fraction
from functools import cmp_to_key, lru_cache
from math import perm
from typing import NamedTuple, Optional, Tuple

from .errors import TruncationError

FAMILY_RANK = {"x": 0, "u": 1, "z": 2, "a": 3, "b": 4, "p": 5}


def var_key(v):
    return (FAMILY_RANK[v[0]],) + v[1:]


def render_variable(v):
    fam = v[0]
    if fam == "x":
        return "x%d[%d]" % (v[1], v[2])
    if fam in ("u", "z", "p"):
        return "%s%d" % (fam, v[1])
    return "%s[%d]" % (fam, v[1])


def monomial_mul(m1, m2):
    if not m1:
        return m2
    if not m2:
        return m1
    out = []
    i = j = 0
    n1, n2 = len(m1), len(m2)
    while i < n1 and j < n2:
        v1, e1 = m1[i]
        v2, e2 = m2[j]
        k1, k2 = var_key(v1), var_key(v2)
        if k1 < k2:
            out.append(m1[i])
            i += 1
        elif k1 > k2:
            out.append(m2[j])
            j += 1
        else:
            out.append((v1, e1 + e2))
            i += 1
            j += 1
    out.extend(m1[i:])
    out.extend(m2[j:])
    return tuple(out)


def monomial_degree(m):
    return sum(e for _, e in m)


def monomial_u_ok(m, umax):
    return all(e <= umax for v, e in m if v[0] == "u")


def grevlex_cmp(m1, m2):
    """Graded reverse lexicographic comparison: -1, 0, or 1."""
    d1 = monomial_degree(m1)
    d2 = monomial_degree(m2)
    if d1 != d2:
        return -1 if d1 < d2 else 1
    # equal degree: scan from the least significant variable upward; the
    # monomial with the larger exponent there is the smaller one
    i = len(m1) - 1
    j = len(m2) - 1
    while i >= 0 and j >= 0:
        v1, e1 = m1[i]
        v2, e2 = m2[j]
        k1, k2 = var_key(v1), var_key(v2)
        if k1 != k2:
            return -1 if k1 > k2 else 1
        if e1 != e2:
            return 1 if e1 < e2 else -1
        i -= 1
        j -= 1
    return 0


_GREVLEX_KEY = cmp_to_key(grevlex_cmp)


def sort_monomials(monos):
    """Canonical column order: largest monomial first."""
    return sorted(monos, key=_GREVLEX_KEY, reverse=True)


def render_monomial(m):
    parts = []
    for v, e in m:
        parts.append(render_variable(v) if e == 1 else "%s^%d" % (render_variable(v), e))
    return "*".join(parts)


class SparsePoly:
    __slots__ = ("terms", "umax")

    def __init__(self, terms=None, umax=None):
        # trusted constructor: terms must already be clean
        self.terms = terms if terms is not None else {}
        self.umax = umax

    @classmethod
    def from_terms(cls, items, umax=None):
        if isinstance(items, dict):
            items = items.items()
        terms = {}
        for mono, c in items:
            c = Fraction(c)
            if not c:
                continue
            if umax is not None and not monomial_u_ok(mono, umax):
                continue
            if mono in terms:
                c = terms[mono] + c
                if c:
                    terms[mono] = c
                else:
                    del terms[mono]
            else:
                terms[mono] = c
        return cls(terms, umax)

    @classmethod
    def zero(cls, umax=None):
        return cls({}, umax)

    @classmethod
    def one(cls, umax=None):
        return cls({(): Fraction(1)}, umax)

    @classmethod
    def constant(cls, c, umax=None):
        c = Fraction(c)
        return cls({(): c} if c else {}, umax)

    @classmethod
    def variable(cls, v, exp=1, umax=None):
        if exp < 0:
            raise ValueError("negative exponent")
        if exp == 0:
            return cls.one(umax)
        if umax is not None and v[0] == "u" and exp > umax:
            return cls.zero(umax)
        return cls({((v, exp),): Fraction(1)}, umax)

    def with_mask(self, umax):
        return SparsePoly.from_terms(self.terms, umax)

    def is_zero(self):
        return not self.terms

    def _check(self, other):
        if self.umax != other.umax:
            raise ValueError("nilpotency mask mismatch: %r vs %r" % (self.umax, other.umax))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SparsePoly.constant(other, self.umax)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for mono, c in other.terms.items():
            if mono in out:
                s = out[mono] + c
                if s:
                    out[mono] = s
                else:
                    del out[mono]
            else:
                out[mono] = c
        return SparsePoly(out, self.umax)

    __radd__ = __add__

    def __neg__(self):
        return SparsePoly({m: -c for m, c in self.terms.items()}, self.umax)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SparsePoly.constant(other, self.umax)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return SparsePoly.zero(self.umax)
            return SparsePoly(
                {m: c * other for m, c in self.terms.items()}, self.umax
            )
        if not isinstance(other, SparsePoly):
            return NotImplemented
        self._check(other)
        umax = self.umax
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = monomial_mul(m1, m2)
                if umax is not None and not monomial_u_ok(m, umax):
                    continue
                if m in out:
                    s = out[m] + c1 * c2
                    if s:
                        out[m] = s
                    else:
                        del out[m]
                else:
                    out[m] = c1 * c2
        return SparsePoly(out, umax)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative exponent")
        out = SparsePoly.one(self.umax)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        return (
            isinstance(other, SparsePoly)
            and self.umax == other.umax
            and self.terms == other.terms
        )

    def __repr__(self):
        return "SparsePoly(%s)" % render_poly(self)


def render_poly(p):
    """Canonical text: terms in descending monomial order, explicit signs."""
    if p.is_zero():
        return "0"
    parts = []
    for mono in sort_monomials(p.terms.keys()):
        c = p.terms[mono]
        neg = c < 0
        mag = -c if neg else c
        body = render_monomial(mono)
        if not body:
            frag = str(mag)
        elif mag == 1:
            frag = body
        else:
            frag = "%s*%s" % (mag, body)
        if not parts:
            parts.append("-" + frag if neg else frag)
        else:
            parts.append(("- " if neg else "+ ") + frag)
    return " ".join(parts)


class MultiDegree(NamedTuple):
    """Common degrees of a jet-ring polynomial; None marks inhomogeneity.

    deg1 counts x-variables, deg2 sums series orders, deg3 is the sl2
    weight (sum of 2j - l), deg_prime sums j^2, and by_var is the per-j
    degree vector (a grading only monomial-pair generators respect).
    """

    deg1: Optional[int]
    deg2: Optional[int]
    deg3: Optional[int]
    deg_prime: Optional[int]
    by_var: Optional[Tuple[Tuple[int, int], ...]]


def _term_degrees(mono, l):
    d1 = d2 = d3 = dp = 0
    byv = {}
    for v, e in mono:
        if v[0] != "x":
            raise ValueError("multidegree applies to jet-ring polynomials only")
        _, j, i = v
        d1 += e
        d2 += e * i
        d3 += e * (2 * j - l)
        dp += e * j * j
        byv[j] = byv.get(j, 0) + e
    return d1, d2, d3, dp, tuple(sorted(byv.items()))


def multidegree(p, l):
    """Componentwise common degree of all terms, None where they disagree."""
    if p.is_zero():
        raise ValueError("zero polynomial has no multidegree")
    acc = None
    for mono in p.terms:
        degs = _term_degrees(mono, l)
        if acc is None:
            acc = list(degs)
        else:
            for idx, d in enumerate(degs):
                if acc[idx] is not None and acc[idx] != d:
                    acc[idx] = None
    return MultiDegree(*acc)


def prime_degree(mono):
    return sum(e * v[1] * v[1] for v, e in mono)


def leading_prime_part(p):
    """Sub-polynomial of the terms with maximal deg_prime."""
    if p.is_zero():
        return p
    top = max(prime_degree(m) for m in p.terms)
    return SparsePoly(
        {m: c for m, c in p.terms.items() if prime_degree(m) == top}, p.umax
    )


class TSeries:
    """Truncated power series in t with SparsePoly coefficients.

    coeffs[k] is the exact t^k coefficient for every k <= order; nothing is
    known beyond order.  Binary operations truncate to the smaller order, so
    every stored coefficient of every result is exact.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        if not coeffs:
            raise ValueError("series needs at least the constant coefficient")
        self.coeffs = list(coeffs)

    @property
    def order(self):
        return len(self.coeffs) - 1

    def coefficient(self, k):
        if k < 0:
            raise ValueError("negative series order")
        if k > self.order:
            raise TruncationError(
                "t^%d coefficient beyond series order %d" % (k, self.order),
                needed_order=k,
            )
        return self.coeffs[k]

    def __add__(self, other):
        n = min(self.order, other.order)
        return TSeries([self.coeffs[k] + other.coeffs[k] for k in range(n + 1)])

    def __sub__(self, other):
        n = min(self.order, other.order)
        return TSeries([self.coeffs[k] - other.coeffs[k] for k in range(n + 1)])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TSeries([c * other for c in self.coeffs])
        n = min(self.order, other.order)
        umax = self.coeffs[0].umax
        out = [SparsePoly.zero(umax) for _ in range(n + 1)]
        for i in range(n + 1):
            ci = self.coeffs[i]
            if ci.is_zero():
                continue
            for j in range(n + 1 - i):
                cj = other.coeffs[j]
                if not cj.is_zero():
                    out[i + j] = out[i + j] + ci * cj
        return TSeries(out)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative exponent")
        umax = self.coeffs[0].umax
        out = TSeries([SparsePoly.one(umax)] + [SparsePoly.zero(umax)] * self.order)
        for _ in range(e):
            out = out * self
        return out

    def derivative(self, w=1):
        """w-fold d/dt; the result is exact through order - w."""
        if w < 0:
            raise ValueError("negative derivative order")
        if w == 0:
            return TSeries(self.coeffs)
        if w > self.order:
            raise ValueError(
                "derivative order %d exceeds series order %d" % (w, self.order)
            )
        return TSeries(
            [self.coeffs[k + w] * perm(k + w, w) for k in range(self.order - w + 1)]
        )

    def __eq__(self, other):
        return isinstance(other, TSeries) and self.coeffs == other.coeffs


def x_series(j, order):
    """The generating series of the jet coordinates x_j, through t^order."""
    return TSeries([SparsePoly.variable(("x", j, i)) for i in range(order + 1)])


def _series_in(family, order):
    return TSeries([SparsePoly.variable((family, i)) for i in range(order + 1)])


@lru_cache(maxsize=None)
def veronese_images(l, order):
    """Variable images of the substitution x_j(t) -> a(t)^(l-j) b(t)^j.

    Maps ("x", j, i) to the exact t^i coefficient, a polynomial in the a/b
    variables, for all 0 <= j <= l and 0 <= i <= order.  Cached; treat the
    result as read-only.
    """
    a = _series_in("a", order)
    b = _series_in("b", order)
    images = {}
    for j in range(l + 1):
        s = (a ** (l - j)) * (b ** j)
        for i in range(order + 1):
            images[("x", j, i)] = s.coefficient(i)
    return images


def substitute(p, images):
    """Apply the ring homomorphism sending each variable to images[var]."""
    out = SparsePoly.zero()
    powers = {}
    for mono, c in p.terms.items():
        term = SparsePoly.constant(c)
        for v, e in mono:
            key = (v, e)
            img = powers.get(key)
            if img is None:
                base = images.get(v)
                if base is None:
                    if v[0] == "x":
                        raise TruncationError(
                            "no image for %s: substitution series truncated below order %d"
                            % (render_variable(v), v[2]),
                            needed_order=v[2],
                        )
                    raise ValueError("no image for variable %s" % render_variable(v))
                img = powers[key] = base ** e
            term = term * img
        out = out + term
    return out
