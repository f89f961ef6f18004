"""Truncated q-series and sl2 Laurent characters over exact rationals.

A QSeries is a power series in q whose coefficients are known exactly
through a fixed order qmax and unknown beyond it.  A LaurentCharacter is a
finitely supported map from integer sl2 weights (coefficients of the
fundamental weight) to QSeries, all sharing one qmax.  Operations return
new objects; nothing is mutated after construction.
"""

from fractions import Fraction

from .errors import TruncationError


class QSeries:
    __slots__ = ("qmax", "coeffs")

    def __init__(self, qmax, coeffs=()):
        if qmax < 0:
            raise ValueError("qmax must be nonnegative")
        data = [Fraction(c) for c in coeffs[: qmax + 1]]
        data.extend([Fraction(0)] * (qmax + 1 - len(data)))
        self.qmax = qmax
        self.coeffs = data

    @classmethod
    def zero(cls, qmax):
        return cls(qmax)

    @classmethod
    def one(cls, qmax):
        return cls(qmax, (1,))

    @classmethod
    def monomial(cls, k, qmax, coeff=1):
        s = cls(qmax)
        if 0 <= k <= qmax:
            s.coeffs[k] = Fraction(coeff)
        return s

    def _check(self, other):
        if self.qmax != other.qmax:
            raise ValueError(
                "mixed truncation orders: %d vs %d" % (self.qmax, other.qmax)
            )

    def coefficient(self, k):
        if k < 0:
            return Fraction(0)
        if k > self.qmax:
            raise TruncationError(
                "coefficient of q^%d beyond truncation order %d" % (k, self.qmax),
                needed_order=k,
            )
        return self.coeffs[k]

    def is_zero(self):
        return not any(self.coeffs)

    def __add__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        self._check(other)
        return QSeries(self.qmax, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        self._check(other)
        return QSeries(self.qmax, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return QSeries(self.qmax, [-a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, QSeries):
            self._check(other)
            out = [Fraction(0)] * (self.qmax + 1)
            for i, a in enumerate(self.coeffs):
                if not a:
                    continue
                for j in range(self.qmax + 1 - i):
                    b = other.coeffs[j]
                    if b:
                        out[i + j] += a * b
            return QSeries(self.qmax, out)
        if isinstance(other, (int, Fraction)):
            return QSeries(self.qmax, [a * other for a in self.coeffs])
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self):
        """Multiplicative inverse through qmax; requires a unit constant term."""
        c0 = self.coeffs[0]
        if not c0:
            raise ZeroDivisionError("series with zero constant term has no inverse")
        out = [Fraction(0)] * (self.qmax + 1)
        out[0] = Fraction(1) / c0
        for k in range(1, self.qmax + 1):
            acc = Fraction(0)
            for i in range(1, k + 1):
                if self.coeffs[i]:
                    acc += self.coeffs[i] * out[k - i]
            out[k] = -acc / c0
        return QSeries(self.qmax, out)

    def shift(self, s):
        """Multiply by q^s (s >= 0), truncating at qmax."""
        if s < 0:
            raise ValueError("negative shift")
        return QSeries(self.qmax, [Fraction(0)] * s + self.coeffs)

    def truncate(self, qmax):
        if qmax > self.qmax:
            raise TruncationError(
                "cannot extend truncation from %d to %d" % (self.qmax, qmax),
                needed_order=qmax,
            )
        return QSeries(qmax, self.coeffs)

    def dominates(self, other):
        """Coefficientwise >= through the shared qmax."""
        self._check(other)
        return all(a >= b for a, b in zip(self.coeffs, other.coeffs))

    def at_one(self):
        """Sum of the stored coefficients (the q=1 value of the truncation)."""
        return sum(self.coeffs, Fraction(0))

    def as_ints(self):
        out = []
        for c in self.coeffs:
            if c.denominator != 1:
                raise ValueError("non-integer coefficient %s" % c)
            out.append(int(c))
        return out

    def __eq__(self, other):
        return (
            isinstance(other, QSeries)
            and self.qmax == other.qmax
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
            elif k == 1:
                terms.append("q" if c == 1 else "%s*q" % c)
            else:
                terms.append("q^%d" % k if c == 1 else "%s*q^%d" % (c, k))
        body = " + ".join(terms) if terms else "0"
        return "QSeries[%d](%s)" % (self.qmax, body)


def q_pochhammer(m, qmax):
    """(q)_m = product over i = 1..m of (1 - q^i), truncated at qmax."""
    if m < 0:
        raise ValueError("negative index")
    out = QSeries.one(qmax)
    for i in range(1, m + 1):
        out = out * (QSeries.one(qmax) - QSeries.monomial(i, qmax))
    return out


class LaurentCharacter:
    __slots__ = ("qmax", "terms")

    def __init__(self, qmax, terms=None):
        self.qmax = qmax
        self.terms = {}
        if terms:
            for a, s in terms.items():
                if s.qmax != qmax:
                    raise ValueError("member series with mismatched qmax")
                if not s.is_zero():
                    self.terms[int(a)] = s

    @classmethod
    def unit(cls, qmax):
        return cls(qmax, {0: QSeries.one(qmax)})

    def series(self, a):
        return self.terms.get(a, QSeries.zero(self.qmax))

    def coefficient(self, a, k):
        return self.series(a).coefficient(k)

    def weights(self):
        return sorted(self.terms)

    def _check(self, other):
        if self.qmax != other.qmax:
            raise ValueError("mixed truncation orders")

    def __add__(self, other):
        if not isinstance(other, LaurentCharacter):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for a, s in other.terms.items():
            out[a] = out[a] + s if a in out else s
        return LaurentCharacter(self.qmax, out)

    def __mul__(self, other):
        if isinstance(other, LaurentCharacter):
            self._check(other)
            out = {}
            for a, s in self.terms.items():
                for b, t in other.terms.items():
                    prod = s * t
                    c = a + b
                    out[c] = out[c] + prod if c in out else prod
            return LaurentCharacter(self.qmax, out)
        if isinstance(other, (int, Fraction, QSeries)):
            return LaurentCharacter(
                self.qmax, {a: s * other for a, s in self.terms.items()}
            )
        return NotImplemented

    __rmul__ = __mul__

    def dominates(self, other):
        """Coefficientwise >= on every weight through qmax."""
        self._check(other)
        for a in set(self.terms) | set(other.terms):
            if not self.series(a).dominates(other.series(a)):
                return False
        return True

    def weight_dims_at_one(self):
        """Per-weight sums of stored coefficients (q = 1 specialization)."""
        return {a: s.at_one() for a, s in self.terms.items()}

    def table(self):
        """Sorted [(weight, [integer coefficients])] for reports."""
        return [(a, self.terms[a].as_ints()) for a in self.weights()]

    def __eq__(self, other):
        if not isinstance(other, LaurentCharacter) or self.qmax != other.qmax:
            return False
        keys = set(self.terms) | set(other.terms)
        return all(self.series(a) == other.series(a) for a in keys)

    def __repr__(self):
        parts = ["e^%d: %r" % (a, self.terms[a]) for a in self.weights()]
        return "LaurentCharacter[%d]{%s}" % (self.qmax, "; ".join(parts))
