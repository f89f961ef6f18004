"""Exact incremental row echelon over the rationals.

GradedPieceMatrix accumulates rows of one graded piece, keeping a
fraction-free echelon form for rank and span-membership queries.  The inner
merge/eliminate loops come from a compiled Cython kernel when available,
with a pure-Python fallback (force it with VERONESE_JETS_PURE=1).
"""

import os
from fractions import Fraction
from math import lcm

if os.environ.get("VERONESE_JETS_PURE"):
    from . import _echelon_py as _kernel
else:
    try:
        from . import _echelon_cy as _kernel
    except ImportError:
        from . import _echelon_py as _kernel

KERNEL_IMPLEMENTATION = _kernel.IMPLEMENTATION


class GradedPieceMatrix:
    """Echelonized exact matrix over a fixed ordered column set.

    Columns are given as a count (plain integer ids 0..ncols-1) or an
    ordered list of hashable labels, typically monomials in their canonical
    order.  Rows are inserted one at a time; each is reduced against the
    current pivots and a surviving residual becomes a new pivot.  A row in
    the span of earlier rows reduces to zero exactly, so membership and
    rank are certificates, not estimates.
    """

    def __init__(self, columns):
        if isinstance(columns, int):
            if columns < 0:
                raise ValueError("negative column count")
            self.labels = None
            self.ncols = columns
            self._index = None
        else:
            self.labels = list(columns)
            self.ncols = len(self.labels)
            self._index = {lab: i for i, lab in enumerate(self.labels)}
            if len(self._index) != self.ncols:
                raise ValueError("duplicate column labels")
        self.pivots = {}

    @property
    def rank(self):
        return len(self.pivots)

    def _to_int_row(self, row):
        items = row.items() if isinstance(row, dict) else row
        acc = {}
        for key, c in items:
            if self._index is not None:
                try:
                    j = self._index[key]
                except KeyError:
                    raise ValueError("unknown column label %r" % (key,)) from None
            else:
                j = key
                if not 0 <= j < self.ncols:
                    raise ValueError("column index %r out of range" % (j,))
            if c:
                acc[j] = acc.get(j, Fraction(0)) + Fraction(c)
        den = 1
        for v in acc.values():
            den = lcm(den, v.denominator)
        cols = []
        vals = []
        for j in sorted(acc):
            v = int(acc[j] * den)
            if v:
                cols.append(j)
                vals.append(v)
        return cols, vals

    def _reduce(self, row):
        cols, vals = self._to_int_row(row)
        _kernel.normalize(cols, vals)
        return _kernel.eliminate(cols, vals, self.pivots)

    def insert(self, row):
        """Reduce and keep a row; True iff it enlarged the span."""
        cols, vals = self._reduce(row)
        if not cols:
            return False
        self.pivots[cols[0]] = (cols, vals)
        return True

    def contains(self, row):
        """Exact span-membership test; never mutates the matrix."""
        cols, _ = self._reduce(row)
        return not cols

    def _label(self, j):
        return self.labels[j] if self.labels is not None else j

    def pivot_rows(self):
        """Current echelon rows as [(label, Fraction)] lists, pivot order."""
        out = []
        for c in sorted(self.pivots):
            cols, vals = self.pivots[c]
            out.append([(self._label(j), Fraction(v)) for j, v in zip(cols, vals)])
        return out

    def reduced_rows(self):
        """Fully back-substituted basis, pivots scaled to 1: the canonical
        reduced row-echelon rows, for dumps and golden files."""
        order = sorted(self.pivots)
        done = {}
        for c in reversed(order):
            cols, vals = self.pivots[c]
            cols, vals = list(cols), list(vals)
            changed = True
            while changed:
                changed = False
                for pos in range(1, len(cols)):
                    if cols[pos] in done:
                        rc, rv = done[cols[pos]]
                        cols, vals = _kernel.axpy(rv[0], cols, vals, vals[pos], rc, rv)
                        _kernel.normalize(cols, vals)
                        changed = True
                        break
            done[c] = (cols, vals)
        out = []
        for c in order:
            cols, vals = done[c]
            lead = Fraction(vals[0])
            out.append([(self._label(j), Fraction(v) / lead) for j, v in zip(cols, vals)])
        return out
