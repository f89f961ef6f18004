"""Pure-Python integer sparse row kernels for incremental echelon reduction.

A row is a pair (cols, vals): cols strictly increasing column ids, vals the
matching nonzero integers.  Rows represent rational rows up to a positive
scale; normalize() fixes the representative (content 1, leading entry
positive).  _echelon_cy.pyx is a compiled twin with the same signatures.
"""

from math import gcd

IMPLEMENTATION = "python"


def normalize(cols, vals):
    """In place: divide out the content and make the leading entry positive."""
    n = len(vals)
    if n == 0:
        return cols, vals
    g = 0
    for v in vals:
        g = gcd(g, v)
        if g == 1:
            break
    if vals[0] < 0:
        g = -g
    if g != 1:
        for i in range(n):
            vals[i] //= g
    return cols, vals


def axpy(a, cols1, vals1, b, cols2, vals2):
    """Merged combination a*row1 - b*row2 with zero entries dropped."""
    cols = []
    vals = []
    i = j = 0
    n1 = len(cols1)
    n2 = len(cols2)
    while i < n1 and j < n2:
        c1 = cols1[i]
        c2 = cols2[j]
        if c1 < c2:
            cols.append(c1)
            vals.append(a * vals1[i])
            i += 1
        elif c1 > c2:
            cols.append(c2)
            vals.append(-b * vals2[j])
            j += 1
        else:
            v = a * vals1[i] - b * vals2[j]
            if v:
                cols.append(c1)
                vals.append(v)
            i += 1
            j += 1
    while i < n1:
        cols.append(cols1[i])
        vals.append(a * vals1[i])
        i += 1
    while j < n2:
        cols.append(cols2[j])
        vals.append(-b * vals2[j])
        j += 1
    return cols, vals


def eliminate(cols, vals, pivots):
    """Reduce a normalized row against pivots (dict: leading col -> row).

    Cancels the leading entry repeatedly until it hits a pivot-free column
    or the row dies.  Fraction-free: cross-multiplied integer combinations,
    re-normalized each step.  Returns the reduced row.
    """
    while cols:
        prow = pivots.get(cols[0])
        if prow is None:
            break
        pcols, pvals = prow
        cols, vals = axpy(pvals[0], cols, vals, vals[0], pcols, pvals)
        normalize(cols, vals)
    return cols, vals
