# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of _echelon_py: integer sparse row kernels.

Coefficients stay Python ints (arbitrary precision); Cython removes the
interpreter overhead of the merge loops, which dominate at desk scale.
"""

from math import gcd

IMPLEMENTATION = "cython"


def normalize(list cols, list vals):
    cdef Py_ssize_t i, n = len(vals)
    if n == 0:
        return cols, vals
    g = 0
    for i in range(n):
        g = gcd(g, vals[i])
        if g == 1:
            break
    if vals[0] < 0:
        g = -g
    if g != 1:
        for i in range(n):
            vals[i] = vals[i] // g
    return cols, vals


def axpy(a, list cols1, list vals1, b, list cols2, list vals2):
    cdef Py_ssize_t i = 0, j = 0
    cdef Py_ssize_t n1 = len(cols1), n2 = len(cols2)
    cdef long c1, c2
    cdef list cols = [], vals = []
    nb = -b
    while i < n1 and j < n2:
        c1 = cols1[i]
        c2 = cols2[j]
        if c1 < c2:
            cols.append(c1)
            vals.append(a * vals1[i])
            i += 1
        elif c1 > c2:
            cols.append(c2)
            vals.append(nb * vals2[j])
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
        vals.append(nb * vals2[j])
        j += 1
    return cols, vals


def eliminate(cols, vals, dict pivots):
    while cols:
        prow = pivots.get(cols[0])
        if prow is None:
            break
        pcols, pvals = prow
        cols, vals = axpy(pvals[0], cols, vals, vals[0], pcols, pvals)
        normalize(cols, vals)
    return cols, vals
