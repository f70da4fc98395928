# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: delta, Bott core, Weyl dimension, LR tableau count.

Mirrors ``_pykernels`` exactly. Machine-width fast paths fall back to Python
integers wherever a value could leave the int64 range.
"""
from libc.stdlib cimport malloc, free
from libc.math cimport sqrt

from math import isqrt

# 8x+1 stays exact in double below this bound
cdef long long _DELTA_FAST_LIMIT = 1LL << 48
cdef enum:
    _MAX_CELLS = 4096
    _MAX_LETTERS = 256


def delta(x):
    cdef long long xx, m
    if x < _DELTA_FAST_LIMIT:
        xx = x
        m = <long long>((sqrt(8.0 * xx + 1.0) + 1.0) / 2.0)
        # correct possible off-by-one from rounding
        while m * (m - 1) // 2 > xx:
            m -= 1
        while (m + 1) * m // 2 <= xx:
            m += 1
        return m
    return (isqrt(8 * x + 1) + 1) // 2


def bott_core(v):
    cdef Py_ssize_t d = len(v)
    cdef Py_ssize_t i, j
    cdef long long q = 0
    cdef long long wi, tmp
    cdef long long *w
    for i in range(d):
        if not (-(1 << 60) < v[i] < (1 << 60)):
            from ._pykernels import bott_core as slow
            return slow(v)
    w = <long long *>malloc(d * sizeof(long long))
    if w == NULL:
        raise MemoryError()
    try:
        for i in range(d):
            w[i] = <long long>v[i] - i - 1
        for i in range(d):
            wi = w[i]
            for j in range(i + 1, d):
                if wi == w[j]:
                    return None
                if wi < w[j]:
                    q += 1
        # insertion sort, descending; d is small
        for i in range(1, d):
            tmp = w[i]
            j = i - 1
            while j >= 0 and w[j] < tmp:
                w[j + 1] = w[j]
                j -= 1
            w[j + 1] = tmp
        return q, tuple([w[i] + i + 1 for i in range(d)])
    finally:
        free(w)


def weyl_dim(lam):
    cdef Py_ssize_t d = len(lam)
    cdef Py_ssize_t i, j
    cdef object num = 1
    cdef object den = 1
    cdef long long fnum = 1, fden = 1
    cdef long long diff
    cdef long long *lv
    for i in range(d):
        if not (-(1 << 30) < lam[i] < (1 << 30)):
            from ._pykernels import weyl_dim as slow
            return slow(lam)
    if d == 0:
        return 1
    lv = <long long *>malloc(d * sizeof(long long))
    if lv == NULL:
        raise MemoryError()
    try:
        for i in range(d):
            lv[i] = lam[i]
        for i in range(d):
            for j in range(i + 1, d):
                diff = lv[i] - lv[j] + j - i
                # |diff| < 2**32, so flushing at 2**30 keeps products in int64
                if fnum > (1LL << 30) or fnum < -(1LL << 30):
                    num *= fnum
                    fnum = 1
                if fden > (1LL << 30):
                    den *= fden
                    fden = 1
                fnum *= diff
                fden *= j - i
        num *= fnum
        den *= fden
        return num // den
    finally:
        free(lv)


cdef long long _fill(int pos, int ncells, int *ci, int *cj, int *outer,
                     int *inner, int width, int nlet, int *content,
                     int *counts, int *table):
    cdef int i, j, lo, hi, val
    cdef long long total = 0
    if pos == ncells:
        return 1
    i = ci[pos]
    j = cj[pos]
    lo = 1
    if i > 0 and j >= inner[i - 1]:
        lo = table[(i - 1) * width + j] + 1
    hi = nlet if nlet < i + 1 else i + 1
    if j + 1 < outer[i] and table[i * width + j + 1] < hi:
        hi = table[i * width + j + 1]
    for val in range(lo, hi + 1):
        if counts[val] >= content[val - 1]:
            continue
        if val > 1 and counts[val] >= counts[val - 1]:
            continue
        counts[val] += 1
        table[i * width + j] = val
        total += _fill(pos + 1, ncells, ci, cj, outer, inner, width, nlet,
                       content, counts, table)
        counts[val] -= 1
    return total


def lr_coefficient(outer, inner, content):
    cdef int rows = len(outer)
    cdef int nlet = len(content)
    cdef int width, ncells, i, j, k
    cdef int *buf
    cdef int *c_outer
    cdef int *c_inner
    cdef int *c_content
    cdef int *counts
    cdef int *ci
    cdef int *cj
    cdef int *table
    if len(inner) > rows:
        return 0
    inner = list(inner) + [0] * (rows - len(inner))
    for i in range(rows):
        if inner[i] > outer[i]:
            return 0
    if sum(outer) - sum(inner) != sum(content):
        return 0
    ncells = sum(outer) - sum(inner)
    if ncells == 0:
        return 1
    width = outer[0]
    if ncells > _MAX_CELLS or nlet > _MAX_LETTERS or rows * width > 1 << 20:
        from ._pykernels import lr_coefficient as slow
        return slow(outer, inner, content)
    buf = <int *>malloc((3 * rows + 2 * nlet + 1 + 2 * ncells + rows * width) * sizeof(int))
    if buf == NULL:
        raise MemoryError()
    try:
        c_outer = buf
        c_inner = c_outer + rows
        c_content = c_inner + rows
        counts = c_content + nlet
        ci = counts + nlet + 1
        cj = ci + ncells
        table = cj + ncells
        for i in range(rows):
            c_outer[i] = outer[i]
            c_inner[i] = inner[i]
        for i in range(nlet):
            c_content[i] = content[i]
        for i in range(nlet + 1):
            counts[i] = 0
        k = 0
        for i in range(rows):
            for j in range(c_outer[i] - 1, c_inner[i] - 1, -1):
                ci[k] = i
                cj[k] = j
                k += 1
        return _fill(0, ncells, ci, cj, c_outer, c_inner, width, nlet,
                     c_content, counts, table)
    finally:
        free(buf)
