# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels for the inner loops of series and table construction.

Drop-in replacement for `cranktab._kernels_py`; see that module for the data
conventions.  Coefficients stay Python ints (exact at any magnitude); the win
comes from typed loop indices and direct list access.
"""


def cauchy_mul(list a, list b):
    cdef Py_ssize_t n = len(a)
    cdef Py_ssize_t i, j, top
    cdef list out = [0] * n
    cdef object ai, v
    for i in range(n):
        ai = a[i]
        if ai == 0:
            continue
        top = n - i
        if ai == 1:
            for j in range(top):
                v = b[j]
                if v != 0:
                    out[i + j] = out[i + j] + v
        else:
            for j in range(top):
                v = b[j]
                if v != 0:
                    out[i + j] = out[i + j] + ai * v
    return out


def geom_fold(list rows, Py_ssize_t k, int zstep, Py_ssize_t bound):
    cdef Py_ssize_t width = 2 * bound + 1
    cdef Py_ssize_t n, s, m, lo, hi
    cdef list src, tgt
    cdef object v
    for n in range(k, len(rows)):
        s = n - k
        src = <list> rows[s]
        tgt = <list> rows[n]
        lo = bound - s + zstep
        if lo < 0:
            lo = 0
        hi = bound + s + zstep
        if hi > width - 1:
            hi = width - 1
        for m in range(lo, hi + 1):
            v = src[m - zstep]
            if v != 0:
                tgt[m] = tgt[m] + v


def zfree_mul(list rows, list coeffs, Py_ssize_t bound):
    cdef Py_ssize_t width = 2 * bound + 1
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t n, j, s, m, lo, hi
    cdef list out = []
    cdef list acc, src
    cdef list nz_idx = []
    cdef list nz_val = []
    cdef object c, v
    for j in range(len(coeffs)):
        c = coeffs[j]
        if c != 0:
            nz_idx.append(j)
            nz_val.append(c)
    cdef Py_ssize_t nnz = len(nz_idx), t
    for n in range(nrows):
        out.append([0] * width)
    for n in range(nrows):
        acc = <list> out[n]
        for t in range(nnz):
            j = <Py_ssize_t> nz_idx[t]
            if j > n:
                break
            c = nz_val[t]
            s = n - j
            lo = bound - s
            if lo < 0:
                lo = 0
            hi = bound + s
            if hi > width - 1:
                hi = width - 1
            src = <list> rows[s]
            if c == 1:
                for m in range(lo, hi + 1):
                    v = src[m]
                    if v != 0:
                        acc[m] = acc[m] + v
            else:
                for m in range(lo, hi + 1):
                    v = src[m]
                    if v != 0:
                        acc[m] = acc[m] + c * v
    return out
