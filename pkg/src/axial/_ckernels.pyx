# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled integer kernels.

Same signatures and results as :mod:`axial._pykernels`. Each kernel first runs
on C ``long long`` with overflow-checked arithmetic and restarts on Python
integers when an intermediate leaves the 64-bit range.
"""

from libc.limits cimport LLONG_MIN
from libc.stdlib cimport malloc, free

cdef extern from *:
    """
    static int ax_mul_ovf(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static int ax_add_ovf(long long a, long long b, long long *r) {
        return __builtin_add_overflow(a, b, r);
    }
    static int ax_sub_ovf(long long a, long long b, long long *r) {
        return __builtin_sub_overflow(a, b, r);
    }
    """
    bint ax_mul_ovf(long long a, long long b, long long *r) nogil
    bint ax_add_ovf(long long a, long long b, long long *r) nogil
    bint ax_sub_ovf(long long a, long long b, long long *r) nogil


class _Overflow(Exception):
    pass


cdef int _contract_c(list nz, Py_ssize_t n, list u, list v, long long *out) except -1:
    cdef Py_ssize_t i, j, t, nk, base, kk
    cdef long long ui, vj, w, g, prod
    cdef tuple ks, gs
    for i in range(n):
        out[i] = 0
    for i in range(n):
        ui = u[i]
        if ui == 0:
            continue
        base = i * n
        for j in range(n):
            vj = v[j]
            if vj == 0:
                continue
            ks, gs = nz[base + j]
            nk = len(ks)
            if nk == 0:
                continue
            if ax_mul_ovf(ui, vj, &w):
                raise _Overflow()
            for t in range(nk):
                g = gs[t]
                kk = ks[t]
                if ax_mul_ovf(w, g, &prod):
                    raise _Overflow()
                if ax_add_ovf(out[kk], prod, &out[kk]):
                    raise _Overflow()
    return 0


cdef list _contract_obj(list nz, Py_ssize_t n, list u, list v):
    cdef Py_ssize_t i, j, base
    cdef list out = [0] * n
    cdef tuple ks, gs
    cdef object ui, vj, w
    for i in range(n):
        ui = u[i]
        if not ui:
            continue
        base = i * n
        for j in range(n):
            vj = v[j]
            if not vj:
                continue
            ks, gs = nz[base + j]
            if not ks:
                continue
            w = ui * vj
            for k, g in zip(ks, gs):
                out[k] += w * g
    return out


def contract(list nz, Py_ssize_t n, list u, list v):
    """Integer bilinear contraction ``out[k] = sum_ij u[i] v[j] g[i][j][k]``."""
    cdef long long *buf = <long long *> malloc(max(n, 1) * sizeof(long long))
    cdef Py_ssize_t k
    if buf == NULL:
        raise MemoryError()
    try:
        try:
            _contract_c(nz, n, u, v, buf)
        except (_Overflow, OverflowError):
            return _contract_obj(nz, n, u, v)
        return [buf[k] for k in range(n)]
    finally:
        free(buf)


cdef int _gj_c(long long *m, Py_ssize_t nrows, Py_ssize_t ncols,
               list pivots, long long *dout) except -1:
    cdef Py_ssize_t r = 0, k, p, i, j
    cdef long long prev = 1, piv, f, a, b, tmp
    for k in range(ncols):
        if r == nrows:
            break
        p = r
        while p < nrows and m[p * ncols + k] == 0:
            p += 1
        if p == nrows:
            continue
        if p != r:
            for j in range(ncols):
                tmp = m[p * ncols + j]
                m[p * ncols + j] = m[r * ncols + j]
                m[r * ncols + j] = tmp
        piv = m[r * ncols + k]
        for i in range(nrows):
            if i == r:
                continue
            f = m[i * ncols + k]
            for j in range(ncols):
                if ax_mul_ovf(piv, m[i * ncols + j], &a):
                    raise _Overflow()
                if ax_mul_ovf(f, m[r * ncols + j], &b):
                    raise _Overflow()
                if ax_sub_ovf(a, b, &a):
                    raise _Overflow()
                if prev == -1 and a == LLONG_MIN:
                    raise _Overflow()
                m[i * ncols + j] = a // prev
        prev = piv
        pivots.append(k)
        r += 1
    dout[0] = prev
    return 0


def _gauss_jordan_obj(rows, ncols):
    cdef list m = [list(src) for src in rows]
    cdef Py_ssize_t nrows = len(m), r = 0, k, p, i, j
    cdef list pivots = []
    cdef list prow, row
    cdef object prev = 1, piv, f
    for k in range(ncols):
        if r == nrows:
            break
        p = r
        while p < nrows and m[p][k] == 0:
            p += 1
        if p == nrows:
            continue
        if p != r:
            m[p], m[r] = m[r], m[p]
        prow = m[r]
        piv = prow[k]
        for i in range(nrows):
            if i == r:
                continue
            row = m[i]
            f = row[k]
            for j in range(ncols):
                row[j] = (piv * row[j] - f * prow[j]) // prev
        prev = piv
        pivots.append(k)
        r += 1
    return m, pivots, prev


def gauss_jordan(rows, Py_ssize_t ncols):
    """Fraction-free Gauss-Jordan elimination; see the pure-Python twin."""
    cdef Py_ssize_t nrows = len(rows), i, j
    cdef long long d = 1
    cdef long long *buf
    cdef list pivots = []
    cdef list out
    buf = <long long *> malloc(max(nrows * ncols, 1) * sizeof(long long))
    if buf == NULL:
        raise MemoryError()
    try:
        try:
            for i in range(nrows):
                row = rows[i]
                for j in range(ncols):
                    buf[i * ncols + j] = row[j]
            _gj_c(buf, nrows, ncols, pivots, &d)
            out = [[buf[i * ncols + j] for j in range(ncols)] for i in range(nrows)]
            dd = d
        except (_Overflow, OverflowError):
            out, pivots, dd = _gauss_jordan_obj(rows, ncols)
    finally:
        free(buf)
    if dd < 0:
        for i in range(len(pivots)):
            out[i] = [-e for e in out[i]]
        dd = -dd
    return out, pivots, dd


cdef int _matmul_c(long long *a, long long *b, long long *c,
                   Py_ssize_t nrows, Py_ssize_t inner, Py_ssize_t ncols) except -1:
    cdef Py_ssize_t i, t, j
    cdef long long x, prod
    for i in range(nrows * ncols):
        c[i] = 0
    for i in range(nrows):
        for t in range(inner):
            x = a[i * inner + t]
            if x == 0:
                continue
            for j in range(ncols):
                if ax_mul_ovf(x, b[t * ncols + j], &prod):
                    raise _Overflow()
                if ax_add_ovf(c[i * ncols + j], prod, &c[i * ncols + j]):
                    raise _Overflow()
    return 0


def _matmul_obj(a, b, Py_ssize_t inner, Py_ssize_t ncols):
    cdef list out = []
    cdef list acc
    cdef Py_ssize_t t, j
    for row in a:
        acc = [0] * ncols
        for t in range(inner):
            x = row[t]
            if not x:
                continue
            brow = b[t]
            for j in range(ncols):
                y = brow[j]
                if y:
                    acc[j] += x * y
        out.append(acc)
    return out


def matmul(a, b, Py_ssize_t inner, Py_ssize_t ncols):
    """Integer matrix product; see the pure-Python twin."""
    cdef Py_ssize_t nrows = len(a), i, j
    cdef long long *pa = <long long *> malloc(max(nrows * inner, 1) * sizeof(long long))
    cdef long long *pb = <long long *> malloc(max(inner * ncols, 1) * sizeof(long long))
    cdef long long *pc = <long long *> malloc(max(nrows * ncols, 1) * sizeof(long long))
    if pa == NULL or pb == NULL or pc == NULL:
        free(pa)
        free(pb)
        free(pc)
        raise MemoryError()
    try:
        try:
            for i in range(nrows):
                row = a[i]
                for j in range(inner):
                    pa[i * inner + j] = row[j]
            for i in range(inner):
                row = b[i]
                for j in range(ncols):
                    pb[i * ncols + j] = row[j]
            _matmul_c(pa, pb, pc, nrows, inner, ncols)
        except (_Overflow, OverflowError):
            return _matmul_obj(a, b, inner, ncols)
        return [[pc[i * ncols + j] for j in range(ncols)] for i in range(nrows)]
    finally:
        free(pa)
        free(pb)
        free(pc)
