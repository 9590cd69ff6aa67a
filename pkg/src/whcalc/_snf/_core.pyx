# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled Smith normal form kernel over checked 64-bit integers.

Mirrors ``pure.smith`` operation for operation (same pivot rule, same
update order) so both backends return bit-identical results.  Any entry
or intermediate value that leaves the int64 range raises OverflowError;
the dispatcher then falls back to the arbitrary-precision backend.
"""

from libc.stdlib cimport free, malloc

cdef extern from *:
    """
    static inline int whc_add(long long a, long long b, long long *r) {
        return __builtin_add_overflow(a, b, r);
    }
    static inline int whc_sub(long long a, long long b, long long *r) {
        return __builtin_sub_overflow(a, b, r);
    }
    static inline int whc_mul(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    """
    int whc_add(long long a, long long b, long long *r) nogil
    int whc_sub(long long a, long long b, long long *r) nogil
    int whc_mul(long long a, long long b, long long *r) nogil


cdef inline long long _nearest_quotient(long long v, long long p):
    # p > 0 throughout; symmetric remainder in (-p/2, p/2].
    # // has Python floor semantics here (cdivision is off).
    cdef long long q = v // p
    cdef long long r = v - q * p
    if r > p - r:
        q += 1
    return q


cdef int _sub_scaled(long long *dst, long long *src, long long q, Py_ssize_t n) except -1:
    cdef Py_ssize_t j
    cdef long long t
    for j in range(n):
        if whc_mul(q, src[j], &t):
            raise OverflowError("int64 overflow in row operation")
        if whc_sub(dst[j], t, &dst[j]):
            raise OverflowError("int64 overflow in row operation")
    return 0


cdef int _add_row(long long *dst, long long *src, Py_ssize_t n) except -1:
    cdef Py_ssize_t j
    for j in range(n):
        if whc_add(dst[j], src[j], &dst[j]):
            raise OverflowError("int64 overflow in row operation")
    return 0


cdef void _swap_rows(long long *a, Py_ssize_t n, Py_ssize_t i, Py_ssize_t k):
    cdef Py_ssize_t j
    cdef long long t
    for j in range(n):
        t = a[i * n + j]
        a[i * n + j] = a[k * n + j]
        a[k * n + j] = t


cdef void _swap_cols(long long *a, Py_ssize_t m, Py_ssize_t n,
                     Py_ssize_t j, Py_ssize_t k):
    cdef Py_ssize_t i
    cdef long long t
    for i in range(m):
        t = a[i * n + j]
        a[i * n + j] = a[i * n + k]
        a[i * n + k] = t


cdef int _neg_row(long long *a, Py_ssize_t n, Py_ssize_t k) except -1:
    cdef Py_ssize_t j
    for j in range(n):
        if whc_sub(0, a[k * n + j], &a[k * n + j]):
            raise OverflowError("int64 overflow negating row")
    return 0


def smith(rows, bint want_transforms=True):
    cdef Py_ssize_t m = len(rows)
    cdef Py_ssize_t n = len(rows[0]) if m else 0
    cdef Py_ssize_t i, j, k, size, pi, pj
    cdef long long v, av, best, pk, q, t
    cdef long long *a = NULL
    cdef long long *left = NULL
    cdef long long *right = NULL

    a = <long long *> malloc(max(m * n, 1) * sizeof(long long))
    if want_transforms:
        left = <long long *> malloc(max(m * m, 1) * sizeof(long long))
        right = <long long *> malloc(max(n * n, 1) * sizeof(long long))
    try:
        for i in range(m):
            row = rows[i]
            if len(row) != n:
                raise ValueError("ragged matrix")
            for j in range(n):
                a[i * n + j] = row[j]  # raises OverflowError if out of range
        if want_transforms:
            for i in range(m):
                for j in range(m):
                    left[i * m + j] = 1 if i == j else 0
            for i in range(n):
                for j in range(n):
                    right[i * n + j] = 1 if i == j else 0

        k = 0
        size = m if m < n else n
        while k < size:
            # locate minimal-|entry| pivot, row-major tie break
            best = 0
            pi = -1
            pj = -1
            for i in range(k, m):
                if best == 1:
                    break
                for j in range(k, n):
                    v = a[i * n + j]
                    if v != 0:
                        av = -v if v < 0 else v
                        if best == 0 or av < best:
                            best = av
                            pi = i
                            pj = j
                            if av == 1:
                                break
            if best == 0:
                break
            if pi != k:
                _swap_rows(a, n, pi, k)
                if want_transforms:
                    _swap_rows(left, m, pi, k)
            if pj != k:
                _swap_cols(a, m, n, pj, k)
                if want_transforms:
                    _swap_cols(right, n, n, pj, k)
            if a[k * n + k] < 0:
                _neg_row(a, n, k)
                if want_transforms:
                    _neg_row(left, m, k)

            while True:
                # clear column k
                restart = False
                pk = a[k * n + k]
                for i in range(k + 1, m):
                    v = a[i * n + k]
                    if v != 0:
                        q = _nearest_quotient(v, pk)
                        if q != 0:
                            _sub_scaled(a + i * n, a + k * n, q, n)
                            if want_transforms:
                                _sub_scaled(left + i * m, left + k * m, q, m)
                        if a[i * n + k] != 0:
                            _swap_rows(a, n, i, k)
                            if want_transforms:
                                _swap_rows(left, m, i, k)
                            if a[k * n + k] < 0:
                                _neg_row(a, n, k)
                                if want_transforms:
                                    _neg_row(left, m, k)
                            restart = True
                            break
                if restart:
                    continue
                # clear row k
                pk = a[k * n + k]
                for j in range(k + 1, n):
                    v = a[k * n + j]
                    if v != 0:
                        q = _nearest_quotient(v, pk)
                        if q != 0:
                            for i in range(m):
                                if whc_mul(q, a[i * n + k], &t):
                                    raise OverflowError("int64 overflow")
                                if whc_sub(a[i * n + j], t, &a[i * n + j]):
                                    raise OverflowError("int64 overflow")
                            if want_transforms:
                                for i in range(n):
                                    if whc_mul(q, right[i * n + k], &t):
                                        raise OverflowError("int64 overflow")
                                    if whc_sub(right[i * n + j], t,
                                               &right[i * n + j]):
                                        raise OverflowError("int64 overflow")
                        if a[k * n + j] != 0:
                            _swap_cols(a, m, n, j, k)
                            if want_transforms:
                                _swap_cols(right, n, n, j, k)
                            if a[k * n + k] < 0:
                                for i in range(m):
                                    if whc_sub(0, a[i * n + k], &a[i * n + k]):
                                        raise OverflowError("int64 overflow")
                                if want_transforms:
                                    for i in range(n):
                                        if whc_sub(0, right[i * n + k],
                                                   &right[i * n + k]):
                                            raise OverflowError("int64 overflow")
                            restart = True
                            break
                if restart:
                    continue
                # divisibility of the remaining block
                pk = a[k * n + k]
                if pk != 1:
                    for i in range(k + 1, m):
                        if restart:
                            break
                        for j in range(k + 1, n):
                            if a[i * n + j] % pk != 0:
                                _add_row(a + k * n, a + i * n, n)
                                if want_transforms:
                                    _add_row(left + k * m, left + i * m, m)
                                restart = True
                                break
                if restart:
                    continue
                break
            k += 1

        diag = [a[i * n + i] for i in range(k)]
        if not want_transforms:
            return diag, None, None
        lout = [[left[i * m + j] for j in range(m)] for i in range(m)]
        rout = [[right[i * n + j] for j in range(n)] for i in range(n)]
        return diag, lout, rout
    finally:
        free(a)
        free(left)
        free(right)
