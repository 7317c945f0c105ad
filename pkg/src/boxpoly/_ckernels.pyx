# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled ell-loop kernels; same contract as ``boxpoly._pykernels``.

Callers must guarantee ``len(steps) * N < 2**62`` so residue sums fit int64.
"""

from libc.stdlib cimport malloc, free

ctypedef long long i64


cdef i64* _start(steps, i64 N, i64 lo) except NULL:
    cdef Py_ssize_t w = len(steps)
    cdef i64* res = <i64*> malloc(w * sizeof(i64))
    if res == NULL:
        raise MemoryError()
    cdef Py_ssize_t j
    for j in range(w):
        # big-int product in Python space, reduced before narrowing
        res[j] = <i64> ((lo * steps[j]) % N)
    return res


def age_counts(steps, N, lo, hi):
    cdef Py_ssize_t w = len(steps)
    cdef i64 n = N
    cdef i64 ell, age, total, r, best = -1
    cdef int zeros
    cdef Py_ssize_t j
    cdef i64* res = _start(steps, n, lo)
    cdef i64* st = <i64*> malloc(w * sizeof(i64))
    cdef i64* all_h = <i64*> malloc(w * sizeof(i64))
    cdef i64* box_h = <i64*> malloc(w * sizeof(i64))
    if st == NULL or all_h == NULL or box_h == NULL:
        free(res); free(st); free(all_h); free(box_h)
        raise MemoryError()
    try:
        for j in range(w):
            st[j] = steps[j]
            all_h[j] = 0
            box_h[j] = 0
        for ell in range(lo, hi):
            total = 0
            zeros = 0
            for j in range(w):
                r = res[j]
                total += r
                if r == 0:
                    zeros += 1
                r += st[j]
                if r >= n:
                    r -= n
                res[j] = r
            age = total // n
            all_h[age] += 1
            if zeros == 0:
                box_h[age] += 1
            if best < 0 or age + zeros < best:
                best = age + zeros
        return ([all_h[j] for j in range(w)],
                [box_h[j] for j in range(w)],
                best)
    finally:
        free(res); free(st); free(all_h); free(box_h)


def age_table(steps, N, lo, hi):
    cdef Py_ssize_t w = len(steps)
    cdef i64 n = N
    cdef i64 ell, total, r
    cdef int zeros
    cdef Py_ssize_t j
    cdef i64* res = _start(steps, n, lo)
    cdef i64* st = <i64*> malloc(w * sizeof(i64))
    if st == NULL:
        free(res)
        raise MemoryError()
    ages = []
    zero_counts = []
    try:
        for j in range(w):
            st[j] = steps[j]
        for ell in range(lo, hi):
            total = 0
            zeros = 0
            for j in range(w):
                r = res[j]
                total += r
                if r == 0:
                    zeros += 1
                r += st[j]
                if r >= n:
                    r -= n
                res[j] = r
            ages.append(total // n)
            zero_counts.append(zeros)
        return ages, zero_counts
    finally:
        free(res); free(st)
