# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel for the weight-12 discriminant-form q-expansion.

Strategy: the cube of the Dedekind eta product has the sparse Jacobi
expansion sum_k (-1)^k (2k+1) x^{k(k+1)/2}.  Four sparse multiplications
build the 12th power in int64 (its coefficients stay below ~1e11 for
n <= 10^5), then one dense squaring with 128-bit accumulators yields the
24th power, whose coefficients exceed the int64 range.
"""

from libc.stdlib cimport calloc, free

cdef extern from *:
    ctypedef long long int128 "__int128"


def tau_table(int x):
    """Return [tau(1), ..., tau(x)] as Python ints."""
    if x < 1:
        return []
    cdef int n = x          # need coefficients of the 24th power up to x-1
    cdef long long *c12 = <long long *> calloc(n, sizeof(long long))
    cdef long long *tmp = <long long *> calloc(n, sizeof(long long))
    if c12 == NULL or tmp == NULL:
        free(c12)
        free(tmp)
        raise MemoryError()

    cdef int i, j, k, e, rep
    cdef long long coef
    cdef int128 acc
    try:
        c12[0] = 1
        for rep in range(4):
            for i in range(n):
                tmp[i] = 0
            k = 0
            while k * (k + 1) // 2 < n:
                e = k * (k + 1) // 2
                coef = 2 * k + 1
                if k & 1:
                    coef = -coef
                for i in range(n - e):
                    if c12[i] != 0:
                        tmp[i + e] += coef * c12[i]
                k += 1
            c12, tmp = tmp, c12

        out = []
        for i in range(n):
            acc = 0
            for j in range(i // 2 + 1):
                if j == i - j:
                    acc += <int128> c12[j] * c12[j]
                else:
                    acc += 2 * <int128> c12[j] * c12[i - j]
            # int128 -> Python int, sign-safe
            hi = <long long> (acc >> 64)
            lo = <unsigned long long> acc
            out.append((int(hi) << 64) + int(lo))
        return out
    finally:
        free(c12)
        free(tmp)
