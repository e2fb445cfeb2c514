# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled lattice scans.  Same contract as ``_pykernels``.

Arithmetic is in ``long long``; callers guarantee no overflow (see
``multjump.kernels``).
"""
from libc.stdlib cimport malloc, free


cdef long long _gcd(long long a, long long b) nogil:
    if a < 0:
        a = -a
    while b:
        a, b = b, a % b
    return a


cdef long long _floordiv(long long a, long long b) nogil:
    # b > 0
    cdef long long q = a / b
    if (a % b != 0) and (a < 0):
        q -= 1
    return q


def scaling_counts(normals, offsets, upper, long long bound_num, long long bound_den):
    cdef int d = len(upper)
    cdef int nf = len(normals)
    cdef int last = d - 1
    cdef long long *N = <long long *> malloc(nf * d * sizeof(long long))
    cdef long long *B = <long long *> malloc(nf * sizeof(long long))
    cdef long long *base = <long long *> malloc(nf * sizeof(long long))
    cdef long long *up = <long long *> malloc(d * sizeof(long long))
    cdef long long *v = <long long *> malloc(d * sizeof(long long))
    cdef int i, j
    cdef long long t, val, best_num, best_den, g
    counts = {}
    try:
        for i in range(nf):
            B[i] = offsets[i]
            for j in range(d):
                N[i * d + j] = normals[i][j]
        for j in range(d):
            up[j] = upper[j]
            v[j] = 1
        for j in range(last):
            if up[j] < 1:
                return counts
        while True:
            for i in range(nf):
                val = 0
                for j in range(last):
                    val += N[i * d + j] * v[j]
                base[i] = val
            t = 1
            while t <= up[last]:
                best_num = base[0] + N[last] * t
                best_den = B[0]
                for i in range(1, nf):
                    val = base[i] + N[i * d + last] * t
                    if val * best_den < best_num * B[i]:
                        best_num = val
                        best_den = B[i]
                if best_num * bound_den > bound_num * best_den:
                    break
                g = _gcd(best_num, best_den)
                key = (best_num // g, best_den // g)
                counts[key] = counts.get(key, 0) + 1
                t += 1
            # odometer over the prefix, last prefix coordinate fastest
            j = last - 1
            while j >= 0:
                v[j] += 1
                if v[j] <= up[j]:
                    break
                v[j] = 1
                j -= 1
            if j < 0:
                break
        return counts
    finally:
        free(N)
        free(B)
        free(base)
        free(up)
        free(v)


def staircase_heights(normals, offsets, prefix_upper, long long c_num, long long c_den):
    cdef int last = len(prefix_upper)
    cdef int d = last + 1
    cdef int nf = len(normals)
    cdef long long *N = <long long *> malloc(nf * d * sizeof(long long))
    cdef long long *B = <long long *> malloc(nf * sizeof(long long))
    cdef long long *up = <long long *> malloc(d * sizeof(long long))
    cdef long long *u = <long long *> malloc(d * sizeof(long long))
    cdef int i, j
    cdef long long k, s, need
    out = []
    try:
        for i in range(nf):
            B[i] = offsets[i]
            for j in range(d):
                N[i * d + j] = normals[i][j]
        for j in range(last):
            up[j] = prefix_upper[j]
            u[j] = 0
            if up[j] < 0:
                return out
        while True:
            k = 0
            for i in range(nf):
                s = 0
                for j in range(last):
                    s += N[i * d + j] * (u[j] + 1)
                need = _floordiv(c_num * B[i] - c_den * s, c_den * N[i * d + last])
                if need > k:
                    k = need
            out.append(k)
            j = last - 1
            while j >= 0:
                u[j] += 1
                if u[j] <= up[j]:
                    break
                u[j] = 0
                j -= 1
            if j < 0:
                break
        return out
    finally:
        free(N)
        free(B)
        free(up)
        free(u)
