# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled implementations of the O(v^2) counting kernels.

Mirrors _kernels_py exactly: same four functions, same signatures, same
int64 exact arithmetic, same flat digit indexing (index = sum d_i * p**i).
"""

import numpy as np


def convolve(a, b, int p, int ndigits):
    """c[g] = sum over x + y = g of a[x] * b[y], exactly, in int64."""
    a = np.ascontiguousarray(a, dtype=np.int64)
    b = np.ascontiguousarray(b, dtype=np.int64)
    cdef long long v = 1
    cdef int i
    for i in range(ndigits):
        v *= p
    if a.shape != (v,) or b.shape != (v,):
        raise ValueError(f"operands must have shape ({v},)")
    if np.count_nonzero(a) > np.count_nonzero(b):
        a, b = b, a
    out_arr = np.zeros(v, dtype=np.int64)
    cdef long long[::1] av = a
    cdef long long[::1] bv = b
    cdef long long[::1] out = out_arr
    dig_arr = np.empty((v, ndigits), dtype=np.int16)
    cdef short[:, ::1] dig = dig_arr
    pow_arr = np.empty(ndigits, dtype=np.int64)
    cdef long long[::1] pows = pow_arr
    cdef long long x, y, g, rem, pw, ax
    cdef int d, s
    pw = 1
    for d in range(ndigits):
        pows[d] = pw
        pw *= p
    for x in range(v):
        rem = x
        for d in range(ndigits):
            dig[x, d] = rem % p
            rem //= p
    for x in range(v):
        ax = av[x]
        if ax == 0:
            continue
        for y in range(v):
            if bv[y] == 0:
                continue
            g = 0
            for d in range(ndigits):
                s = dig[x, d] + dig[y, d]
                if s >= p:
                    s -= p
                g += s * pows[d]
            out[g] += ax * bv[y]
    return out_arr


def difference_counts(members, int p, int ndigits):
    """counts[g] = #{(d1, d2) in members^2 : d1 - d2 = g}."""
    mem_arr = np.ascontiguousarray(members, dtype=np.int64)
    cdef long long v = 1
    cdef int i
    for i in range(ndigits):
        v *= p
    cdef long long[::1] mem = mem_arr
    cdef Py_ssize_t m = mem.shape[0]
    dig_arr = np.empty((m, ndigits), dtype=np.int16)
    cdef short[:, ::1] dig = dig_arr
    cdef Py_ssize_t r
    cdef long long rem
    cdef int d
    for r in range(m):
        rem = mem[r]
        for d in range(ndigits):
            dig[r, d] = rem % p
            rem //= p
    out_arr = np.zeros(v, dtype=np.int64)
    cdef long long[::1] out = out_arr
    cdef Py_ssize_t a, b
    cdef long long g, pw
    cdef int delta
    for a in range(m):
        for b in range(m):
            g = 0
            pw = 1
            for d in range(ndigits):
                delta = (dig[a, d] - dig[b, d]) % p
                if delta < 0:
                    delta += p
                g += delta * pw
                pw *= p
            out[g] += 1
    return out_arr


def character_counts(left_digits, right_digits, int p):
    """counts[i, t] = #{j : <left[i], right[j]> = t mod p}."""
    left = np.ascontiguousarray(left_digits, dtype=np.int64)
    right = np.ascontiguousarray(right_digits, dtype=np.int64)
    if left.ndim != 2 or right.ndim != 2 or left.shape[1] != right.shape[1]:
        raise ValueError("digit matrices must be 2-D with matching width")
    cdef long long[:, ::1] lv = left
    cdef long long[:, ::1] rv = right
    cdef Py_ssize_t nl = lv.shape[0], nr = rv.shape[0], w = lv.shape[1]
    out_arr = np.zeros((nl, p), dtype=np.int64)
    cdef long long[:, ::1] out = out_arr
    cdef Py_ssize_t i, j, d
    cdef long long acc, t
    for i in range(nl):
        for j in range(nr):
            acc = 0
            for d in range(w):
                acc += lv[i, d] * rv[j, d]
            t = acc % p
            if t < 0:
                t += p
            out[i, t] += 1
    return out_arr


def walsh_counts(fvals, tr_anti, int p):
    """counts[i, t] = #{x : f(x) + Tr(b_i * x) = t mod p}, dlog-ordered."""
    fv_arr = np.ascontiguousarray(fvals, dtype=np.int64)
    tr_arr = np.ascontiguousarray(tr_anti, dtype=np.int64)
    cdef long long[::1] fv = fv_arr
    cdef long long[::1] tr = tr_arr
    cdef Py_ssize_t q = fv.shape[0]
    cdef Py_ssize_t L = q - 1
    if tr.shape[0] != L:
        raise ValueError("tr_anti must have length q - 1")
    out_arr = np.zeros((q, p), dtype=np.int64)
    cdef long long[:, ::1] out = out_arr
    cdef Py_ssize_t s, t, idx
    cdef long long f0 = fv[0] % p
    for t in range(q):
        out[0, fv[t] % p] += 1
    for s in range(L):
        out[1 + s, f0] += 1  # the x = 0 term, Tr(b * 0) = 0
        for t in range(L):
            idx = s + t
            if idx >= L:
                idx -= L
            out[1 + s, (fv[1 + t] + tr[idx]) % p] += 1
    return out_arr
