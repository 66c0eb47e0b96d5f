"""Pure numpy implementations of the O(v^2) counting kernels.

All kernels work on the flat integer indexing of an elementary abelian group
(Z_p)^ndigits: the element with digit vector (d_0, ..., d_{nd-1}) has index
sum d_i * p**i, so index digits ARE group coordinates and group addition is
digit-wise addition mod p (no carries).

The compiled extension in _speedups.pyx implements the same four functions
with identical signatures; kernels.py picks whichever is available.
"""

import numpy as np

# row chunk size for the pairwise kernels, keeps peak memory near 32 MB
_CHUNK = 1 << 14


def _digit_table(p: int, ndigits: int) -> np.ndarray:
    idx = np.arange(p**ndigits, dtype=np.int64)
    pows = p ** np.arange(ndigits, dtype=np.int64)
    return ((idx[:, None] // pows[None, :]) % p).astype(np.int16)


def convolve(a, b, p: int, ndigits: int) -> np.ndarray:
    """c[g] = sum over x + y = g of a[x] * b[y], exactly, in int64."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    v = p**ndigits
    if a.shape != (v,) or b.shape != (v,):
        raise ValueError(f"operands must have shape ({v},)")
    if np.count_nonzero(a) > np.count_nonzero(b):
        a, b = b, a
    out = np.zeros(v, dtype=np.int64)
    dig = _digit_table(p, ndigits)
    pows = p ** np.arange(ndigits, dtype=np.int64)
    for x in np.flatnonzero(a):
        shifted = ((dig + dig[x]) % p) @ pows
        out[shifted] += a[x] * b
    return out


def difference_counts(members, p: int, ndigits: int) -> np.ndarray:
    """counts[g] = #{(d1, d2) in members^2 : d1 - d2 = g}."""
    members = np.asarray(members, dtype=np.int64)
    v = p**ndigits
    pows = p ** np.arange(ndigits, dtype=np.int64)
    dig = ((members[:, None] // pows[None, :]) % p).astype(np.int16)
    out = np.zeros(v, dtype=np.int64)
    m = len(members)
    for lo in range(0, m, _CHUNK):
        hi = min(lo + _CHUNK, m)
        diffs = ((dig[lo:hi, None, :] - dig[None, :, :]) % p).astype(np.int64)
        out += np.bincount((diffs @ pows).ravel(), minlength=v)
    return out


def character_counts(left_digits, right_digits, p: int) -> np.ndarray:
    """counts[i, t] = #{j : <left[i], right[j]> = t mod p}.

    The rows of left_digits/right_digits are digit vectors; the pairing is
    the plain dot product mod p.
    """
    left = np.asarray(left_digits, dtype=np.int64)
    right = np.asarray(right_digits, dtype=np.int64)
    if left.ndim != 2 or right.ndim != 2 or left.shape[1] != right.shape[1]:
        raise ValueError("digit matrices must be 2-D with matching width")
    nl = left.shape[0]
    out = np.empty((nl, p), dtype=np.int64)
    rt = right.T
    for lo in range(0, nl, _CHUNK):
        hi = min(lo + _CHUNK, nl)
        res = (left[lo:hi] @ rt) % p
        offsets = np.arange(hi - lo, dtype=np.int64)[:, None] * p + res
        out[lo:hi] = np.bincount(offsets.ravel(), minlength=(hi - lo) * p).reshape(-1, p)
    return out


def walsh_counts(fvals, tr_anti, p: int) -> np.ndarray:
    """counts[i, t] = #{x : f(x) + Tr(b_i * x) = t mod p}, dlog-ordered.

    fvals[0] = f(0) and fvals[1 + s] = f(g^s); tr_anti[s] = Tr(g^s).  Row i=0
    is the trivial character b = 0; row 1 + s is b = g^s, using
    Tr(g^s * g^t) = tr_anti[(s + t) mod (q-1)].
    """
    fvals = np.asarray(fvals, dtype=np.int64)
    tr_anti = np.asarray(tr_anti, dtype=np.int64)
    q = len(fvals)
    L = q - 1
    if len(tr_anti) != L:
        raise ValueError("tr_anti must have length q - 1")
    out = np.empty((q, p), dtype=np.int64)
    out[0] = np.bincount(fvals % p, minlength=p)
    fnz = fvals[1:]
    ts = np.arange(L, dtype=np.int64)
    for lo in range(0, L, _CHUNK):
        hi = min(lo + _CHUNK, L)
        rows = (fnz[None, :] + tr_anti[(np.arange(lo, hi)[:, None] + ts[None, :]) % L]) % p
        offsets = np.arange(hi - lo, dtype=np.int64)[:, None] * p + rows
        out[1 + lo : 1 + hi] = np.bincount(
            offsets.ravel(), minlength=(hi - lo) * p
        ).reshape(-1, p)
    out[1:, fvals[0] % p] += 1  # the x = 0 term, Tr(b * 0) = 0
    return out
