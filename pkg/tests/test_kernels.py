"""Kernel routines against naive reference implementations."""

import numpy as np
import pytest

from pdslab import kernels
from pdslab.gf import construct_field


def naive_convolve(a, b, p, ndigits):
    v = p**ndigits
    digits = np.array([[(x // p**i) % p for i in range(ndigits)] for x in range(v)])
    pows = np.array([p**i for i in range(ndigits)])
    out = np.zeros(v, dtype=np.int64)
    for x in range(v):
        if a[x] == 0:
            continue
        for y in range(v):
            if b[y] == 0:
                continue
            z = ((digits[x] + digits[y]) % p) @ pows
            out[z] += a[x] * b[y]
    return out


def naive_difference_counts(members, p, ndigits):
    v = p**ndigits
    digits = np.array([[(x // p**i) % p for i in range(ndigits)] for x in range(v)])
    pows = np.array([p**i for i in range(ndigits)])
    out = np.zeros(v, dtype=np.int64)
    for x in members:
        for y in members:
            z = ((digits[x] - digits[y]) % p) @ pows
            out[z] += 1
    return out


def naive_character_counts(left, right, p):
    nl = left.shape[0]
    out = np.zeros((nl, p), dtype=np.int64)
    for i in range(nl):
        for j in range(right.shape[0]):
            out[i, (left[i] @ right[j]) % p] += 1
    return out


def naive_walsh_counts(field, fvals):
    p, q = field.p, field.order
    out = np.zeros((q, p), dtype=np.int64)
    for bi in range(q):
        b = field.from_dlog_index(bi)
        for xi in range(q):
            x = field.from_dlog_index(xi)
            e = (fvals[xi] + field.trace(field.mul(b, x))) % p
            out[bi, e] += 1
    return out


CASES = [(2, 4), (3, 3), (5, 2), (7, 2)]


@pytest.mark.parametrize("p,ndigits", CASES)
def test_convolve_matches_naive(p, ndigits):
    rng = np.random.default_rng(7 * p + ndigits)
    v = p**ndigits
    a = rng.integers(-3, 4, size=v)
    b = rng.integers(-3, 4, size=v)
    got = kernels.convolve(a, b, p, ndigits)
    assert np.array_equal(got, naive_convolve(a, b, p, ndigits))


def test_convolve_sparse_identity():
    # delta at 0 is a two-sided identity
    p, ndigits = 3, 4
    v = p**ndigits
    rng = np.random.default_rng(0)
    a = rng.integers(-5, 6, size=v)
    delta = np.zeros(v, dtype=np.int64)
    delta[0] = 1
    assert np.array_equal(kernels.convolve(a, delta, p, ndigits), a)
    assert np.array_equal(kernels.convolve(delta, a, p, ndigits), a)


def test_convolve_rejects_bad_shapes():
    with pytest.raises(ValueError):
        kernels.convolve(np.zeros(8), np.zeros(9), 3, 2)
    with pytest.raises(ValueError):
        kernels.convolve(np.zeros(8), np.zeros(8), 3, 2)


@pytest.mark.parametrize("p,ndigits", CASES)
def test_difference_counts_matches_naive(p, ndigits):
    rng = np.random.default_rng(13 * p + ndigits)
    v = p**ndigits
    members = np.sort(rng.choice(v, size=min(v // 2 + 1, 20), replace=False))
    got = kernels.difference_counts(members, p, ndigits)
    assert np.array_equal(got, naive_difference_counts(members, p, ndigits))
    # k^2 differences in total, k of them land on zero
    assert got.sum() == len(members) ** 2
    assert got[0] == len(members)


@pytest.mark.parametrize("p,ndigits", CASES)
def test_character_counts_matches_naive(p, ndigits):
    rng = np.random.default_rng(17 * p + ndigits)
    left = rng.integers(0, p, size=(11, ndigits))
    right = rng.integers(0, p, size=(23, ndigits))
    got = kernels.character_counts(left, right, p)
    assert np.array_equal(got, naive_character_counts(left, right, p))
    assert np.all(got.sum(axis=1) == right.shape[0])


@pytest.mark.parametrize("p,k", [(3, 2), (5, 2), (3, 3), (7, 1)])
def test_walsh_counts_matches_naive(p, k):
    field = construct_field(p, k)
    rng = np.random.default_rng(p * k)
    fvals = rng.integers(0, p, size=field.order)
    tr_anti = field.trace_table[field.antilog]
    got = kernels.walsh_counts(fvals, tr_anti, p)
    assert np.array_equal(got, naive_walsh_counts(field, fvals))
    assert np.all(got.sum(axis=1) == field.order)


def test_backend_selection_roundtrip():
    names = kernels.available_backends()
    assert "python" in names
    before = kernels.active_backend()
    kernels.use_backend("python")
    assert kernels.active_backend() == "python"
    kernels.use_backend("auto")
    assert kernels.active_backend() == ("cython" if "cython" in names else "python")
    kernels.use_backend(before)


def test_backend_unknown_rejected():
    with pytest.raises(ValueError):
        kernels.use_backend("fortran")


@pytest.mark.skipif(
    "cython" not in kernels.available_backends(), reason="compiled backend not built"
)
@pytest.mark.parametrize("p,ndigits", CASES)
def test_backends_agree(p, ndigits):
    rng = np.random.default_rng(p + ndigits)
    v = p**ndigits
    a = rng.integers(-4, 5, size=v)
    b = rng.integers(-4, 5, size=v)
    members = np.sort(rng.choice(v, size=v // 3 + 1, replace=False))
    left = rng.integers(0, p, size=(9, ndigits))
    right = rng.integers(0, p, size=(14, ndigits))
    field = construct_field(p, 2)
    fvals = rng.integers(0, p, size=field.order)
    tr_anti = field.trace_table[field.antilog]
    results = {}
    for name in ("python", "cython"):
        kernels.use_backend(name)
        results[name] = (
            kernels.convolve(a, b, p, ndigits),
            kernels.difference_counts(members, p, ndigits),
            kernels.character_counts(left, right, p),
            kernels.walsh_counts(fvals, tr_anti, p),
        )
    kernels.use_backend("auto")
    for x, y in zip(results["python"], results["cython"]):
        assert np.array_equal(x, y)
