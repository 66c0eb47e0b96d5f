"""Quadratic form tests: evaluation identities, types, count formulas."""

import random

import numpy as np
import pytest

from pdslab.gf import construct_field
from pdslab.qform import (
    ELLIPTIC,
    HYPERBOLIC,
    FormType,
    QuadraticForm,
    anisotropic_plane,
    epsilon_of,
    form_type,
    standard_elliptic,
    standard_form,
    standard_hyperbolic,
)

GRID = [(2, 1, 1), (2, 2, 1), (3, 1, 1), (3, 1, 2), (5, 1, 1), (3, 2, 1), (2, 3, 1), (7, 1, 1), (2, 2, 2)]


def all_vectors(F, n):
    q = F.order
    for idx in range(q**n):
        vec = []
        rem = idx
        for _ in range(n):
            rem, c = divmod(rem, q)
            vec.append(c)
        yield tuple(vec)


def random_form(rng, F, n):
    coeffs = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            coeffs[i][j] = rng.randrange(F.order)
    return QuadraticForm(F, coeffs)


def test_evaluate_worked_examples():
    F = construct_field(2, 2)
    H = standard_hyperbolic(F, 1)
    g = F.gen
    assert H.evaluate([g, F.mul(g, g)]) == 1  # g * g^2 = g^3 = 1
    assert H.evaluate([0, 0]) == 0
    assert H.polar_form([1, 0], [0, 1]) == 1


@pytest.mark.parametrize("p,k,m", GRID)
def test_scaling_identity(p, k, m):
    # Q(alpha * v) = alpha^2 Q(v), the defining property
    F = construct_field(p, k)
    rng = random.Random(17)
    Q = random_form(rng, F, 2 * m)
    for _ in range(80):
        v = [rng.randrange(F.order) for _ in range(2 * m)]
        alpha = rng.randrange(F.order)
        av = [F.mul(alpha, x) for x in v]
        assert Q.evaluate(av) == F.mul(F.mul(alpha, alpha), Q.evaluate(v))


@pytest.mark.parametrize("p,k", [(2, 2), (3, 1), (5, 1), (3, 2)])
def test_polar_form_is_symmetric_bilinear(p, k):
    F = construct_field(p, k)
    rng = random.Random(23)
    Q = random_form(rng, F, 2)
    vecs = list(all_vectors(F, 2))
    for x in vecs:
        assert Q.polar_form(x, x) == F.scalar_mul(2, Q.evaluate(x))
        if p == 2:
            assert Q.polar_form(x, x) == 0
    for _ in range(60):
        x, y, z = rng.choice(vecs), rng.choice(vecs), rng.choice(vecs)
        alpha = rng.randrange(F.order)
        assert Q.polar_form(x, y) == Q.polar_form(y, x)
        xz = tuple(F.add(a, b) for a, b in zip(x, z))
        assert Q.polar_form(xz, y) == F.add(Q.polar_form(x, y), Q.polar_form(z, y))
        ax = tuple(F.mul(alpha, a) for a in x)
        assert Q.polar_form(ax, y) == F.mul(alpha, Q.polar_form(x, y))


def test_gram_matrix_and_rank_against_nullspace_count():
    # rank r over F_q <=> the polar form's left kernel has q^(n-r) vectors
    rng = random.Random(31)
    for p, k in [(2, 2), (3, 1), (5, 1)]:
        F = construct_field(p, k)
        for n in (2, 4):
            for _ in range(6):
                Q = random_form(rng, F, n)
                gram = Q.gram_matrix()
                for x in list(all_vectors(F, n))[:20]:
                    for y in list(all_vectors(F, n))[:20]:
                        acc = 0
                        for i in range(n):
                            for j in range(n):
                                acc = F.add(acc, F.mul(x[i], F.mul(gram[i][j], y[j])))
                        assert acc == Q.polar_form(x, y)
                kernel = 0
                for x in all_vectors(F, n):
                    sums = []
                    for j in range(n):
                        acc = 0
                        for i in range(n):
                            acc = F.add(acc, F.mul(x[i], gram[i][j]))
                        sums.append(acc)
                    if all(s == 0 for s in sums):
                        kernel += 1
                from pdslab.qform import _rank

                r = _rank(F, gram)
                assert kernel == F.order ** (n - r)
                assert Q.is_nonsingular() == (r == n)


def test_singular_examples():
    F9 = construct_field(3, 2)
    S = QuadraticForm(F9, [[1, 0], [0, 0]])  # Q = x1^2; B((0,1), .) = 0
    assert not S.is_nonsingular()
    with pytest.raises(ValueError):
        form_type(S)
    F4 = construct_field(2, 2)
    Z = QuadraticForm(F4, [[0, 0], [0, 0]])
    assert not Z.is_nonsingular()


@pytest.mark.parametrize("p,k,m", GRID)
def test_standard_forms_have_the_advertised_type(p, k, m):
    F = construct_field(p, k)
    q = F.order
    th = form_type(standard_hyperbolic(F, m))
    te = form_type(standard_elliptic(F, m))
    assert (th.epsilon, th.exp_sum) == (1, q**m)
    assert (te.epsilon, te.exp_sum) == (-1, -(q**m))
    assert th.name == HYPERBOLIC and te.name == ELLIPTIC


def test_form_type_frozen_examples():
    # frozen from direct 16-term / 81-term sums
    F4 = construct_field(2, 2)
    assert form_type(standard_hyperbolic(F4, 1)).exp_sum == 4
    assert form_type(standard_elliptic(F4, 1)).exp_sum == -4
    F3 = construct_field(3, 1)
    assert form_type(standard_hyperbolic(F3, 2)).exp_sum == 9


@pytest.mark.parametrize("p,k,m", GRID)
def test_value_count_formulas(p, k, m):
    # |{Q = 0}| = q^(2m-1) + eps*q^(m-1)*(q-1); fibers over F_q* all equal
    F = construct_field(p, k)
    q = F.order
    for name, eps in ((HYPERBOLIC, 1), (ELLIPTIC, -1)):
        Q = standard_form(F, m, name)
        hist = Q.value_histogram()
        assert int(hist[0]) == q ** (2 * m - 1) + eps * q ** (m - 1) * (q - 1)
        nonzero = q ** (2 * m - 1) - eps * q ** (m - 1)
        assert all(int(h) == nonzero for h in hist[1:])
        assert int(hist.sum()) == q ** (2 * m)


def test_zero_set_sizes_match_formula():
    F4 = construct_field(2, 2)
    assert int(standard_hyperbolic(F4, 1).value_histogram()[0]) == 7
    assert int(standard_elliptic(F4, 1).value_histogram()[0]) == 1
    F3 = construct_field(3, 1)
    assert int(standard_hyperbolic(F3, 2).value_histogram()[0]) == 33


def test_anisotropic_plane_is_canonical_and_rootless():
    # frozen canonical (b, c) pairs, first in dlog-lexicographic order
    expected = {(3, 1): (0, 1), (2, 2): (1, 2), (3, 2): (0, 3), (5, 1): (0, 2), (2, 1): (1, 1)}
    for (p, k), pair in expected.items():
        F = construct_field(p, k)
        b, c = anisotropic_plane(F)
        assert (b, c) == pair
        for t in F.elements():
            assert F.add(F.add(F.mul(t, t), F.mul(b, t)), c) != 0


@pytest.mark.parametrize("p,k,m", [(3, 1, 1), (2, 2, 1), (5, 1, 1)])
def test_alpha_scaling_preserves_type(p, k, m):
    F = construct_field(p, k)
    for name in (HYPERBOLIC, ELLIPTIC):
        Q = standard_form(F, m, name)
        t0 = form_type(Q)
        for alpha in range(1, F.order):
            assert form_type(Q.scaled(alpha)).epsilon == t0.epsilon


def test_value_table_matches_evaluate():
    from pdslab.groupring import AdditiveGroup

    F = construct_field(3, 2)
    Q = standard_elliptic(F, 1)
    G = AdditiveGroup(F, 2)
    table = Q.value_table()
    for idx in range(G.order):
        assert table[idx] == Q.evaluate(G.vector(idx))


def test_construction_rejections():
    F = construct_field(3, 1)
    with pytest.raises(ValueError):
        QuadraticForm(F, [[0, 0, 0], [0, 0, 0], [0, 0, 0]])  # odd n
    with pytest.raises(ValueError):
        QuadraticForm(F, [[0, 1], [1, 0]])  # not upper-triangular
    with pytest.raises(ValueError):
        QuadraticForm(F, [[0, 3], [0, 0]])  # entry outside the field
    with pytest.raises(ValueError):
        standard_hyperbolic(F, 0)
    with pytest.raises(ValueError):
        epsilon_of("parabolic")
    with pytest.raises(ValueError):
        FormType(epsilon=2, exp_sum=4)
    Q = standard_hyperbolic(F, 1)
    with pytest.raises(ValueError):
        Q.evaluate([1, 2, 0])
    with pytest.raises(ValueError):
        Q.polar_form([1], [2])
