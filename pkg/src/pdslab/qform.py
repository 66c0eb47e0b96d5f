"""Quadratic forms on V = F_q^n, n = 2m even.

A form is stored as an n x n upper-triangular coefficient matrix M over F_q
with Q(x) = sum over i <= j of M[i][j] * x_i * x_j.  The polar form
B(x, y) = Q(x+y) - Q(x) - Q(y) is symmetric bilinear; Q is nonsingular when
the Gram matrix of B has full rank (for even n this is the right notion in
every characteristic, including 2 where B is alternating).

The type of a nonsingular form is read off the exact character sum
S = sum over x in V of w^Tr(Q(x)): S = epsilon * q^m with epsilon = +1 for
hyperbolic and -1 for elliptic forms.  Replacing Q by alpha*Q for any
alpha in F_q* keeps the type, and form_type checks that invariance too.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from .cyclo import CycInt
from .gf import FiniteField, max_group_order

HYPERBOLIC = "hyperbolic"
ELLIPTIC = "elliptic"

# exhaustive alpha-invariance checking is cheap up to this field size;
# beyond it form_type samples alpha with a seeded generator
_EXHAUSTIVE_ALPHA_LIMIT = 4096
_ALPHA_SAMPLES = 8


@dataclass(frozen=True)
class FormType:
    """Type of a nonsingular form: epsilon and the sum that witnesses it."""

    epsilon: int
    exp_sum: int

    def __post_init__(self):
        if self.epsilon not in (1, -1):
            raise ValueError(f"epsilon must be +1 or -1, got {self.epsilon}")

    @property
    def name(self) -> str:
        return HYPERBOLIC if self.epsilon == 1 else ELLIPTIC


def epsilon_of(name: str) -> int:
    if name == HYPERBOLIC:
        return 1
    if name == ELLIPTIC:
        return -1
    raise ValueError(f"form type must be {HYPERBOLIC!r} or {ELLIPTIC!r}, got {name!r}")


class QuadraticForm:
    """Q(x) = sum_{i<=j} M[i][j] x_i x_j on F_q^n, n even."""

    def __init__(self, field: FiniteField, coeffs):
        coeffs = [list(row) for row in coeffs]
        n = len(coeffs)
        if n < 2 or n % 2:
            raise ValueError(f"dimension must be even and >= 2, got {n}")
        for i, row in enumerate(coeffs):
            if len(row) != n:
                raise ValueError("coefficient matrix must be square")
            for j, c in enumerate(row):
                field.check(c)
                if j < i and c != 0:
                    raise ValueError("coefficient matrix must be upper-triangular")
        self.field = field
        self.n = n
        self.m = n // 2
        self.coeffs = coeffs

    def evaluate(self, x) -> int:
        x = list(x)
        if len(x) != self.n:
            raise ValueError(f"expected {self.n} coordinates, got {len(x)}")
        F = self.field
        acc = 0
        for i in range(self.n):
            if x[i] == 0:
                continue
            for j in range(i, self.n):
                c = self.coeffs[i][j]
                if c and x[j]:
                    acc = F.add(acc, F.mul(c, F.mul(x[i], x[j])))
        return acc

    def polar_form(self, x, y) -> int:
        """B(x, y) = Q(x+y) - Q(x) - Q(y)."""
        x, y = list(x), list(y)
        if len(x) != self.n or len(y) != self.n:
            raise ValueError("dimension mismatch")
        F = self.field
        s = [F.add(a, b) for a, b in zip(x, y)]
        return F.sub(F.sub(self.evaluate(s), self.evaluate(x)), self.evaluate(y))

    def gram_matrix(self) -> list[list[int]]:
        """Gram matrix of B in the standard basis: G[i][j] = B(e_i, e_j)."""
        F = self.field
        n = self.n
        out = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                if i == j:
                    out[i][j] = F.scalar_mul(2, self.coeffs[i][i])
                else:
                    out[i][j] = self.coeffs[min(i, j)][max(i, j)]
        return out

    def is_nonsingular(self) -> bool:
        return _rank(self.field, self.gram_matrix()) == self.n

    def scaled(self, alpha: int) -> "QuadraticForm":
        """The form alpha * Q."""
        F = self.field
        return QuadraticForm(
            F, [[F.mul(alpha, c) for c in row] for row in self.coeffs]
        )

    def value_table(self) -> np.ndarray:
        """Q(x) for every x in V, indexed by the flat group index of x."""
        F = self.field
        q = F.order
        v = q**self.n
        if v > max_group_order():
            raise ValueError(f"value table of size {v} exceeds the size cap")
        idx = np.arange(v, dtype=np.int64)
        cols = [(idx // q**i) % q for i in range(self.n)]
        acc = np.zeros(v, dtype=np.int64)
        for i in range(self.n):
            for j in range(i, self.n):
                c = self.coeffs[i][j]
                if c:
                    acc = F.add_vec(acc, F.mul_vec(c, F.mul_vec(cols[i], cols[j])))
        return acc

    def value_histogram(self) -> np.ndarray:
        """hist[u] = #{x : Q(x) = u}."""
        return np.bincount(self.value_table(), minlength=self.field.order)

    def __repr__(self) -> str:
        return f"QuadraticForm(F_{self.field.order}, n={self.n})"


def _rank(F: FiniteField, matrix) -> int:
    rows = [list(r) for r in matrix]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, nrows) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = F.inv(rows[rank][col])
        rows[rank] = [F.mul(inv, c) for c in rows[rank]]
        for r in range(nrows):
            if r != rank and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [F.sub(a, F.mul(factor, b)) for a, b in zip(rows[r], rows[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank


def _character_sum_of_histogram(F: FiniteField, hist, alpha: int = 1) -> CycInt:
    """sum over u in F_q of hist[u] * w^Tr(alpha*u) as an exact CycInt."""
    p = F.p
    counts = [0] * p
    for u, h in enumerate(hist):
        if h:
            counts[F.trace(F.mul(alpha, u))] += int(h)
    return CycInt.from_exponent_counts(p, counts)


def form_type(Q: QuadraticForm, seed: int = 0) -> FormType:
    """Classify a nonsingular form by the exact sum S = sum w^Tr(Q(x)).

    S must come out as the rational integer +q^m or -q^m; the same is checked
    for alpha*Q, exhaustively over alpha in F_q* for small q and for a seeded
    sample of alphas otherwise.
    """
    if not Q.is_nonsingular():
        raise ValueError("form_type requires a nonsingular form")
    F = Q.field
    q = F.order
    hist = Q.value_histogram()
    target = q**Q.m
    s = _character_sum_of_histogram(F, hist).as_integer()
    if s not in (target, -target):
        raise ValueError(f"character sum {s} is not one of +-{target}; singular input?")
    if q - 1 <= _EXHAUSTIVE_ALPHA_LIMIT:
        alphas = range(1, q)
    else:
        rng = random.Random(seed)
        alphas = [rng.randrange(1, q) for _ in range(_ALPHA_SAMPLES)]
    for alpha in alphas:
        if _character_sum_of_histogram(F, hist, alpha).as_integer() != s:
            raise ValueError(f"character sum varies under alpha={alpha}; singular input?")
    return FormType(epsilon=1 if s > 0 else -1, exp_sum=s)


def anisotropic_plane(F: FiniteField) -> tuple[int, int]:
    """Canonical (b, c) making t^2 + b*t + c rootless over F_q.

    Pairs are scanned in lexicographic dlog-index order so the choice is
    deterministic across runs.
    """
    q = F.order
    if q > 4096:
        raise ValueError("canonical anisotropic plane search is limited to q <= 4096")
    for bi in range(q):
        b = F.from_dlog_index(bi)
        for ci in range(q):
            c = F.from_dlog_index(ci)
            if all(
                F.add(F.add(F.mul(t, t), F.mul(b, t)), c) != 0 for t in F.elements()
            ):
                return b, c
    raise AssertionError("no anisotropic binary plane found")


def standard_hyperbolic(F: FiniteField, m: int) -> QuadraticForm:
    """x1*x2 + x3*x4 + ... + x_{2m-1}*x_{2m}."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    n = 2 * m
    coeffs = [[0] * n for _ in range(n)]
    for i in range(m):
        coeffs[2 * i][2 * i + 1] = 1
    return QuadraticForm(F, coeffs)


def standard_elliptic(F: FiniteField, m: int) -> QuadraticForm:
    """Hyperbolic planes plus one canonical anisotropic plane x^2 + bxy + cy^2."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    n = 2 * m
    coeffs = [[0] * n for _ in range(n)]
    for i in range(m - 1):
        coeffs[2 * i][2 * i + 1] = 1
    b, c = anisotropic_plane(F)
    coeffs[n - 2][n - 2] = 1
    coeffs[n - 2][n - 1] = b
    coeffs[n - 1][n - 1] = c
    return QuadraticForm(F, coeffs)


def standard_form(F: FiniteField, m: int, type_name: str) -> QuadraticForm:
    if epsilon_of(type_name) == 1:
        return standard_hyperbolic(F, m)
    return standard_elliptic(F, m)
