"""The additive group G = (F_q^n, +) and its integral group rings.

Group elements are flat ints: the vector (x_0, ..., x_{n-1}) over F_q has
index sum x_i * q**i.  Since q = p^k and each x_i < q, the base-p digits of
the index are exactly the concatenated power-basis coordinates of the
entries, so G is (Z_p)^(k*n) in digit space and all group arithmetic is
digit-wise mod p.

GroupRingElem holds exact integer coefficients, either in Z[G] (a flat
length-v array) or in Z[w][G] for the p-th root of unity w (a (p, v) array
whose row j is the coefficient of w^j, kept canonical with row p-1 zero).
Products in Z[w][G] reduce to one integer convolution over (Z_p)^(k*n+1) by
treating the w-exponent as one extra digit.
"""

from __future__ import annotations

from functools import cached_property

import numpy as np

from . import kernels
from .cyclo import CycInt
from .gf import FiniteField, max_group_order


class AdditiveGroup:
    """(F_q^n, +) with flat integer element indexing."""

    def __init__(self, field: FiniteField, n: int = 1):
        if n < 1:
            raise ValueError(f"n must be positive, got {n}")
        order = field.order**n
        cap = max_group_order()
        if order > cap:
            raise ValueError(f"group order {order} exceeds the size cap {cap}")
        self.field = field
        self.n = n
        self.p = field.p
        self.order = order
        self.ndigits = field.k * n
        self.exponent = field.p

    def elements(self) -> range:
        return range(self.order)

    def index(self, vector) -> int:
        vector = list(vector)
        if len(vector) != self.n:
            raise ValueError(f"expected {self.n} coordinates, got {len(vector)}")
        q = self.field.order
        out = 0
        for x in reversed(vector):
            out = out * q + self.field.check(x)
        return out

    def vector(self, index: int) -> tuple[int, ...]:
        q = self.field.order
        out = []
        for _ in range(self.n):
            index, rem = divmod(index, q)
            out.append(rem)
        return tuple(out)

    @cached_property
    def _pows(self) -> np.ndarray:
        return self.p ** np.arange(self.ndigits, dtype=np.int64)

    def digits(self, index: int) -> np.ndarray:
        return (index // self._pows) % self.p

    def digit_matrix(self, indices=None) -> np.ndarray:
        """(m, ndigits) base-p digit rows for the given (or all) elements."""
        if indices is None:
            indices = np.arange(self.order, dtype=np.int64)
        else:
            indices = np.asarray(indices, dtype=np.int64)
        return (indices[:, None] // self._pows[None, :]) % self.p

    # -- group arithmetic on indices -------------------------------------

    def add(self, a: int, b: int) -> int:
        return int(((self.digits(a) + self.digits(b)) % self.p) @ self._pows)

    def neg(self, a: int) -> int:
        return int(((-self.digits(a)) % self.p) @ self._pows)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def add_vec(self, a, b) -> np.ndarray:
        da = self.digit_matrix(np.atleast_1d(a))
        db = self.digit_matrix(np.atleast_1d(b))
        return ((da + db) % self.p) @ self._pows

    def neg_vec(self, a) -> np.ndarray:
        return ((-self.digit_matrix(np.atleast_1d(a))) % self.p) @ self._pows

    # -- characters -------------------------------------------------------

    @cached_property
    def _gram(self) -> np.ndarray:
        """Gram matrix of the trace form: T[r, s] = Tr(x^r * x^s)."""
        F = self.field
        k = F.k
        T = np.empty((k, k), dtype=np.int64)
        for r in range(k):
            for s in range(k):
                T[r, s] = F.trace(F.mul(int(F.p**r), int(F.p**s)))
        return T

    def dual_digits(self, indices=None) -> np.ndarray:
        """Digit rows b* with <b*, digits(x)> = sum_i Tr(b_i * x_i) mod p.

        The canonical character indexed by b is then
        chi_b(x) = w^(dual_digits(b) . digits(x)).
        """
        d = self.digit_matrix(indices)
        k = self.field.k
        blocks = d.reshape(-1, self.n, k)
        return ((blocks @ self._gram) % self.p).reshape(-1, self.ndigits)

    def char_exponent(self, b: int, x: int) -> int:
        """Tr-pairing exponent sum_i Tr(b_i * x_i) as an int mod p."""
        F = self.field
        s = 0
        for bi, xi in zip(self.vector(b), self.vector(x)):
            s = (s + F.trace(F.mul(bi, xi))) % self.p
        return s

    # -- identity ----------------------------------------------------------

    def descriptor(self) -> dict:
        return {"field": self.field.descriptor(), "n": self.n}

    @classmethod
    def from_descriptor(cls, desc: dict) -> "AdditiveGroup":
        try:
            return cls(FiniteField.from_descriptor(desc["field"]), int(desc["n"]))
        except (KeyError, TypeError):
            raise ValueError(f"malformed group descriptor: {desc!r}")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AdditiveGroup)
            and self.field == other.field
            and self.n == other.n
        )

    def __hash__(self) -> int:
        return hash((self.field, self.n))

    def __repr__(self) -> str:
        return f"AdditiveGroup(F_{self.field.order}^{self.n})"


class GroupRingElem:
    """Exact integer (or Z[w]-integer) combination of group elements."""

    __slots__ = ("group", "data")

    def __init__(self, group: AdditiveGroup, data, copy: bool = True):
        data = np.array(data, dtype=np.int64, copy=copy)
        v, p = group.order, group.p
        if data.shape == (v,):
            pass
        elif data.shape == (p, v):
            if data[p - 1].any():
                data[: p - 1] -= data[p - 1]
                data[p - 1] = 0
        else:
            raise ValueError(f"coefficient array must have shape ({v},) or ({p}, {v})")
        self.group = group
        self.data = data

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, group: AdditiveGroup) -> "GroupRingElem":
        return cls(group, np.zeros(group.order, dtype=np.int64), copy=False)

    @classmethod
    def delta(cls, group: AdditiveGroup) -> "GroupRingElem":
        """The identity X^0."""
        data = np.zeros(group.order, dtype=np.int64)
        data[0] = 1
        return cls(group, data, copy=False)

    @classmethod
    def all_ones(cls, group: AdditiveGroup) -> "GroupRingElem":
        """The full group sum, often written F or J."""
        return cls(group, np.ones(group.order, dtype=np.int64), copy=False)

    @classmethod
    def from_indicator(cls, group: AdditiveGroup, members) -> "GroupRingElem":
        data = np.zeros(group.order, dtype=np.int64)
        members = np.asarray(list(members), dtype=np.int64)
        if members.size:
            if members.min() < 0 or members.max() >= group.order:
                raise ValueError("member index out of range")
            if len(np.unique(members)) != len(members):
                raise ValueError("duplicate members in subset")
            data[members] = 1
        return cls(group, data, copy=False)

    @classmethod
    def from_omega_exponents(cls, group: AdditiveGroup, exponents) -> "GroupRingElem":
        """sum over x of w^exponents[x] * X^x, a Z[w][G] element."""
        exponents = np.asarray(exponents, dtype=np.int64) % group.p
        if exponents.shape != (group.order,):
            raise ValueError("need one exponent per group element")
        data = np.zeros((group.p, group.order), dtype=np.int64)
        data[exponents, np.arange(group.order)] = 1
        return cls(group, data, copy=False)

    # -- structure ----------------------------------------------------------

    @property
    def layered(self) -> bool:
        return self.data.ndim == 2

    def promote(self) -> "GroupRingElem":
        """The same element viewed in Z[w][G]."""
        if self.layered:
            return self
        data = np.zeros((self.group.p, self.group.order), dtype=np.int64)
        data[0] = self.data
        return GroupRingElem(self.group, data, copy=False)

    def coefficient(self, x: int):
        """Coefficient of X^x: an int for Z[G], a CycInt for Z[w][G]."""
        if not self.layered:
            return int(self.data[x])
        return CycInt(self.group.p, self.data[: self.group.p - 1, x])

    def support(self) -> np.ndarray:
        if self.layered:
            return np.flatnonzero(self.data.any(axis=0))
        return np.flatnonzero(self.data)

    # -- ring operations ------------------------------------------------------

    def _coerce(self, other) -> tuple[np.ndarray, np.ndarray]:
        if not isinstance(other, GroupRingElem) or other.group != self.group:
            raise ValueError("operands live in different group rings")
        a, b = self, other
        if a.layered != b.layered:
            a, b = a.promote(), b.promote()
        return a.data, b.data

    def __add__(self, other) -> "GroupRingElem":
        a, b = self._coerce(other)
        return GroupRingElem(self.group, a + b, copy=False)

    def __sub__(self, other) -> "GroupRingElem":
        a, b = self._coerce(other)
        return GroupRingElem(self.group, a - b, copy=False)

    def __neg__(self) -> "GroupRingElem":
        return GroupRingElem(self.group, -self.data, copy=False)

    def __mul__(self, other) -> "GroupRingElem":
        g = self.group
        if isinstance(other, (int, np.integer)):
            return GroupRingElem(g, self.data * int(other), copy=False)
        if isinstance(other, CycInt):
            if other.p != g.p:
                raise ValueError("CycInt root order does not match the group ring")
            base = self.promote().data
            out = np.zeros_like(base)
            for c, coef in enumerate(other.coeffs):
                if coef:
                    out += coef * np.roll(base, c, axis=0)
            return GroupRingElem(g, out, copy=False)
        if isinstance(other, GroupRingElem):
            a, b = self._coerce(other)
            if a.ndim == 1:
                prod = kernels.convolve(a, b, g.p, g.ndigits)
                return GroupRingElem(g, prod, copy=False)
            prod = kernels.convolve(a.ravel(), b.ravel(), g.p, g.ndigits + 1)
            return GroupRingElem(g, prod.reshape(g.p, g.order), copy=False)
        return NotImplemented

    __rmul__ = __mul__

    def reflect(self) -> "GroupRingElem":
        """X^x -> X^(-x), the group-inversion involution."""
        perm = self.group.neg_vec(np.arange(self.group.order, dtype=np.int64))
        return GroupRingElem(self.group, self.data[..., perm], copy=False)

    def conj_omega(self) -> "GroupRingElem":
        """w -> w^(-1) on coefficients; the identity on Z[G] elements."""
        if not self.layered:
            return self
        p = self.group.p
        perm = (-np.arange(p)) % p
        return GroupRingElem(self.group, self.data[perm], copy=False)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupRingElem) or other.group != self.group:
            return NotImplemented
        a, b = self._coerce(other)
        return bool(np.array_equal(a, b))

    def __repr__(self) -> str:
        kind = "Z[w]" if self.layered else "Z"
        return f"GroupRingElem({self.group!r}, {kind}, support={len(self.support())})"
