"""Exact arithmetic in Z[w], w a primitive p-th root of unity, plus
cyclotomic classes and Gauss periods over F_q, q = p^k.

A CycInt stores integer coordinates in the Z-basis {1, w, ..., w^(p-2)} of
Z[w].  The relation 1 + w + ... + w^(p-1) = 0 eliminates w^(p-1), so any
exponent histogram (c_0, ..., c_{p-1}) reduces to coordinates
(c_j - c_{p-1})_{j<p-1}.  Representation in the basis is unique, which makes
"is this sum a rational integer" a zero-test on the non-constant coordinates.
For p = 2 the basis is {1} and w = -1, so everything collapses to Z.

Gauss periods of the index-e cyclotomic classes C_i = g^i <g^e> are the
character sums eta_i = sum over x in C_i of w^Tr(x).  They are computed two
ways: directly from the definition, and from the closed form that holds in
the semiprimitive (uniform cyclotomy) range q = p^(2*j*gamma) with
e | p^j + 1 and j minimal.  The two must agree; tests enforce it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .gf import FiniteField, is_prime


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) for odd prime p: 0, 1 or -1."""
    a %= p
    if a == 0:
        return 0
    r = pow(a, (p - 1) // 2, p)
    return 1 if r == 1 else -1


def p_star(p: int) -> int:
    """(-1)^((p-1)/2) * p, the discriminant-normalized prime for odd p."""
    return p if p % 4 == 1 else -p


class CycInt:
    """An element of Z[w] in the canonical basis {1, w, ..., w^(p-2)}."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs):
        if not is_prime(p):
            raise ValueError(f"p must be prime, got {p}")
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != p - 1:
            raise ValueError(f"expected {p - 1} coordinates for p={p}, got {len(coeffs)}")
        self.p = p
        self.coeffs = coeffs

    @classmethod
    def zero(cls, p: int) -> "CycInt":
        return cls(p, (0,) * (p - 1))

    @classmethod
    def integer(cls, p: int, n: int) -> "CycInt":
        return cls(p, (n,) + (0,) * (p - 2))

    @classmethod
    def root_power(cls, p: int, j: int) -> "CycInt":
        """w^j as a CycInt."""
        counts = [0] * p
        counts[j % p] = 1
        return cls.from_exponent_counts(p, counts)

    @classmethod
    def from_exponent_counts(cls, p: int, counts) -> "CycInt":
        """sum over j of counts[j] * w^j, reduced to the canonical basis."""
        counts = [int(c) for c in counts]
        if len(counts) != p:
            raise ValueError(f"expected {p} exponent counts, got {len(counts)}")
        top = counts[p - 1]
        return cls(p, tuple(c - top for c in counts[: p - 1]))

    def exponent_counts(self) -> list[int]:
        """A (non-unique) exponent histogram with last entry 0."""
        return list(self.coeffs) + [0]

    def _binop(self, other, op) -> "CycInt":
        if isinstance(other, int):
            other = CycInt.integer(self.p, other)
        if not isinstance(other, CycInt) or other.p != self.p:
            raise ValueError(f"cannot combine CycInt over p={self.p} with {other!r}")
        return CycInt(self.p, tuple(op(a, b) for a, b in zip(self.coeffs, other.coeffs)))

    def __add__(self, other) -> "CycInt":
        return self._binop(other, lambda a, b: a + b)

    __radd__ = __add__

    def __sub__(self, other) -> "CycInt":
        return self._binop(other, lambda a, b: a - b)

    def __rsub__(self, other) -> "CycInt":
        return (-self) + other

    def __neg__(self) -> "CycInt":
        return CycInt(self.p, tuple(-a for a in self.coeffs))

    def __mul__(self, other) -> "CycInt":
        if isinstance(other, int):
            return CycInt(self.p, tuple(a * other for a in self.coeffs))
        if not isinstance(other, CycInt) or other.p != self.p:
            raise ValueError(f"cannot combine CycInt over p={self.p} with {other!r}")
        p = self.p
        full = [0] * p
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    full[(i + j) % p] += a * b
        return CycInt.from_exponent_counts(p, full)

    __rmul__ = __mul__

    def conj(self) -> "CycInt":
        """Complex conjugation w -> w^(-1)."""
        full = [0] * self.p
        for j, c in enumerate(self.coeffs):
            full[(-j) % self.p] += c
        return CycInt.from_exponent_counts(self.p, full)

    def is_integer(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def as_integer(self) -> int:
        """The value as a rational integer; raises if it is not one."""
        if not self.is_integer():
            raise ValueError(f"{self!r} is not a rational integer")
        return self.coeffs[0]

    def to_complex(self) -> complex:
        """Float image under w -> exp(2*pi*i/p); for cross-checks only."""
        import cmath

        w = cmath.exp(2j * cmath.pi / self.p)
        return sum(c * w**j for j, c in enumerate(self.coeffs))

    def to_dict(self) -> dict:
        return {"p": self.p, "coeffs": list(self.coeffs)}

    @classmethod
    def from_dict(cls, data: dict) -> "CycInt":
        try:
            return cls(int(data["p"]), [int(c) for c in data["coeffs"]])
        except (KeyError, TypeError):
            raise ValueError(f"malformed CycInt payload: {data!r}")

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.is_integer() and self.coeffs[0] == other
        return isinstance(other, CycInt) and (self.p, self.coeffs) == (other.p, other.coeffs)

    def __hash__(self) -> int:
        return hash((self.p, self.coeffs))

    def __repr__(self) -> str:
        if self.is_integer():
            return f"CycInt(p={self.p}, {self.coeffs[0]})"
        return f"CycInt(p={self.p}, coeffs={list(self.coeffs)})"


def additive_character(field: FiniteField, x: int) -> CycInt:
    """The canonical additive character w^Tr(x) of F_{p^k}."""
    return CycInt.root_power(field.p, field.trace(x))


def character_sum(field: FiniteField, members, b: int = 1) -> CycInt:
    """sum over d in members of w^Tr(b*d), computed through the trace table."""
    members = np.asarray(list(members), dtype=np.int64)
    p = field.p
    if members.size == 0:
        return CycInt.zero(p)
    traces = field.trace_table[field.mul_vec(members, b)]
    counts = np.bincount(traces, minlength=p)
    return CycInt.from_exponent_counts(p, counts)


def minimal_j(p: int, e: int) -> int | None:
    """Least j >= 1 with e | p^j + 1, or None when no such j exists.

    Powers of p mod e cycle with period at most e, so scanning j <= e is
    exhaustive.
    """
    if e == 1:
        return 1
    if math.gcd(p, e) != 1:
        return None
    cur = p % e
    for j in range(1, e + 1):
        if (cur + 1) % e == 0:
            return j
        cur = (cur * p) % e
    return None


@dataclass(frozen=True)
class CyclotomicClasses:
    """The index-e cyclotomic classes C_i = g^i * <g^e> of a finite field."""

    field: FiniteField
    e: int

    def __post_init__(self):
        if self.e < 1 or (self.field.order - 1) % self.e:
            raise ValueError(f"e={self.e} must divide q-1={self.field.order - 1}")

    @property
    def f(self) -> int:
        return (self.field.order - 1) // self.e

    def class_of(self, x: int) -> int:
        """Index i with x in C_i; 0 is not in any class."""
        if x == 0:
            raise ValueError("0 lies in no cyclotomic class")
        return int(self.field.log[x]) % self.e

    def members(self, i: int) -> list[int]:
        if not 0 <= i < self.e:
            raise ValueError(f"class index {i} out of range(0, {self.e})")
        return [int(a) for a in self.field.antilog[i :: self.e]]

    def class_index_table(self) -> np.ndarray:
        """Array over all field elements: class index, -1 for 0."""
        out = np.full(self.field.order, -1, dtype=np.int64)
        out[self.field.antilog] = np.arange(self.field.order - 1) % self.e
        return out

    def period(self, i: int) -> CycInt:
        """Gauss period eta_i = sum over x in C_i of w^Tr(x), exactly."""
        return character_sum(self.field, self.members(i))


def cyclotomic_classes(field: FiniteField, e: int) -> CyclotomicClasses:
    return CyclotomicClasses(field, e)


def cyclotomic_periods_direct(field: FiniteField, e: int) -> list[CycInt]:
    """All e Gauss periods straight from the definition, in one pass."""
    classes = cyclotomic_classes(field, e)
    p = field.p
    traces = field.trace_table[field.antilog]
    class_idx = np.arange(field.order - 1) % e
    counts = np.zeros((e, p), dtype=np.int64)
    np.add.at(counts, (class_idx, traces), 1)
    return [CycInt.from_exponent_counts(p, counts[i]) for i in range(e)]


@dataclass(frozen=True)
class UniformPeriods:
    """Closed-form Gauss periods in the semiprimitive range."""

    p: int
    e: int
    j: int
    gamma: int
    f: int
    case: str  # "A" or "B"
    special_index: int  # the class whose period differs from the rest
    special_value: int
    common_value: int

    def values(self) -> list[int]:
        out = [self.common_value] * self.e
        out[self.special_index] = self.special_value
        return out


def uniform_periods_closed_form(field: FiniteField, e: int) -> UniformPeriods:
    """Gauss periods of index e over F_q from the two-case closed form.

    Requires q = p^(2*j*gamma) where j is minimal with e | p^j + 1.  Case A
    (gamma, p and (p^j + 1)/e all odd) puts the exceptional period at class
    e/2; otherwise (case B) it sits at class 0.
    """
    p, k, q = field.p, field.k, field.order
    if e < 1 or (q - 1) % e:
        raise ValueError(f"e={e} must divide q-1={q - 1}")
    j = minimal_j(p, e)
    if j is None:
        raise ValueError(f"no j with {e} | {p}^j + 1: index {e} is not semiprimitive for p={p}")
    if k % (2 * j):
        raise ValueError(f"field degree {k} is not an even multiple of the minimal j={j}")
    gamma = k // (2 * j)
    f = (q - 1) // e
    root_q = p ** (k // 2)
    case_a = gamma % 2 == 1 and p % 2 == 1 and ((p**j + 1) // e) % 2 == 1
    if case_a:
        if e % 2:
            raise AssertionError("case A forces e to be even")
        common, rem = divmod(-(root_q + 1), e)
        if rem:
            raise AssertionError("case A periods must be integers")
        return UniformPeriods(
            p=p, e=e, j=j, gamma=gamma, f=f, case="A",
            special_index=e // 2, special_value=root_q + common, common_value=common,
        )
    signed = (-1) ** gamma * root_q
    common, rem = divmod(signed - 1, e)
    if rem:
        raise AssertionError("case B periods must be integers")
    return UniformPeriods(
        p=p, e=e, j=j, gamma=gamma, f=f, case="B",
        special_index=0, special_value=-signed + common, common_value=common,
    )


def gauss_constants(p: int) -> tuple[CycInt, CycInt]:
    """The square/non-square character sums (r0, n0) over F_p, p odd.

    r0 = sum of w^a over nonzero squares a, n0 the same over non-squares.
    They satisfy r0 + n0 = -1 and (r0 - n0)^2 = p_star(p).
    """
    if p == 2 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    r_counts = [0] * p
    n_counts = [0] * p
    for a in range(1, p):
        if legendre(a, p) == 1:
            r_counts[a] += 1
        else:
            n_counts[a] += 1
    return CycInt.from_exponent_counts(p, r_counts), CycInt.from_exponent_counts(p, n_counts)
