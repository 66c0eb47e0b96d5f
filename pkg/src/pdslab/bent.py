"""Exact Walsh analysis of p-ary functions f: F_{p^n} -> F_p, p odd.

Walsh coefficients W_f(b) = sum over x of w^(f(x) + Tr(bx)) are computed as
exact elements of Z[w].  f is bent when W_f(b) * conj(W_f(b)) = p^n for every
b.  For even n a weakly regular bent function satisfies the normal form
W_f(b) = u * (p*)^(n/2) * w^(f*(b)) with a constant sign u and dual function
f*, where p* = (-1)^((p-1)/2) * p; both u and the full dual table are
extracted exactly.  Regular means the positive sign: u * (p*)^(n/2) = p^(n/2).

Functions are value tables in dlog order: values[0] = f(0) and
values[1 + t] = f(g^t) for the field generator g, matching the function-file
format and the walsh_counts kernel.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .cyclo import CycInt, legendre, p_star
from .gf import FiniteField
from .groupring import AdditiveGroup, GroupRingElem

NOT_BENT = "not_bent"
BENT_REGULAR = "bent_regular"
BENT_WEAKLY_REGULAR = "bent_weakly_regular"
BENT_NOT_WEAKLY_REGULAR = "bent_not_weakly_regular"
BENT_UNCLASSIFIED = "bent_unclassified"  # odd n: normal form out of scope

WEAKLY_REGULAR_CLASSES = (BENT_REGULAR, BENT_WEAKLY_REGULAR)


class PAryFunction:
    """A function F_{p^n} -> F_p as a dlog-ordered value table."""

    def __init__(self, field: FiniteField, values):
        if field.p == 2:
            raise ValueError("p must be odd")
        values = np.asarray(values, dtype=np.int64)
        if values.shape != (field.order,):
            raise ValueError(f"expected {field.order} values, got {values.shape}")
        if values.min() < 0 or values.max() >= field.p:
            raise ValueError(f"values must lie in [0, {field.p})")
        self.field = field
        self.values = values

    @classmethod
    def from_callable(cls, field: FiniteField, fn) -> "PAryFunction":
        vals = [fn(field.from_dlog_index(i)) for i in range(field.order)]
        return cls(field, [v % field.p for v in vals])

    @classmethod
    def from_trace_monomial(cls, field: FiniteField, d: int, coeff: int = 1) -> "PAryFunction":
        """f(x) = Tr(coeff * x^d)."""
        if d < 1:
            raise ValueError(f"monomial degree must be >= 1, got {d}")
        field.check(coeff)
        vals = np.zeros(field.order, dtype=np.int64)
        L = field.order - 1
        for t in range(L):
            xd = int(field.antilog[(d * t) % L])
            vals[1 + t] = field.trace_table[field.mul(coeff, xd)]
        return cls(field, vals)

    def value_at(self, x: int) -> int:
        return int(self.values[self.field.dlog_index(x)])

    def values_by_element(self) -> np.ndarray:
        """The table re-indexed by field element instead of dlog index."""
        out = np.empty(self.field.order, dtype=np.int64)
        out[0] = self.values[0]
        out[self.field.antilog] = self.values[1:]
        return out

    def group(self) -> AdditiveGroup:
        return AdditiveGroup(self.field, 1)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PAryFunction)
            and self.field == other.field
            and np.array_equal(self.values, other.values)
        )

    def __repr__(self) -> str:
        return f"PAryFunction(F_{self.field.order} -> F_{self.field.p})"


@dataclass
class WalshSpectrum:
    """Exact spectrum plus the bent/weakly-regular classification."""

    function: PAryFunction
    counts: np.ndarray  # (q, p) exponent histograms, rows in dlog order
    classification: str
    u: int | None  # sign in the normal form, when extracted
    dual: PAryFunction | None

    def coefficient(self, b: int) -> CycInt:
        """W_f(b) for the field element b."""
        row = self.counts[self.function.field.dlog_index(b)]
        return CycInt.from_exponent_counts(self.function.field.p, row)

    def coefficients(self) -> list[CycInt]:
        p = self.function.field.p
        return [CycInt.from_exponent_counts(p, row) for row in self.counts]

    @property
    def is_bent(self) -> bool:
        return self.classification != NOT_BENT

    def normal_form_scalar(self) -> int:
        """u * (p*)^(n/2), the common magnitude-with-sign of all W_f(b)."""
        if self.u is None:
            raise ValueError("normal form was not extracted for this spectrum")
        F = self.function.field
        return self.u * p_star(F.p) ** (F.k // 2)


def _recognize_signed_root_power(w: CycInt, magnitude: int) -> tuple[int, int] | None:
    """If w = c * omega^j with c = +-magnitude, return (sign, j), else None."""
    coeffs = w.coeffs
    p = w.p
    nonzero = [(i, c) for i, c in enumerate(coeffs) if c]
    if len(nonzero) == 1:
        j, c = nonzero[0]
        if abs(c) == magnitude:
            return (1 if c > 0 else -1, j)
        return None
    if len(nonzero) == p - 1 and len(set(c for _, c in nonzero)) == 1:
        c = -nonzero[0][1]  # w^(p-1) = -(1 + w + ... + w^(p-2))
        if abs(c) == magnitude:
            return (1 if c > 0 else -1, p - 1)
    return None


def walsh_spectrum(f: PAryFunction) -> WalshSpectrum:
    """All Walsh coefficients of f, exactly, with classification."""
    F = f.field
    p, n, q = F.p, F.k, F.order
    tr_anti = F.trace_table[F.antilog]
    counts = kernels.walsh_counts(f.values, tr_anti, p)
    spectrum = [CycInt.from_exponent_counts(p, row) for row in counts]
    target = q  # p^n
    for w in spectrum:
        norm = w * w.conj()
        if not (norm.is_integer() and norm.as_integer() == target):
            return WalshSpectrum(f, counts, NOT_BENT, None, None)
    if n % 2:
        return WalshSpectrum(f, counts, BENT_UNCLASSIFIED, None, None)
    magnitude = p ** (n // 2)
    sign_of_pstar = 1 if p % 4 == 1 else (-1) ** (n // 2)
    dual_vals = np.empty(q, dtype=np.int64)
    common_sign = None
    for i, w in enumerate(spectrum):
        rec = _recognize_signed_root_power(w, magnitude)
        if rec is None:
            return WalshSpectrum(f, counts, BENT_NOT_WEAKLY_REGULAR, None, None)
        sign, j = rec
        if common_sign is None:
            common_sign = sign
        elif sign != common_sign:
            return WalshSpectrum(f, counts, BENT_NOT_WEAKLY_REGULAR, None, None)
        dual_vals[i] = j
    # W_f(b) = sign * p^(n/2) * w^j = u * (p*)^(n/2) * w^j
    u = common_sign * sign_of_pstar
    dual = PAryFunction(F, dual_vals)
    cls = BENT_REGULAR if common_sign == 1 else BENT_WEAKLY_REGULAR
    return WalshSpectrum(f, counts, cls, u, dual)


def homogeneity_degree(f: PAryFunction) -> int | None:
    """Smallest k in [2, p-1] with gcd(k-1, p-1) = 1 and f(tx) = t^k f(x)."""
    F = f.field
    p = F.p
    vals = f.values_by_element()
    idx = np.arange(F.order, dtype=np.int64)
    for k in range(2, p):
        if math.gcd(k - 1, p - 1) != 1:
            continue
        if all(
            np.array_equal(vals[F.mul_vec(idx, t)], (pow(t, k, p) * vals) % p)
            for t in range(1, p)
        ):
            return k
    return None


def dual_degree(k: int, p: int) -> int:
    """l = k * (k-1)^(-1) mod p, the dual's homogeneity degree mod p."""
    if (k - 1) % p == 0:
        raise ValueError(f"k = {k} has k-1 not invertible mod {p}")
    return (k * pow(k - 1, -1, p)) % p


def level_sets(f: PAryFunction) -> list[np.ndarray]:
    """D_i = {x : f(x) = i} as sorted element-index arrays, i = 0..p-1."""
    vals = f.values_by_element()
    return [np.flatnonzero(vals == i) for i in range(f.field.p)]


def build_L(f: PAryFunction, t: int) -> GroupRingElem:
    """L_t = sum over i of D_i * w^(i*t) = sum over x of w^(t*f(x)) X^x."""
    group = f.group()
    exps = (t * f.values_by_element()) % f.field.p
    return GroupRingElem.from_omega_exponents(group, exps)


@dataclass
class Lemma33Report:
    """Pass/fail ledger for the three group-ring product identities."""

    ok: bool
    k: int
    ell: int
    u: int
    part1: list[tuple[int, int, int, bool]]  # (t, s, v, passed)
    part2: list[tuple[int, bool]]  # (t, passed)
    part3: list[tuple[int, bool]]  # (a, passed)


def _lemma33_v(t: int, s: int, ell: int, p: int) -> int:
    """v = (s^(1-l) + t^(1-l))^(1/(1-l)) resolved in the cyclic group F_p*."""
    e = (1 - ell) % (p - 1)
    if math.gcd((1 - ell) % (p - 1), p - 1) != 1:
        raise ValueError(f"gcd(1-l, p-1) != 1 for l={ell}, p={p}")
    w = (pow(s, e, p) + pow(t, e, p)) % p
    if w == 0:
        raise ValueError(f"s^(1-l)+t^(1-l) vanished for (t,s)=({t},{s})")
    inv = pow(e, -1, p - 1)
    return pow(w, inv, p)


def verify_lemma33(f: PAryFunction) -> Lemma33Report:
    """Exact check of the L_t product identities for a weakly regular bent f.

    (1) L_t L_s = u (tsv/p)^n (p*)^(n/2) L_v for t, s, t+s nonzero;
    (2) L_t L_{-t} = p^n at the identity;
    (3) sum over t>=1 of L_t L_0 w^(-at) = (p|D_a| - p^n) F.
    """
    F = f.field
    p, n = F.p, F.k
    if n % 2:
        raise ValueError("verify_lemma33 requires even n")
    spec = walsh_spectrum(f)
    if spec.classification not in WEAKLY_REGULAR_CLASSES:
        raise ValueError(f"f is {spec.classification}, need a weakly regular bent function")
    k = homogeneity_degree(f)
    if k is None:
        raise ValueError("f has no valid homogeneity degree")
    ell = dual_degree(k, p)
    u = spec.u
    us = spec.normal_form_scalar()  # u * (p*)^(n/2)
    group = f.group()
    L = [build_L(f, t) for t in range(p)]
    sets = level_sets(f)
    delta = GroupRingElem.delta(group).promote()
    full = GroupRingElem.all_ones(group).promote()

    part1 = []
    for t in range(1, p):
        for s in range(1, p):
            if (t + s) % p == 0:
                continue
            v = _lemma33_v(t, s, ell, p)
            factor = us * legendre(t * s * v, p) ** n
            passed = L[t] * L[s] == L[v] * factor
            part1.append((t, s, v, passed))

    part2 = []
    for t in range(1, p):
        passed = L[t] * L[p - t] == delta * (p**n)
        part2.append((t, passed))

    part3 = []
    for a in range(p):
        acc = GroupRingElem.zero(group).promote()
        for t in range(1, p):
            acc = acc + (L[t] * L[0]) * CycInt.root_power(p, (-a * t) % p)
        rhs = full * (p * len(sets[a]) - p**n)
        part3.append((a, acc == rhs))

    ok = all(x[-1] for x in part1 + part2 + part3)
    return Lemma33Report(ok, k, ell, u, part1, part2, part3)
