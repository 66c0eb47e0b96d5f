"""Exact arithmetic in finite fields F_{p^k}.

Field elements are plain Python ints in ``range(p**k)``.  The int encodes the
coordinates of the element in the power basis {1, x, ..., x^(k-1)} of
F_p[x]/(m(x)) as base-p digits, least significant digit first, so the element
c0 + c1*x + ... + c_{k-1}*x^(k-1) is stored as c0 + c1*p + ... + c_{k-1}*p^(k-1).
Addition is digit-wise mod p; multiplication goes through log/antilog tables
built from a primitive modulus m(x), giving every nonzero element a discrete
log base x (base g for prime fields, where g is the least primitive root).

The modulus is chosen deterministically: the monic degree-k polynomial with
primitive root x whose coefficient vector (c0, ..., ck), read as base-p digits
low-to-high, is numerically smallest.  Two runs on any machine therefore agree
element-for-element and log-for-log.
"""

from __future__ import annotations

import math
import os
from functools import cached_property

import numpy as np

DEFAULT_MAX_ORDER = 1 << 20


def max_group_order() -> int:
    """Size cap for any group enumerated by this library.

    Overridable through the PDSLAB_MAX_GROUP environment variable.
    """
    raw = os.environ.get("PDSLAB_MAX_GROUP")
    if raw is None:
        return DEFAULT_MAX_ORDER
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"PDSLAB_MAX_GROUP must be an integer, got {raw!r}")
    if cap < 2:
        raise ValueError(f"PDSLAB_MAX_GROUP must be at least 2, got {cap}")
    return cap


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


def factorize(n: int) -> dict[int, int]:
    """Full factorization of n as {prime: exponent}."""
    out: dict[int, int] = {}
    f = 2
    while f * f <= n:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _poly_mul_mod(a: list[int], b: list[int], mod: list[int], p: int) -> list[int]:
    """Product of coefficient lists a, b reduced mod the monic polynomial mod."""
    k = len(mod) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            prod[i + j] = (prod[i + j] + ai * bj) % p
    for d in range(len(prod) - 1, k - 1, -1):
        c = prod[d]
        if c == 0:
            continue
        prod[d] = 0
        for j in range(k + 1):
            prod[d - k + j] = (prod[d - k + j] - c * mod[j]) % p
    prod = prod[:k]
    while len(prod) < k:
        prod.append(0)
    return prod


def _poly_pow_mod(base: list[int], e: int, mod: list[int], p: int) -> list[int]:
    k = len(mod) - 1
    result = [1] + [0] * (k - 1)
    cur = list(base)
    while e:
        if e & 1:
            result = _poly_mul_mod(result, cur, mod, p)
        e >>= 1
        cur = _poly_mul_mod(cur, cur, mod, p)
    return result


def _x_is_primitive(mod: list[int], p: int) -> bool:
    """True if x generates the full unit group of F_p[x]/(mod).

    ord(x) = p^k - 1 forces the quotient to be a field with primitive root x:
    were mod reducible the unit group would have fewer than p^k - 1 members.
    """
    if mod[0] == 0:
        return False
    k = len(mod) - 1
    n = p**k - 1
    x = [0, 1] + [0] * (k - 2) if k >= 2 else [(-mod[0]) % p]
    one = [1] + [0] * (k - 1)
    if _poly_pow_mod(x, n, mod, p) != one:
        return False
    return all(_poly_pow_mod(x, n // ell, mod, p) != one for ell in prime_factors(n))


def _find_modulus(p: int, k: int) -> list[int]:
    """Smallest monic degree-k polynomial over F_p with primitive root x.

    Candidates are ordered by their coefficient vector (c0, ..., c_{k-1}) read
    as base-p digits low-to-high, i.e. by c0 + c1*p + ... as an integer.
    """
    for code in range(1, p**k):
        mod = [(code // p**i) % p for i in range(k)] + [1]
        if _x_is_primitive(mod, p):
            return mod
    raise ValueError(f"no primitive modulus found for p={p}, k={k}")


def _least_primitive_root(p: int) -> int:
    if p == 2:
        return 1
    factors = prime_factors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // ell, p) != 1 for ell in factors):
            return g
    raise ValueError(f"no primitive root mod {p}")


class FiniteField:
    """The finite field F_{p^k} with table-driven exact arithmetic.

    Elements are ints in range(order).  ``log`` and ``antilog`` are inverse
    tables for the fixed generator ``gen``: antilog[t] = gen**t and
    log[antilog[t]] = t for 0 <= t < order - 1.
    """

    def __init__(self, p: int, k: int, modulus: list[int] | None = None):
        if not is_prime(p):
            raise ValueError(f"p must be prime, got {p}")
        if k < 1:
            raise ValueError(f"k must be positive, got {k}")
        order = p**k
        cap = max_group_order()
        if order > cap:
            raise ValueError(f"field order {order} exceeds the size cap {cap}")
        self.p = p
        self.k = k
        self.order = order
        if k == 1:
            if modulus is not None and list(modulus) != [0, 1]:
                raise ValueError(f"prime field modulus must be [0, 1], got {modulus}")
            self.modulus = [0, 1]
            root = _least_primitive_root(p)
        else:
            if modulus is None:
                self.modulus = _find_modulus(p, k)
            else:
                modulus = [c % p for c in modulus]
                if len(modulus) != k + 1 or modulus[-1] != 1:
                    raise ValueError(f"modulus must be monic of degree {k}")
                if not _x_is_primitive(modulus, p):
                    raise ValueError(f"modulus {modulus} is not primitive over F_{p}")
                self.modulus = modulus
            root = p  # the element x
        self.gen = root
        self._build_tables()

    def _build_tables(self) -> None:
        p, k, order = self.p, self.k, self.order
        antilog = np.empty(order - 1, dtype=np.int64)
        log = np.full(order, -1, dtype=np.int64)
        if k == 1:
            cur = 1
            for t in range(order - 1):
                antilog[t] = cur
                log[cur] = t
                cur = (cur * self.gen) % p
        else:
            digits = [1] + [0] * (k - 1)
            mod = self.modulus
            for t in range(order - 1):
                enc = 0
                for i in range(k - 1, -1, -1):
                    enc = enc * p + digits[i]
                antilog[t] = enc
                log[enc] = t
                # multiply by x: shift up, reduce the overflow term by mod
                top = digits[-1]
                digits = [0] + digits[:-1]
                if top:
                    for i in range(k):
                        digits[i] = (digits[i] - top * mod[i]) % p
            if log[self.gen] != 1:
                raise AssertionError("generator table inconsistent")
        self.antilog = antilog
        self.log = log
        self._pows = p ** np.arange(k, dtype=np.int64)
        # Tr is F_p-linear, so the traces of the basis monomials determine it.
        tr_basis = np.empty(k, dtype=np.int64)
        for i in range(k):
            tr_basis[i] = self._trace_by_frobenius(p**i)
        self._tr_basis = tr_basis

    def _trace_by_frobenius(self, a: int) -> int:
        """Tr(a) = a + a^p + ... + a^(p^(k-1)) computed through the log table."""
        if a == 0:
            return 0
        p, k, L = self.p, self.k, self.order - 1
        t = int(self.log[a])
        acc = np.zeros(k, dtype=np.int64)
        for i in range(k):
            acc += self.digits(int(self.antilog[(t * pow(p, i, L)) % L]))
        acc %= p
        if np.any(acc[1:]):
            raise AssertionError("trace landed outside the prime subfield")
        return int(acc[0])

    # -- element codecs ------------------------------------------------

    def digits(self, a: int) -> np.ndarray:
        """Power-basis coordinates of a as a length-k array of base-p digits."""
        return (a // self._pows) % self.p

    def encode(self, digits) -> int:
        arr = np.asarray(digits, dtype=np.int64) % self.p
        return int(arr @ self._pows)

    @cached_property
    def digit_table(self) -> np.ndarray:
        """(order, k) array: row a holds digits(a)."""
        idx = np.arange(self.order, dtype=np.int64)
        return (idx[:, None] // self._pows[None, :]) % self.p

    def elements(self) -> range:
        return range(self.order)

    def check(self, a: int) -> int:
        if not isinstance(a, (int, np.integer)) or not 0 <= a < self.order:
            raise ValueError(f"{a!r} is not an element of {self}")
        return int(a)

    # -- arithmetic ----------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.k == 1:
            return (a + b) % self.p
        return int(((self.digits(a) + self.digits(b)) % self.p) @ self._pows)

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        if self.k == 1:
            return (-a) % self.p
        return int(((-self.digits(a)) % self.p) @ self._pows)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        L = self.order - 1
        return int(self.antilog[(self.log[a] + self.log[b]) % L])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        L = self.order - 1
        return int(self.antilog[(-self.log[a]) % L])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("inverse of 0")
            return 1 if e == 0 else 0
        L = self.order - 1
        return int(self.antilog[(int(self.log[a]) * e) % L])

    def scalar_mul(self, c: int, a: int) -> int:
        """Multiply by the prime-subfield element c (an int mod p)."""
        return self.mul(self.from_prime_subfield(c), a)

    def from_prime_subfield(self, c: int) -> int:
        return c % self.p

    # -- vectorized arithmetic on int arrays ----------------------------

    def add_vec(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return a ^ b
        if self.k == 1:
            return (a + b) % self.p
        d = (self.digit_table[a] + self.digit_table[b]) % self.p
        return d @ self._pows

    def neg_vec(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return a.copy()
        if self.k == 1:
            return (-a) % self.p
        d = (-self.digit_table[a]) % self.p
        return d @ self._pows

    def mul_vec(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        a, b = np.broadcast_arrays(a, b)
        out = np.zeros(a.shape, dtype=np.int64)
        nz = (a != 0) & (b != 0)
        L = self.order - 1
        out[nz] = self.antilog[(self.log[a[nz]] + self.log[b[nz]]) % L]
        return out

    # -- structure maps --------------------------------------------------

    def trace(self, a: int) -> int:
        """Absolute trace into F_p, returned as an int mod p."""
        if self.k == 1:
            return a % self.p
        return int(self.digits(a) @ self._tr_basis % self.p)

    @cached_property
    def trace_table(self) -> np.ndarray:
        """trace_table[a] = Tr(a) for every element a."""
        return (self.digit_table @ self._tr_basis) % self.p

    def dlog_index(self, a: int) -> int:
        """Deterministic element index: 0 for 0, 1 + log(a) otherwise."""
        if a == 0:
            return 0
        return 1 + int(self.log[a])

    def from_dlog_index(self, i: int) -> int:
        if i == 0:
            return 0
        if not 1 <= i < self.order:
            raise ValueError(f"dlog index {i} out of range for {self}")
        return int(self.antilog[i - 1])

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.p)

    # -- identity --------------------------------------------------------

    def descriptor(self) -> dict:
        return {"p": self.p, "k": self.k, "modulus": list(self.modulus)}

    @classmethod
    def from_descriptor(cls, desc: dict) -> "FiniteField":
        try:
            p, k, modulus = desc["p"], desc["k"], desc["modulus"]
        except (KeyError, TypeError):
            raise ValueError(f"malformed field descriptor: {desc!r}")
        return cls(int(p), int(k), [int(c) for c in modulus])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FiniteField)
            and (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus)
        )

    def __hash__(self) -> int:
        return hash((self.p, self.k, tuple(self.modulus)))

    def __repr__(self) -> str:
        return f"FiniteField(p={self.p}, k={self.k}, modulus={self.modulus})"


def construct_field(p: int, k: int, modulus: list[int] | None = None) -> FiniteField:
    """Build F_{p^k} with the canonical (or a supplied primitive) modulus."""
    return FiniteField(p, k, modulus)
