"""Partial difference sets: constructions and two independent certifiers.

A k-subset D of an abelian group G of order v, with 0 not in D and -D = D,
is a (v, k, lambda, mu) PDS when the difference count |{(a,b) in D^2 :
a - b = z}| equals lambda for z in D and mu for z outside D union {0}.

Constructions: quadratic-form cyclotomic sets {x : Q(x) in C_i} in F_q^{2m}
with semiprimitive cyclotomy, affine polar graphs (the e = 2 case, any odd
q), the zero set D_0 minus 0 of a nonsingular form, and the three level-set
unions of a weakly regular bent function.

Certifiers: exact difference counting over all pairs (the ground truth),
and the character-sum criterion (every nonprincipal character sum must be
one of the two integer eigenvalues).  Both must agree for a set to be
certified; their implementations share nothing but the kernels module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .bent import (
    WEAKLY_REGULAR_CLASSES,
    PAryFunction,
    homogeneity_degree,
    level_sets,
    walsh_spectrum,
)
from .cyclo import cyclotomic_classes, minimal_j
from .gf import FiniteField, construct_field
from .groupring import AdditiveGroup, GroupRingElem
from .qform import QuadraticForm, epsilon_of, form_type, standard_form

BRUTEFORCE = "bruteforce"
CHARACTERS = "characters"


def _latin_candidates(v: int, k: int, lam: int, mu: int) -> list[tuple[int, int, int]]:
    """All (epsilon, N, R) with (v,k,lam,mu) = (N^2, (N-e)R, eN+R^2-3eR, R^2-eR)."""
    N = math.isqrt(v)
    if N * N != v:
        return []
    out = []
    for eps in (1, -1):
        if N == eps or k % (N - eps):
            continue
        R = k // (N - eps)
        if lam == eps * N + R * R - 3 * eps * R and mu == R * R - eps * R:
            out.append((eps, N, R))
    return out


@dataclass(frozen=True)
class PdsParams:
    """(v, k, lambda, mu) with the Latin-type classification when one fits."""

    v: int
    k: int
    lam: int
    mu: int
    latin: tuple[int, int, int] | None = None

    def __post_init__(self):
        v, k, lam, mu = self.v, self.k, self.lam, self.mu
        if min(v, k, lam, mu) < 0 or v < 1:
            raise ValueError(f"negative entry in ({v}, {k}, {lam}, {mu})")
        if k * k != mu * v + (lam - mu) * k + (k - mu):
            raise ValueError(f"counting identity fails for ({v}, {k}, {lam}, {mu})")
        if k * (k - lam - 1) != (v - k - 1) * mu:
            raise ValueError(f"SRG feasibility fails for ({v}, {k}, {lam}, {mu})")
        if self.latin is None:
            cands = _latin_candidates(v, k, lam, mu)
            object.__setattr__(self, "latin", cands[0] if cands else None)
        elif self.latin not in _latin_candidates(v, k, lam, mu):
            raise ValueError(f"latin tag {self.latin} does not match ({v}, {k}, {lam}, {mu})")

    @property
    def tuple(self) -> tuple[int, int, int, int]:
        return (self.v, self.k, self.lam, self.mu)

    def eigenvalues(self) -> tuple[int, int]:
        """The two nonprincipal eigenvalues (lam-mu +- sqrt(Delta))/2."""
        delta = (self.lam - self.mu) ** 2 + 4 * (self.k - self.mu)
        root = math.isqrt(delta)
        if root * root != delta:
            raise ValueError(f"discriminant {delta} is not a perfect square")
        return ((self.lam - self.mu + root) // 2, (self.lam - self.mu - root) // 2)

    def to_dict(self) -> dict:
        out = {"v": self.v, "k": self.k, "lambda": self.lam, "mu": self.mu}
        if self.latin is not None:
            out["latin"] = {"epsilon": self.latin[0], "N": self.latin[1], "R": self.latin[2]}
        return out

    @classmethod
    def from_dict(cls, d: dict) -> "PdsParams":
        latin = None
        if d.get("latin") is not None:
            latin = (d["latin"]["epsilon"], d["latin"]["N"], d["latin"]["R"])
        return cls(d["v"], d["k"], d["lambda"], d["mu"], latin)


def classify_latin_type(params: PdsParams) -> tuple[int, int, int] | None:
    """(epsilon, N, R) of (negative) Latin square type, or None.

    Some parameter tuples (e.g. Paley-graph ones) fit both signs; the
    epsilon = +1 solution is returned first for determinism.
    """
    cands = _latin_candidates(params.v, params.k, params.lam, params.mu)
    return cands[0] if cands else None


class GroupSubset:
    """A subset of an additive group, as a sorted array of element indices."""

    def __init__(self, group: AdditiveGroup, members):
        members = np.asarray(members, dtype=np.int64)
        if members.size:
            members = np.sort(members)
            if members[0] < 0 or members[-1] >= group.order:
                raise ValueError("member index out of range")
            if np.any(members[1:] == members[:-1]):
                raise ValueError("duplicate members")
        self.group = group
        self.members = members

    @property
    def size(self) -> int:
        return int(self.members.size)

    def contains(self, x: int) -> bool:
        i = np.searchsorted(self.members, x)
        return i < self.members.size and self.members[i] == x

    def is_symmetric(self) -> bool:
        neg = np.sort(self.group.neg_vec(self.members))
        return np.array_equal(neg, self.members)

    def indicator(self) -> GroupRingElem:
        return GroupRingElem.from_indicator(self.group, self.members)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GroupSubset)
            and self.group == other.group
            and np.array_equal(self.members, other.members)
        )

    def __repr__(self) -> str:
        return f"GroupSubset({self.size} of {self.group.order})"


@dataclass
class VerificationReport:
    """Outcome of one certifier run."""

    ok: bool
    method: str
    params: PdsParams | None = None
    degenerate: bool = False
    witness: dict | None = None
    eigenvalues: tuple[int, int] | None = None
    notes: str = ""


def latin_parameters(epsilon: int, N: int, R: int) -> PdsParams:
    """(N^2, (N-e)R, eN+R^2-3eR, R^2-eR), normalized to lambda = 0 when k = 0."""
    if epsilon not in (1, -1):
        raise ValueError(f"epsilon must be +-1, got {epsilon}")
    v = N * N
    k = (N - epsilon) * R
    if k == 0:
        return PdsParams(v, 0, 0, 0)
    lam = epsilon * N + R * R - 3 * epsilon * R
    mu = R * R - epsilon * R
    return PdsParams(v, k, lam, mu, (epsilon, N, R))


def _cyclotomic_members(Q: QuadraticForm, group: AdditiveGroup, e: int, i: int) -> np.ndarray:
    classes = cyclotomic_classes(Q.field, e)
    table = classes.class_index_table()
    return np.flatnonzero(table[Q.value_table()] == i)


def construct_cyclotomic_pds(
    p: int, e: int, gamma: int, m: int, type_name: str, i: int
) -> tuple[GroupSubset, PdsParams]:
    """D_{C_i} = {x in F_q^{2m} : Q(x) in C_i} under semiprimitive cyclotomy.

    q = p^(2*j*gamma) with j minimal such that e divides p^j + 1; Q is the
    standard form of the requested type.  Predicted parameters are the
    (N, R, epsilon) formula with N = q^m and R = (q-1)/e * q^(m-1).
    """
    eps = epsilon_of(type_name)
    if not 0 <= i < e:
        raise ValueError(f"class index {i} out of range(0, {e})")
    j = minimal_j(p, e)
    if j is None:
        raise ValueError(f"no j with {e} | {p}^j + 1: (p, e) = ({p}, {e}) not semiprimitive")
    field = construct_field(p, 2 * j * gamma)
    q = field.order
    Q = standard_form(field, m, type_name)
    group = AdditiveGroup(field, 2 * m)
    members = _cyclotomic_members(Q, group, e, i)
    f = (q - 1) // e
    params = latin_parameters(eps, q**m, f * q ** (m - 1))
    if members.size != params.k:
        raise AssertionError(f"set size {members.size} != predicted k {params.k}")
    return GroupSubset(group, members), params


def construct_affine_polar(
    field: FiniteField, m: int, type_name: str
) -> tuple[GroupSubset, PdsParams]:
    """D = {x in F_q^{2m} : Q(x) a nonzero square}: the e = 2 cyclotomic set.

    Unlike the general semiprimitive machinery this needs no condition on q
    beyond oddness (2 divides p + 1 for every odd p).
    """
    if field.p == 2:
        raise ValueError("affine polar graphs need odd q: every element is a square at p = 2")
    eps = epsilon_of(type_name)
    q = field.order
    Q = standard_form(field, m, type_name)
    group = AdditiveGroup(field, 2 * m)
    members = _cyclotomic_members(Q, group, 2, 0)
    params = latin_parameters(eps, q**m, (q - 1) // 2 * q ** (m - 1))
    if members.size != params.k:
        raise AssertionError(f"set size {members.size} != predicted k {params.k}")
    return GroupSubset(group, members), params


def construct_rt2(Q: QuadraticForm) -> tuple[GroupSubset, PdsParams]:
    """D = {x != 0 : Q(x) = 0} with parameters from r = q^(m-1) + epsilon."""
    ft = form_type(Q)
    field = Q.field
    q, m = field.order, Q.n // 2
    group = AdditiveGroup(field, Q.n)
    values = Q.value_table()
    members = np.flatnonzero(values == 0)
    members = members[members != 0]
    r = q ** (m - 1) + ft.epsilon
    v = q ** (2 * m)
    k = (q**m - ft.epsilon) * r
    if k == 0:
        params = PdsParams(v, 0, 0, 0)
    else:
        params = PdsParams(v, k, q**m + r * r - 3 * r, r * r - r)
    if members.size != params.k:
        raise AssertionError(f"set size {members.size} != predicted k {params.k}")
    return GroupSubset(group, members), params


@dataclass
class BentSetRecord:
    """One bent level-set union with its predicted parameters and equation."""

    name: str
    params: PdsParams
    equation_ok: bool


@dataclass
class BentPdsCertificate:
    """Exact group-ring certificates for the three bent level-set unions."""

    classification: str
    u: int
    scalar: int  # u * (p*)^(n/2)
    case: int  # 1 if p = 1 mod 4 else 2
    records: list[BentSetRecord]

    @property
    def ok(self) -> bool:
        return all(r.equation_ok for r in self.records)


def _bent_set_params(v: int, k: int, lam_minus_mu: int) -> PdsParams:
    if k == 0:
        return PdsParams(v, 0, 0, 0)
    num = k * (k - lam_minus_mu - 1)
    if num % (v - 1):
        raise AssertionError("eigenvalue structure incompatible with set size")
    mu = num // (v - 1)
    return PdsParams(v, k, lam_minus_mu + mu, mu)


def construct_bent_pds(
    f: PAryFunction,
) -> tuple[GroupSubset, GroupSubset, GroupSubset, BentPdsCertificate]:
    """The three PDS of a homogeneous weakly regular bent f on F_{p^n}, n even.

    D_0 minus 0, D_R (f(x) a nonzero square), D_N (f(x) a nonsquare), with
    the proof's group-ring equations checked exactly in Z[G]:
      (p D - ((p-1)/2) F)^2 = ((p^2-1)/4) p^n + u s (p D - ((p-1)/2) F)
    for D in {D_R, D_N}, and the analogous equation for D_0, where
    s = (p*)^(n/2) equals sqrt(p)^n (case p = 1 mod 4) or sqrt(-p)^n
    (case p = 3 mod 4).
    """
    field = f.field
    p, n = field.p, field.k
    if n % 2:
        raise ValueError(f"need even n, got n = {n}")
    spec = walsh_spectrum(f)
    if spec.classification not in WEAKLY_REGULAR_CLASSES:
        raise ValueError(f"walsh classification is {spec.classification}, need weakly regular")
    if homogeneity_degree(f) is None:
        raise ValueError("f has no homogeneity degree k with gcd(k-1, p-1) = 1")
    sets = level_sets(f)
    squares = {pow(t, 2, p) for t in range(1, p)}
    d0_members = sets[0][sets[0] != 0]
    dr_members = np.sort(np.concatenate([sets[i] for i in range(1, p) if i in squares]))
    dn_members = np.sort(np.concatenate([sets[i] for i in range(1, p) if i not in squares]))

    group = f.group()
    v = group.order
    us = spec.normal_form_scalar()
    case = 1 if p % 4 == 1 else 2
    delta = GroupRingElem.delta(group)
    full = GroupRingElem.all_ones(group)
    half = (p - 1) // 2

    def union_equation(members) -> bool:
        E = GroupRingElem.from_indicator(group, members) * p - full * half
        rhs = delta * ((p * p - 1) // 4 * v) + E * us
        return E * E == rhs

    d0_full = GroupRingElem.from_indicator(group, sets[0])
    lhs0 = (d0_full * p) * (d0_full * p)
    rhs0 = (
        full * (-v + 2 * p * len(sets[0]) - us * (p - 2))
        + d0_full * (p * (p - 2) * us)
        + delta * ((p - 1) * v)
    )

    records = [
        BentSetRecord(
            "D0_minus_0",
            _bent_set_params(v, len(d0_members), (p - 2) * us // p - 2),
            lhs0 == rhs0,
        ),
        BentSetRecord(
            "D_R", _bent_set_params(v, len(dr_members), us // p), union_equation(dr_members)
        ),
        BentSetRecord(
            "D_N", _bent_set_params(v, len(dn_members), us // p), union_equation(dn_members)
        ),
    ]
    cert = BentPdsCertificate(spec.classification, spec.u, us, case, records)
    return (
        GroupSubset(group, d0_members),
        GroupSubset(group, dr_members),
        GroupSubset(group, dn_members),
        cert,
    )


def _precondition_failure(D: GroupSubset, method: str) -> VerificationReport | None:
    if D.contains(0):
        return VerificationReport(
            False, method, witness={"kind": "zero_in_set", "element": 0}, notes="0 lies in D"
        )
    neg = np.sort(D.group.neg_vec(D.members))
    if not np.array_equal(neg, D.members):
        bad = int(D.members[~np.isin(D.members, neg)][0])
        return VerificationReport(
            False,
            method,
            witness={"kind": "not_symmetric", "element": bad},
            notes=f"-D != D: {bad} lies in D but {D.group.neg(bad)} does not",
        )
    return None


def verify_pds_bruteforce(D: GroupSubset) -> VerificationReport:
    """Exact difference counting over all ordered pairs of D."""
    G = D.group
    v = G.order
    fail = _precondition_failure(D, BRUTEFORCE)
    if fail is not None:
        return fail
    k = D.size
    if k == 0:
        return VerificationReport(
            True, BRUTEFORCE, PdsParams(v, 0, 0, 0), degenerate=True, notes="empty set"
        )
    counts = kernels.difference_counts(D.members, G.exponent, G.ndigits)
    in_d = np.zeros(v, dtype=bool)
    in_d[D.members] = True
    lam = int(counts[D.members[0]])
    lam_bad = D.members[counts[D.members] != lam]
    if lam_bad.size:
        x = int(lam_bad[0])
        return VerificationReport(
            False,
            BRUTEFORCE,
            witness={"kind": "lambda", "element": x, "count": int(counts[x]), "expected": lam},
        )
    outside = np.flatnonzero(~in_d)[1:]  # drop 0
    if outside.size:
        mu = int(counts[outside[0]])
        mu_bad = outside[counts[outside] != mu]
        if mu_bad.size:
            x = int(mu_bad[0])
            return VerificationReport(
                False,
                BRUTEFORCE,
                witness={"kind": "mu", "element": x, "count": int(counts[x]), "expected": mu},
            )
    else:
        mu = 0  # D = G minus 0: no element realizes mu
    degenerate = k < 2 or not outside.size
    params = PdsParams(v, k, lam, mu)
    return VerificationReport(
        True,
        BRUTEFORCE,
        params,
        degenerate=degenerate,
        eigenvalues=params.eigenvalues() if _square_disc(params) else None,
    )


def _square_disc(params: PdsParams) -> bool:
    delta = (params.lam - params.mu) ** 2 + 4 * (params.k - params.mu)
    return math.isqrt(delta) ** 2 == delta


def verify_pds_characters(D: GroupSubset, params: PdsParams) -> VerificationReport:
    """Character-sum certifier: chi_b(D) = sum over d in D of w^(<b,d>).

    <b,d> is the F_p dot product of base-p digit vectors, a complete set of
    characters of G.  Passes iff the principal value is k and every other
    value is one of the two integer eigenvalues.
    """
    G = D.group
    p = G.exponent
    theta = params.eigenvalues()  # raises on non-square discriminant
    fail = _precondition_failure(D, CHARACTERS)
    if fail is not None:
        return fail
    if D.size != params.k:
        return VerificationReport(
            False,
            CHARACTERS,
            witness={"kind": "principal", "element": 0, "count": D.size, "expected": params.k},
            notes="principal character sum is |D|, which differs from k",
        )
    if D.size == 0:
        return VerificationReport(True, CHARACTERS, params, degenerate=True, notes="empty set")
    counts = kernels.character_counts(G.digit_matrix(), G.digit_matrix(D.members), p)
    # chi_b is a rational integer iff the histogram is constant on w^1..w^(p-1)
    flat = np.all(counts[:, 2:] == counts[:, 1:2], axis=1) if p > 2 else np.ones(G.order, bool)
    values = counts[:, 0] - counts[:, 1]
    bad = np.flatnonzero(~flat)
    if bad.size:
        b = int(bad[0])
        return VerificationReport(
            False,
            CHARACTERS,
            witness={"kind": "non_integral_character", "element": b,
                     "histogram": counts[b].tolist()},
        )
    ok = (values == theta[0]) | (values == theta[1])
    ok[0] = values[0] == params.k
    bad = np.flatnonzero(~ok)
    if bad.size:
        b = int(bad[0])
        return VerificationReport(
            False,
            CHARACTERS,
            witness={"kind": "eigenvalue", "element": b, "count": int(values[b]),
                     "expected": list(theta)},
        )
    return VerificationReport(
        True, CHARACTERS, params, degenerate=params.k < 2, eigenvalues=theta
    )
