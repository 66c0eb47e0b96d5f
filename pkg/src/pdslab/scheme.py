"""Translation association schemes and amorphic certification.

A partition of G minus 0 into symmetric classes S_1..S_d defines relations
R_i = {(x,y) : x - y in S_i}.  For translation schemes the scheme axiom
reduces to: the convolution S_i * S_j is constant on every class S_k (and
on {0}), the constant being the intersection number p_ij^k.

Amorphic certification is exhaustive: every one of the Bell(d) fusions of
the classes must again be a scheme, which for strongly regular classes
reduces to every fused union being a PDS.  The type hypothesis (all classes
Latin or all negative Latin, the Ivanov-condition) is checked alongside as
corroborating evidence.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .bent import PAryFunction
from .groupring import AdditiveGroup
from .pds import (
    GroupSubset,
    PdsParams,
    VerificationReport,
    _latin_candidates,
    construct_bent_pds,
    construct_cyclotomic_pds,
    verify_pds_bruteforce,
)
from .qform import standard_form


@dataclass
class TranslationPartition:
    """Disjoint symmetric classes covering G minus 0."""

    group: AdditiveGroup
    classes: list[GroupSubset]
    notes: list[str] = field(default_factory=list)

    def __post_init__(self):
        if not self.classes:
            raise ValueError("a partition needs at least one class")
        for i, cls in enumerate(self.classes):
            if cls.group != self.group:
                raise ValueError(f"class {i} lives in a different group")
            if cls.size == 0:
                raise ValueError(f"class {i} is empty (empty classes must be dropped)")
            if cls.contains(0):
                raise ValueError(f"class {i} contains 0")
            if not cls.is_symmetric():
                raise ValueError(f"class {i} is not symmetric")
        merged = np.concatenate([cls.members for cls in self.classes])
        if len(np.unique(merged)) != merged.size:
            raise ValueError("classes are not disjoint")
        if merged.size != self.group.order - 1:
            raise ValueError("classes do not cover the nonzero elements")

    @property
    def d(self) -> int:
        return len(self.classes)


@dataclass
class SchemeCertificate:
    """Intersection numbers plus, optionally, the amorphic fusion evidence."""

    d: int
    p_tensor: np.ndarray  # (d+1, d+1, d+1), class 0 = {0}
    amorphic: bool | None = None
    fusion_reports: list[dict] | None = None
    class_reports: list[VerificationReport] | None = None
    epsilon: int | None = None
    notes: list[str] = field(default_factory=list)


@dataclass
class SchemeCheckResult:
    ok: bool
    certificate: SchemeCertificate | None = None
    witness: dict | None = None


def check_scheme(partition: TranslationPartition) -> SchemeCheckResult:
    """Verify the scheme axiom and compute the full intersection tensor."""
    G = partition.group
    d = partition.d
    v = G.order
    tensor = np.zeros((d + 1, d + 1, d + 1), dtype=np.int64)
    tensor[0, 0, 0] = 1
    for i in range(1, d + 1):
        tensor[0, i, i] = 1
        tensor[i, 0, i] = 1
    indicators = []
    for cls in partition.classes:
        ind = np.zeros(v, dtype=np.int64)
        ind[cls.members] = 1
        indicators.append(ind)
    for i in range(1, d + 1):
        for j in range(i, d + 1):
            conv = kernels.convolve(indicators[i - 1], indicators[j - 1], G.exponent, G.ndigits)
            tensor[i, j, 0] = tensor[j, i, 0] = conv[0]
            for k in range(1, d + 1):
                members = partition.classes[k - 1].members
                vals = conv[members]
                if np.any(vals != vals[0]):
                    bad = int(members[np.argmax(vals != vals[0])])
                    witness = {
                        "i": i,
                        "j": j,
                        "k": k,
                        "elements": (int(members[0]), bad),
                        "counts": (int(vals[0]), int(conv[bad])),
                    }
                    return SchemeCheckResult(False, witness=witness)
                tensor[i, j, k] = tensor[j, i, k] = int(vals[0])
    cert = SchemeCertificate(d, tensor, notes=list(partition.notes))
    return SchemeCheckResult(True, certificate=cert)


def set_partitions(n: int):
    """All partitions of range(n) into nonempty blocks, in a fixed order."""

    def rec(i, blocks):
        if i == n:
            yield [list(b) for b in blocks]
            return
        for b in blocks:
            b.append(i)
            yield from rec(i + 1, blocks)
            b.pop()
        blocks.append([i])
        yield from rec(i + 1, blocks)
        blocks.pop()

    yield from rec(0, [])


FUSION_CAP = 8  # Bell(8) = 4140 exhaustive fusions


def certify_amorphic(partition: TranslationPartition) -> SchemeCertificate:
    """Exhaustive amorphic certification of a translation partition.

    (a) every class is a PDS by brute force; (b) all classes admit a common
    Latin-type sign epsilon; (c) every fusion of classes is again a scheme,
    certified by brute-forcing each fused union.
    """
    d = partition.d
    if d > FUSION_CAP:
        raise ValueError(f"fusion enumeration capped at d = {FUSION_CAP}, got {d}")
    base = check_scheme(partition)
    if not base.ok:
        raise ValueError(f"not an association scheme: witness {base.witness}")
    cert = base.certificate

    class_reports = [verify_pds_bruteforce(cls) for cls in partition.classes]
    classes_ok = all(r.ok for r in class_reports)

    shared: set[int] | None = None
    for rep in class_reports:
        if rep.params is None:
            shared = set()
            break
        cands = {eps for eps, _, _ in _latin_candidates(*rep.params.tuple)}
        shared = cands if shared is None else shared & cands
    type_ok = bool(shared)

    fusion_reports = []
    fusions_ok = True
    for blocks in set_partitions(d):
        fused_params = []
        ok = True
        for block in blocks:
            members = np.sort(
                np.concatenate([partition.classes[i].members for i in block])
            )
            rep = verify_pds_bruteforce(GroupSubset(partition.group, members))
            fused_params.append(rep.params.tuple if rep.params else None)
            ok = ok and rep.ok
        fusion_reports.append({"blocks": blocks, "params": fused_params, "ok": ok})
        fusions_ok = fusions_ok and ok

    cert.amorphic = classes_ok and type_ok and fusions_ok
    cert.fusion_reports = fusion_reports
    cert.class_reports = class_reports
    cert.epsilon = (1 if 1 in shared else -1) if shared else None
    if not type_ok:
        cert.notes.append("classes do not share a Latin-type sign")
    return cert


def build_cyclotomic_scheme(
    p: int, e: int, gamma: int, m: int, type_name: str
) -> TranslationPartition:
    """Classes {D_0 minus 0, D_{C_0}, ..., D_{C_{e-1}}}, empty classes dropped."""
    subsets = []
    notes = []
    group = None
    for i in range(e):
        D, _ = construct_cyclotomic_pds(p, e, gamma, m, type_name, i)
        group = D.group
        subsets.append(D)
    Q = standard_form(group.field, m, type_name)
    zeros = np.flatnonzero(Q.value_table() == 0)
    d0 = GroupSubset(group, zeros[zeros != 0])
    if d0.size:
        subsets.insert(0, d0)
    else:
        notes.append("dropped empty class D_0 minus 0")
    return TranslationPartition(group, subsets, notes)


def build_bent_scheme(f: PAryFunction) -> TranslationPartition:
    """Classes {D_0 minus 0, D_R, D_N}, empty classes dropped."""
    d0, dr, dn, _ = construct_bent_pds(f)
    subsets = []
    notes = []
    for name, D in (("D_0 minus 0", d0), ("D_R", dr), ("D_N", dn)):
        if D.size:
            subsets.append(D)
        else:
            notes.append(f"dropped empty class {name}")
    return TranslationPartition(d0.group, subsets, notes)
