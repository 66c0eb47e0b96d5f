"""Deterministic JSON/CSV serialization for sets, partitions, functions,
forms, spectra and certificates.

All writers go through atomic_write_text (temp file + os.replace) and emit
sorted-key JSON with a trailing newline, so identical inputs produce
byte-identical files.  Readers raise ValueError on malformed content.
"""

import json
import os
import tempfile

import numpy as np

from .bent import PAryFunction, WalshSpectrum
from .gf import FiniteField
from .groupring import AdditiveGroup
from .pds import GroupSubset, VerificationReport
from .qform import QuadraticForm
from .scheme import SchemeCertificate, TranslationPartition

# -- primitives ------------------------------------------------------------


def atomic_write_text(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".pdslab-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def write_json(path: str, obj) -> None:
    atomic_write_text(path, dump_json(obj))


def read_json(path: str):
    with open(path, encoding="utf-8") as handle:
        try:
            return json.load(handle)
        except json.JSONDecodeError as exc:
            raise ValueError(f"{path}: not valid JSON: {exc}") from exc


def _expect_dict(data, what: str) -> dict:
    if not isinstance(data, dict):
        raise ValueError(f"malformed {what}: expected a JSON object")
    return data


# -- sets ------------------------------------------------------------------


def set_to_dict(D: GroupSubset) -> dict:
    return {"group": D.group.descriptor(), "members": [int(x) for x in D.members]}


def set_from_dict(data) -> GroupSubset:
    data = _expect_dict(data, "set file")
    try:
        group = AdditiveGroup.from_descriptor(data["group"])
        members = [int(x) for x in data["members"]]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed set file: {exc}") from exc
    return GroupSubset(group, members)


def write_set(path: str, D: GroupSubset) -> None:
    write_json(path, set_to_dict(D))


def read_set(path: str) -> GroupSubset:
    return set_from_dict(read_json(path))


# -- partitions ------------------------------------------------------------


def partition_to_dict(partition: TranslationPartition) -> dict:
    return {
        "group": partition.group.descriptor(),
        "classes": [[int(x) for x in cls.members] for cls in partition.classes],
        "notes": list(partition.notes),
    }


def partition_from_dict(data) -> TranslationPartition:
    data = _expect_dict(data, "partition file")
    try:
        group = AdditiveGroup.from_descriptor(data["group"])
        classes = [GroupSubset(group, [int(x) for x in cls]) for cls in data["classes"]]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed partition file: {exc}") from exc
    return TranslationPartition(group, classes, [str(n) for n in data.get("notes", [])])


def write_partition(path: str, partition: TranslationPartition) -> None:
    write_json(path, partition_to_dict(partition))


def read_partition(path: str) -> TranslationPartition:
    return partition_from_dict(read_json(path))


# -- p-ary functions -------------------------------------------------------


def function_to_dict(f: PAryFunction) -> dict:
    return {"field": f.field.descriptor(), "values": [int(v) for v in f.values]}


def function_from_dict(data) -> PAryFunction:
    data = _expect_dict(data, "function file")
    try:
        field = FiniteField.from_descriptor(data["field"])
        values = [int(v) for v in data["values"]]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed function file: {exc}") from exc
    return PAryFunction(field, values)


def write_function(path: str, f: PAryFunction) -> None:
    write_json(path, function_to_dict(f))


def read_function(path: str) -> PAryFunction:
    return function_from_dict(read_json(path))


# -- quadratic forms -------------------------------------------------------


def _entry_to_str(field: FiniteField, c: int) -> str:
    return "0" if c == 0 else f"g^{int(field.log[c])}"


def _entry_from_str(field: FiniteField, s: str) -> int:
    if s == "0":
        return 0
    if not s.startswith("g^"):
        raise ValueError(f"malformed form entry {s!r}")
    return int(field.antilog[int(s[2:]) % (field.order - 1)])


def form_to_dict(Q: QuadraticForm) -> dict:
    return {
        "field": Q.field.descriptor(),
        "n": Q.n,
        "matrix": [[_entry_to_str(Q.field, c) for c in row] for row in Q.coeffs],
    }


def form_from_dict(data) -> QuadraticForm:
    data = _expect_dict(data, "form file")
    try:
        field = FiniteField.from_descriptor(data["field"])
        matrix = [[_entry_from_str(field, s) for s in row] for row in data["matrix"]]
        if len(matrix) != int(data["n"]):
            raise ValueError("form dimension does not match the matrix")
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed form file: {exc}") from exc
    return QuadraticForm(field, matrix)


def write_form(path: str, Q: QuadraticForm) -> None:
    write_json(path, form_to_dict(Q))


def read_form(path: str) -> QuadraticForm:
    return form_from_dict(read_json(path))


# -- certificates ----------------------------------------------------------


def verification_to_dict(report: VerificationReport) -> dict:
    params = report.params.to_dict() if report.params else None
    latin = params.pop("latin", None) if params else None
    out = {
        "ok": report.ok,
        "method": report.method,
        "degenerate": report.degenerate,
        "params": params,
        "latin": latin,
        "eigenvalues": list(report.eigenvalues) if report.eigenvalues else None,
    }
    if report.witness is not None:
        out["witness"] = _plain(report.witness)
    if report.notes:
        out["notes"] = report.notes
    return out


def scheme_certificate_to_dict(cert: SchemeCertificate) -> dict:
    return {
        "d": cert.d,
        "p_tensor": cert.p_tensor.tolist(),
        "amorphic": cert.amorphic,
        "epsilon": cert.epsilon,
        "class_reports": [verification_to_dict(r) for r in cert.class_reports]
        if cert.class_reports is not None
        else None,
        "fusion_reports": _plain(cert.fusion_reports),
        "notes": list(cert.notes),
    }


def _plain(obj):
    """Recursively convert tuples/numpy scalars/arrays to JSON-native types."""
    if isinstance(obj, dict):
        return {k: _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(x) for x in obj]
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    return obj


# -- Walsh spectra ----------------------------------------------------------


def spectrum_to_dict(spectrum: WalshSpectrum) -> dict:
    return {
        "field": spectrum.function.field.descriptor(),
        "classification": spectrum.classification,
        "u": spectrum.u,
        "dual_values": [int(v) for v in spectrum.dual.values] if spectrum.dual else None,
        "coefficients": [c.to_dict() for c in spectrum.coefficients()],
    }


# -- Cayley graph exports ---------------------------------------------------


def _adjacency(D: GroupSubset) -> np.ndarray:
    """Dense 0/1 matrix of Cay(G, D): u ~ v iff u - v in D."""
    dense = np.zeros(D.group.order, dtype=np.int64)
    dense[D.members] = 1
    G = D.group
    all_idx = np.arange(G.order, dtype=np.int64)
    return np.stack([dense[G.add_vec(all_idx, G.neg(u))] for u in range(G.order)])


def edge_list_lines(D: GroupSubset) -> list[str]:
    """Edges of Cay(G, D), one 'u v' line per edge with u < v."""
    adj = _adjacency(D)
    us, vs = np.nonzero(np.triu(adj, 1))
    return [f"{u} {v}" for u, v in zip(us, vs)]


def write_edge_list(path: str, D: GroupSubset) -> None:
    atomic_write_text(path, "\n".join(edge_list_lines(D)) + "\n")


def adjacency_csv_lines(D: GroupSubset) -> list[str]:
    return [",".join(str(x) for x in row) for row in _adjacency(D)]


def write_adjacency_csv(path: str, D: GroupSubset) -> None:
    atomic_write_text(path, "\n".join(adjacency_csv_lines(D)) + "\n")
