"""Backend dispatch for the counting kernels.

The compiled extension (pdslab._speedups, built from Cython) and the numpy
fallback (_kernels_py) implement the same four functions.  The extension is
preferred when importable; use_backend() forces one or the other, which the
parity tests and the benchmark rely on.
"""

from . import _kernels_py as _py

try:
    from . import _speedups as _c
except ImportError:
    _c = None

_active = _c if _c is not None else _py


def available_backends() -> list[str]:
    return ["cython", "python"] if _c is not None else ["python"]


def active_backend() -> str:
    return "cython" if _active is _c else "python"


def use_backend(name: str) -> str:
    """Select 'cython', 'python' or 'auto'; returns the backend now active."""
    global _active
    if name == "python":
        _active = _py
    elif name == "cython":
        if _c is None:
            raise ValueError("compiled backend is not available")
        _active = _c
    elif name == "auto":
        _active = _c if _c is not None else _py
    else:
        raise ValueError(f"unknown backend {name!r}")
    return active_backend()


def convolve(a, b, p, ndigits):
    return _active.convolve(a, b, p, ndigits)


def difference_counts(members, p, ndigits):
    return _active.difference_counts(members, p, ndigits)


def character_counts(left_digits, right_digits, p):
    return _active.character_counts(left_digits, right_digits, p)


def walsh_counts(fvals, tr_anti, p):
    return _active.walsh_counts(fvals, tr_anti, p)
