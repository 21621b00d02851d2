"""Kernel backend selection.

The hot loops (bulk truncation coefficients, polynomial products and
remainders, series convolutions) live behind a small function surface that
has two interchangeable implementations:

* ``_ckernels`` -- a compiled Cython extension, used when available;
* ``pure`` -- plain Python with identical semantics, always available.

Selection happens once at import.  Set ``APERYLIKE_KERNELS=pure`` or
``APERYLIKE_KERNELS=compiled`` to force a backend (the latter raises if the
extension is missing); anything else means "compiled if it built".
"""
import os

from . import pure as _pure

_choice = os.environ.get("APERYLIKE_KERNELS", "auto").lower()

if _choice == "pure":
    _impl = _pure
else:
    try:
        from . import _ckernels as _impl  # type: ignore[attr-defined]

        if not hasattr(_impl, "NAME"):  # stale or partial build
            raise ImportError("compiled kernels incomplete")
    except ImportError:
        if _choice == "compiled":
            raise
        _impl = _pure

BACKEND = _impl.NAME

poly_mul = _impl.poly_mul
poly_divrem = _impl.poly_divrem
poly_gcd = _impl.poly_gcd
series_mul = _impl.series_mul
series_inv = _impl.series_inv
twist_sum = _impl.twist_sum

TRUNC_FUNCS = {
    "apery": _impl.trunc_apery,
    "domb": _impl.trunc_domb,
    "az": _impl.trunc_az,
    "franel": _impl.trunc_franel,
    "a229111": _impl.trunc_a229111,
    "a290575": _impl.trunc_a290575,
    "a290576": _impl.trunc_a290576,
    "a274786": _impl.trunc_a274786,
    "a181418": _impl.trunc_a181418,
    "a183204": _impl.trunc_a183204,
    "a005260": _impl.trunc_a005260,
}
trunc_gen = _impl.trunc_gen


def get_backends():
    """Return the available backend modules keyed by name (for benchmarks/tests)."""
    out = {"pure": _pure}
    try:
        from . import _ckernels  # type: ignore[attr-defined]

        out["compiled"] = _ckernels
    except ImportError:
        pass
    return out
