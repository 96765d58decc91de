"""Hot polynomial kernels: compiled extension when available, pure Python otherwise.

Set ``AGCERT_PURE=1`` in the environment to force the pure-Python backend.
"""

import os

from . import _pykernels

BACKEND = "python"
_impl = _pykernels

if os.environ.get("AGCERT_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels

poly_mul = _impl.poly_mul
poly_mul_term = _impl.poly_mul_term
poly_add_scaled = _impl.poly_add_scaled
normal_form = _impl.normal_form
divides_key = _impl.divides_key
DeadlineExceeded = _pykernels.DeadlineExceeded


def backends():
    """Available backend modules keyed by name (used by tests and the benchmark)."""
    out = {"python": _pykernels}
    try:
        from . import _ckernels

        out["cython"] = _ckernels
    except ImportError:
        pass
    return out
