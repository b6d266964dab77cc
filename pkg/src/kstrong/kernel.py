"""Backend selection for the bitmask kernel.

The compiled ``_ckernel`` is used when it was built; otherwise the pure-Python
``_pykernel``.  Set ``KSTRONG_PURE_PYTHON=1`` to force the fallback.
"""

import os

if os.environ.get("KSTRONG_PURE_PYTHON"):
    from . import _pykernel as _impl
else:
    try:
        from . import _ckernel as _impl
    except ImportError:
        from . import _pykernel as _impl

BACKEND: str = _impl.BACKEND

decode = _impl.decode
contains_k_strong = _impl.contains_k_strong
kappa = _impl.kappa
is_saturated = _impl.is_saturated
scan_saturated = _impl.scan_saturated
scan_free = _impl.scan_free


def available_backends() -> dict:
    """Every importable kernel module, keyed by backend name."""
    from . import _pykernel

    found = {"python": _pykernel}
    try:
        from . import _ckernel
    except ImportError:
        pass
    else:
        found["cython"] = _ckernel
    return found
