"""Backend selection for the ell-loop kernels.

The compiled extension is used when it imports and the inputs fit 64-bit
arithmetic; otherwise the pure-Python implementation runs. Setting
``BOXPOLY_PURE_PYTHON=1`` forces the fallback at import time.
"""

import os

from boxpoly import _pykernels

try:
    if os.environ.get("BOXPOLY_PURE_PYTHON", "") not in ("", "0"):
        raise ImportError("pure-Python backend forced")
    from boxpoly import _ckernels
except ImportError:
    _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"

_I64_SAFE = 1 << 62


def _compiled_ok(steps, N):
    return _ckernels is not None and len(steps) * N < _I64_SAFE


def age_counts(steps, N, lo=0, hi=None, backend=None):
    """Histogram ages over ``ell`` in ``[lo, hi)``; see ``_pykernels.age_counts``."""
    hi = N if hi is None else hi
    mod = _pick(steps, N, backend)
    return mod.age_counts(steps, N, lo, hi)


def age_table(steps, N, lo=0, hi=None, backend=None):
    hi = N if hi is None else hi
    mod = _pick(steps, N, backend)
    return mod.age_table(steps, N, lo, hi)


def _pick(steps, N, backend):
    if backend == "python":
        return _pykernels
    if backend == "cython":
        if not _compiled_ok(steps, N):
            raise RuntimeError("compiled kernel unavailable for these inputs")
        return _ckernels
    return _ckernels if _compiled_ok(steps, N) else _pykernels
