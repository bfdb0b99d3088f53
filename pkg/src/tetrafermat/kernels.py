"""Backend selection for the hot numeric loops.

The compiled extension is preferred when it imported cleanly; otherwise the
pure-Python mirror is used.  Set ``TETRAFERMAT_PURE_PYTHON=1`` to force the
fallback (useful for benchmarking and for testing the fallback path).
"""

from __future__ import annotations

import os

from . import _pykernels

if os.environ.get("TETRAFERMAT_PURE_PYTHON") == "1":
    _impl = _pykernels
    BACKEND = "python"
else:
    try:
        from . import _native as _impl  # type: ignore[no-redef]

        BACKEND = "native"
    except ImportError:
        _impl = _pykernels
        BACKEND = "python"

CONVERGED = _pykernels.CONVERGED
VERTEX = _pykernels.VERTEX
MAXITER = _pykernels.MAXITER

distance_sum = _impl.distance_sum
resultant_norm = _impl.resultant_norm
pull_norm = _impl.pull_norm
weiszfeld_step = _impl.weiszfeld_step
weiszfeld = _impl.weiszfeld
nelder_mead = _impl.nelder_mead
