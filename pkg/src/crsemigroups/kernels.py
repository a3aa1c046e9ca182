"""Kernel backend selection.

The compiled extension is preferred when importable; otherwise the
pure-Python twin is used.  Set CRSEMIGROUPS_KERNEL=python to force the
fallback, or CRSEMIGROUPS_KERNEL=cython to fail loudly when the extension
is missing.
"""

import os

_requested = os.environ.get("CRSEMIGROUPS_KERNEL", "auto").strip().lower()

if _requested == "python":
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        if _requested == "cython":
            raise ImportError(
                "CRSEMIGROUPS_KERNEL=cython but the compiled kernel is not built"
            ) from None
        from . import _kernels_py as _impl

BACKEND = _impl.BACKEND_NAME

associativity_witness = _impl.associativity_witness
closure_blocks = _impl.closure_blocks
greatest_contained_blocks = _impl.greatest_contained_blocks
saturation_blocks = _impl.saturation_blocks
associative_tables = _impl.associative_tables
