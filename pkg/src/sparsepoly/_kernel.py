"""Kernel selection: compiled extension when available, else pure Python.

Set ``SPARSEPOLY_BACKEND=python`` to force the fallback or ``=c`` to
require the extension (ImportError if it was not built).  The default
``auto`` prefers the extension.
"""

import os

from . import _kernel_py

_requested = os.environ.get("SPARSEPOLY_BACKEND", "auto").lower()
if _requested not in ("auto", "c", "python"):
    raise ValueError(f"SPARSEPOLY_BACKEND must be auto, c or python, not {_requested!r}")

if _requested == "python":
    _impl = _kernel_py
    BACKEND = "python"
else:
    try:
        from . import _kernel_c as _impl  # type: ignore[no-redef]

        BACKEND = "c"
    except ImportError:
        if _requested == "c":
            raise ImportError(
                "SPARSEPOLY_BACKEND=c but the compiled kernel is not built; "
                "run `python setup.py build_ext --inplace` or reinstall"
            ) from None
        _impl = _kernel_py
        BACKEND = "python"

merge_terms = _impl.merge_terms
mul_terms = _impl.mul_terms

# Instrumented variant stays pure Python regardless of backend: it exists
# to count accumulate operations, not to be fast.
mul_terms_with_count = _kernel_py.mul_terms_with_count


def backend_name() -> str:
    """Which kernel is live: ``"c"`` or ``"python"``."""
    return BACKEND
