"""Kernel backend selection.

The compiled extension is preferred when present; the numpy reference
backend is the fallback.  PERCWIT_BACKEND=python forces the reference
implementation, PERCWIT_BACKEND=compiled insists on the extension and
raises if it is missing.
"""
import os

_choice = os.environ.get("PERCWIT_BACKEND", "auto").strip().lower()

if _choice in ("auto", "", "compiled"):
    try:
        from . import _fastcore as _impl
        BACKEND = "compiled"
    except ImportError:
        if _choice == "compiled":
            raise
        from . import reference as _impl
        BACKEND = "python"
elif _choice == "python":
    from . import reference as _impl
    BACKEND = "python"
else:
    raise ValueError(f"PERCWIT_BACKEND={_choice!r}: expected auto, compiled or python")

witness_value = _impl.witness_value
oracle_max_totals = _impl.oracle_max_totals
