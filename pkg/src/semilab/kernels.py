"""Hot-kernel dispatch: the compiled extension when built, else pure Python.

Set ``SEMILAB_PURE_PYTHON=1`` to force the fallback.
"""
import os

from . import _pykernels

if os.environ.get("SEMILAB_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pykernels
    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels
        BACKEND = "python"

enumerate_lexmin = _impl.enumerate_lexmin
lexmin_relabel = _impl.lexmin_relabel
find_nonassociative = _impl.find_nonassociative
