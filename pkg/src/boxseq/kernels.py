"""Kernel selection: the compiled extension when importable, else pure Python.

Set ``BOXSEQ_PURE_PYTHON=1`` to force the fallback.
"""
import os

from . import _kernels_py

BACKEND = "python"
if os.environ.get("BOXSEQ_PURE_PYTHON", "") not in ("", "0"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py

taylor_shift = _impl.taylor_shift
horner = _impl.horner
kink_sum = _impl.kink_sum

__all__ = ["BACKEND", "taylor_shift", "horner", "kink_sum"]
