"""Hot kernels with a compiled backend and a pure-Python fallback.

The compiled module is used when it imports cleanly, unless the environment
variable ``DOLBEAULT_PURE_PYTHON`` is set to a non-empty value other than
``0``. ``BACKEND`` names the active implementation.
"""
import os

from . import _pykernels as python_backend

compiled_backend = None
if os.environ.get("DOLBEAULT_PURE_PYTHON", "") in ("", "0"):
    try:
        from . import _ckernels as compiled_backend
    except ImportError:
        compiled_backend = None

_active = compiled_backend if compiled_backend is not None else python_backend
BACKEND = "cython" if compiled_backend is not None else "python"

delta = _active.delta
bott_core = _active.bott_core
weyl_dim = _active.weyl_dim
lr_coefficient = _active.lr_coefficient

__all__ = ["BACKEND", "delta", "bott_core", "weyl_dim", "lr_coefficient",
           "python_backend", "compiled_backend"]
