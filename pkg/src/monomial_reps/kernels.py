"""Backend selection for the counting kernels.

The compiled extension is preferred; set ``MONOMIAL_REPS_PURE_PYTHON=1`` to
force the pure-Python fallback.  Both expose the same three functions.
"""

import os

from . import _pykernels as python_backend

if os.environ.get("MONOMIAL_REPS_PURE_PYTHON", "") not in ("", "0"):
    compiled_backend = None
else:
    try:
        from . import _ckernels as compiled_backend
    except ImportError:
        compiled_backend = None

_active = compiled_backend if compiled_backend is not None else python_backend

BACKEND = "cython" if compiled_backend is not None else "python"

count_ssyt = _active.count_ssyt
count_sized_multiset_partitions = _active.count_sized_multiset_partitions
count_balanced_set_partitions = _active.count_balanced_set_partitions

__all__ = [
    "BACKEND",
    "compiled_backend",
    "python_backend",
    "count_ssyt",
    "count_sized_multiset_partitions",
    "count_balanced_set_partitions",
]
