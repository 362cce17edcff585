"""Hot Cayley-table kernels: subgroup closure and the associativity scan.

The compiled Cython core is used when it has been built; otherwise, or when
``BRAUERCFG_PURE_PYTHON`` is set, the pure-Python fallback is selected.
"""

import os

from . import _pykernels as python_backend

compiled_backend = None
if not os.environ.get("BRAUERCFG_PURE_PYTHON"):
    try:
        from . import _ckernels as compiled_backend
    except ImportError:
        compiled_backend = None

backend = compiled_backend or python_backend
BACKEND = "cython" if compiled_backend is not None else "python"

prepare_table = backend.prepare_table
closure = backend.closure
associativity_violation = backend.associativity_violation

__all__ = ["BACKEND", "prepare_table", "closure", "associativity_violation"]
