"""Hot-loop kernels with selectable backend.

The DELTA_KERNELS env var picks the implementation at import time:
``numba`` (jitted), ``numpy`` (pure fallback), or ``auto`` (default:
numba when importable, numpy otherwise). Both backends expose the same
functions and produce identical outputs; ``tests/test_kernels.py`` holds
them to that.
"""

from __future__ import annotations

import os

_ENV = "DELTA_KERNELS"
_choice = os.environ.get(_ENV, "auto").strip().lower()
if _choice not in ("auto", "numba", "numpy"):
    raise ValueError(f"{_ENV} must be auto, numba or numpy, got {_choice!r}")

if _choice == "numpy":
    from . import numpy_backend as _impl
elif _choice == "numba":
    from . import numba_backend as _impl
else:
    try:
        from . import numba_backend as _impl
    except ImportError:
        from . import numpy_backend as _impl

BACKEND = _impl.NAME
assoc_defect = _impl.assoc_defect
class_ids = _impl.class_ids
element_orders = _impl.element_orders
hom_defect = _impl.hom_defect
generated_mask = _impl.generated_mask
try_extend = _impl.try_extend


def warm_up() -> None:
    """Run every kernel once on a tiny table (pays any JIT cost upfront)."""
    import numpy as np

    t = np.array([[0, 1], [1, 0]], dtype=np.int32)
    inv = np.array([0, 1], dtype=np.int32)
    one = np.array([1], dtype=np.int32)
    assoc_defect(t)
    class_ids(t, inv)
    element_orders(t)
    hom_defect(t, t, inv)
    generated_mask(t, one)
    try_extend(t, t, one, one)


__all__ = [
    "BACKEND",
    "assoc_defect",
    "class_ids",
    "element_orders",
    "hom_defect",
    "generated_mask",
    "try_extend",
    "warm_up",
]
