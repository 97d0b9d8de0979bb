"""Backend selection for the hot scans.

The exhaustive searches (transitive closure, maximal-antichain enumeration,
split search, strong-density scan) exist twice: numba-jitted bitmask loops
and a vectorized pure-numpy fallback. Set POSETSPLIT_BACKEND=numpy or
POSETSPLIT_BACKEND=numba to force one; by default numba is used when it
imports, numpy otherwise. Both produce identical results.
"""

import os

_requested = os.environ.get("POSETSPLIT_BACKEND", "").strip().lower()
if _requested not in ("", "numba", "numpy"):
    raise ImportError(
        "POSETSPLIT_BACKEND must be 'numba' or 'numpy', got %r" % _requested)

if _requested == "numpy":
    from . import numpy_kernels as _impl
else:
    try:
        from . import numba_kernels as _impl
    except ImportError:
        if _requested == "numba":
            raise
        from . import numpy_kernels as _impl

BACKEND = _impl.NAME
transitive_closure = _impl.transitive_closure
maximal_antichain_masks = _impl.maximal_antichain_masks
first_split_mask = _impl.first_split_mask
density_gap = _impl.density_gap
