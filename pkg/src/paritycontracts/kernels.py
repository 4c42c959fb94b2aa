"""Backend dispatch for the fixpoint kernels.

Set PARITYCONTRACTS_BACKEND=numpy (or =numba) to force a backend; the
default is numba when importable, falling back to pure numpy.  See
benchmarks/bench_kernels.py for a speed comparison of the two.
"""

import os

_choice = os.environ.get("PARITYCONTRACTS_BACKEND", "").strip().lower()

if _choice == "numpy":
    from . import _kernels_numpy as _impl
elif _choice == "numba":
    from . import _kernels_numba as _impl
elif _choice == "":
    try:
        from . import _kernels_numba as _impl
    except ImportError:
        from . import _kernels_numpy as _impl
else:
    raise ValueError(f"unknown PARITYCONTRACTS_BACKEND {_choice!r}")

BACKEND = _impl.BACKEND
cpre_mask = _impl.cpre_mask
epre_mask = _impl.epre_mask
safety_mask = _impl.safety_mask
reach_mask = _impl.reach_mask
attr_levels = _impl.attr_levels
