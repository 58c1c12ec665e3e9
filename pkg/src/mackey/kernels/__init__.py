"""Kernel backend selection.

The compiled Cython kernels are used when present; MACKEY_PURE=1 forces
the numpy reference implementation.  Both expose `closure` and
`orbit_labels` with identical contracts (see pyref).
"""

import os

from . import pyref

if os.environ.get("MACKEY_PURE"):
    _impl = pyref
else:
    try:
        from . import _ckernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = pyref

closure = _impl.closure
orbit_labels = _impl.orbit_labels

BACKEND = "compiled" if _impl is not pyref else "pyref"
