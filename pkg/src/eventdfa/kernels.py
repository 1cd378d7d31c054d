"""Backend selection for the table kernels.

The compiled extension is used when it imports; setting ``EVENTDFA_PURE=1``
forces the pure-Python path.  ``BACKEND`` names the one in use.
"""
import os

from . import _pykernels

if os.environ.get("EVENTDFA_PURE"):
    _impl = _pykernels
    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl
        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels
        BACKEND = "python"

walk = _impl.walk
trajectory = _impl.trajectory
walk_many = _impl.walk_many
live_states = _impl.live_states
