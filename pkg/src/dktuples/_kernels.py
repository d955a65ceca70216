"""Kernel backend selection.

The compiled core is used when it imports; ``DKN_PURE_PYTHON=1`` forces the
numpy fallback.
"""
import os

from . import _pykernels

BACKENDS = {"python": _pykernels}

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None
else:
    BACKENDS["cython"] = _ckernels

if _ckernels is not None and os.environ.get("DKN_PURE_PYTHON", "") not in ("1", "true"):
    BACKEND = "cython"
    _impl = _ckernels
else:
    BACKEND = "python"
    _impl = _pykernels

sieve_segment = _impl.sieve_segment
power_edges = _impl.power_edges
char_exponent_counts = _impl.char_exponent_counts

# a*b + n must stay exact in a double for the kernel root test
EXACT_LIMIT = 1 << 53
