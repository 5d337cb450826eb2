"""Hot kernels, compiled when available.

The Cython extension ``_core`` is imported if it was built; otherwise the
numpy/pure-Python ``_fallback`` is used.  Set ``SPECTOP_PURE=1`` to force
the fallback.  ``BACKEND`` names the active implementation.
"""

import os

from . import _fallback as fallback

compiled = None
if os.environ.get("SPECTOP_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _core as compiled
    except ImportError:
        compiled = None

_impl = compiled if compiled is not None else fallback
BACKEND = "compiled" if compiled is not None else "fallback"

is_prime_u64 = _impl.is_prime_u64
pollard_brent = _impl.pollard_brent
punctual_search = _impl.punctual_search
hom_check = _impl.hom_check
vnr_sweep = _impl.vnr_sweep

__all__ = [
    "BACKEND", "compiled", "fallback", "hom_check", "is_prime_u64",
    "pollard_brent", "punctual_search", "vnr_sweep",
]
