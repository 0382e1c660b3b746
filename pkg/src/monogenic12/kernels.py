"""Backend selection for the GF(p) polynomial kernels.

The compiled extension is used when it imports and the modulus fits in 31
bits; everything else goes through the pure-Python implementation.  Set
``MONOGENIC12_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _kernels_py as _py

_NAMES = ("pmul", "pdivmod", "prem", "pmulmod", "ppowmod", "pmonic", "pgcd", "psub", "ddf")
_FAST_LIMIT = 1 << 31

_ext = None
if not os.environ.get("MONOGENIC12_PURE_PYTHON"):
    try:
        from . import _kernels as _ext  # type: ignore[no-redef]
    except ImportError:
        _ext = None

BACKEND = "cython" if _ext is not None else "python"


def _dispatch(name):
    slow = getattr(_py, name)
    if _ext is None:
        return slow
    fast = getattr(_ext, name)

    def call(*args):
        # modulus is always the last argument
        return fast(*args) if args[-1] < _FAST_LIMIT else slow(*args)

    call.__name__ = name
    call.__doc__ = slow.__doc__
    return call


pmul = _dispatch("pmul")
pdivmod = _dispatch("pdivmod")
prem = _dispatch("prem")
pmulmod = _dispatch("pmulmod")
ppowmod = _dispatch("ppowmod")
pmonic = _dispatch("pmonic")
pgcd = _dispatch("pgcd")
psub = _dispatch("psub")
ddf = _dispatch("ddf")
trim = _py.trim

__all__ = ["BACKEND", "trim", *_NAMES]
