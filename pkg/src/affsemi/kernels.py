"""Kernel backend selection.

The compiled extension ``_ckernels`` is used when it was built; setting the
environment variable ``AFFSEMI_PURE_PYTHON=1`` forces the pure-Python
fallback. Both backends implement the same functions with identical results.
"""

import os

from . import _pykernels

if os.environ.get("AFFSEMI_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pykernels
    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels
        BACKEND = "python"

find_divisor = _impl.find_divisor
rank_mod_p = _impl.rank_mod_p
rank_q = _impl.rank_q
koszul_faces = _impl.koszul_faces
