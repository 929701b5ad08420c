"""Backend selection for the integer kernels.

The compiled module is used when it imports; set ``AXIAL_PURE_PYTHON=1`` to
force the fallback for a whole process.
"""

import os

from axial import _pykernels

if os.environ.get("AXIAL_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pykernels
else:
    try:
        from axial import _ckernels as _impl
    except ImportError:
        _impl = _pykernels

BACKEND = "cython" if _impl is not _pykernels else "python"

contract = _impl.contract
gauss_jordan = _impl.gauss_jordan
matmul = _impl.matmul
