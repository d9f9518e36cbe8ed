"""Kernel backend selection.

The hot interval kernels (convolution and matrix products) exist twice:
a Cython extension (``_core``) and a numpy fallback (``_pure``) with the
identical rounding sequence.  The compiled one is preferred at import;
set ``RIGNLS_PURE=1`` to force the fallback.  ``BACKEND`` names the one
in use.  Results are bit-identical across backends.
"""

from __future__ import annotations

import os

if os.environ.get("RIGNLS_PURE", "").strip() not in ("", "0"):
    from ._pure import BACKEND, iconv, matmul_ii, matmul_pi
else:
    try:
        from ._core import BACKEND, iconv, matmul_ii, matmul_pi
    except ImportError:
        from ._pure import BACKEND, iconv, matmul_ii, matmul_pi

__all__ = ["BACKEND", "iconv", "matmul_pi", "matmul_ii"]
