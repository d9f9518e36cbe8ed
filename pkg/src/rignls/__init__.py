"""Validated enclosures for the cubic NLS on [0,1] with Dirichlet conditions.

Subpackages build on each other in layers: interval arithmetic
(``interval``), weighted sequence spaces and decay-estimate tables
(``seqspace``), the problem-agnostic radii-polynomial engine (``radii``),
and the three provers (``boundstate``, ``spectrum``, ``simplicity``) plus
the non-rigorous elliptic-function oracle (``elliptic``).  ``cli`` ties
the pipeline together.
"""

from ._kernels import BACKEND as KERNEL_BACKEND
from .interval import Interval, IntervalMatrix, RectComplexInterval

__version__ = "0.1.0"

__all__ = [
    "Interval",
    "RectComplexInterval",
    "IntervalMatrix",
    "KERNEL_BACKEND",
    "__version__",
]
