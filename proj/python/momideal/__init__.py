"""Exact moment-matrix relations, Groebner bases and atom recovery for
finitely atomic planar measures.

All scalars cross the boundary as :class:`fractions.Fraction`; nothing is
ever rounded.
"""

from momideal._core import *  # noqa: F401,F403
from momideal._core import __doc__  # noqa: F401

__version__ = "0.1.0"
