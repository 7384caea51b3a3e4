"""Chip-firing, semiorder arrangements and Pak-Stanley labels.

Thin wrapper over the C++ core. Orientations travel as canonical strings
(one of ``0 + -`` per edge in edge-index order), semiorders as lists of
strict pairs, and exact rationals as ``p/q`` strings (see :func:`fraction`).
"""

from fractions import Fraction

from ._chipfire import *  # noqa: F401,F403
from ._chipfire import Graph  # noqa: F401


def fraction(s):
    """Parse a rational string emitted by the core into a Fraction."""
    return Fraction(s)
