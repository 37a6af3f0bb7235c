"""Chebyshev polynomial operators for spin systems (bindings to the C++ core)."""

from ._spinchev import *  # noqa: F401,F403
from ._spinchev import __doc__  # noqa: F401

__version__ = "0.1.0"
