"""Exact computation of monitoring edge-geodetic sets and related parameters.

The heavy lifting lives in the C++ extension; this package re-exports it.
"""

from meglab._core import *  # noqa: F401,F403
from meglab._core import __doc__  # noqa: F401

__version__ = "1.0.0"
