"""Exact partition-algebra computations, backed by the C++ core."""

from ._partalg import *  # noqa: F401,F403
from ._partalg import __doc__  # noqa: F401
