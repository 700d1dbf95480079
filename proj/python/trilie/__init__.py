"""Exact verification and construction of structures on 3-Lie algebras.

All coefficients cross the boundary as exact strings ("p/q" for rationals,
"a+bi/c" for gaussian rationals); nothing is ever rounded.
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
