"""Linear abelian extensions of finite loops."""

from ._linext import *  # noqa: F401,F403
from ._linext import __doc__  # noqa: F401

__version__ = "0.1.0"
