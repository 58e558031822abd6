"""Short-interval norms of zeta and L-functions on the line Re(s) = 1."""

from ._zetaline import *  # noqa: F401,F403
from ._zetaline import __doc__ as _native_doc  # noqa: F401

__version__ = "0.1.0"
