"""Authenticated ADS-B broadcast stack.

Thin re-export of the compiled extension. In an installed wheel the
extension lives inside this package; in a plain CMake build it sits on
PYTHONPATH next to it.
"""

try:
    from ._cabba import *  # noqa: F401,F403
    from ._cabba import __doc__  # noqa: F401
except ImportError:
    from _cabba import *  # noqa: F401,F403
    from _cabba import __doc__  # noqa: F401

__version__ = "0.1.0"
