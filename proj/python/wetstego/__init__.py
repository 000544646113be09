"""Syndrome-based wet-paper steganography toolkit."""

try:
    from ._wetstego import *  # noqa: F401,F403
    from ._wetstego import __doc__  # noqa: F401
except ImportError:  # running against a build tree with _wetstego on sys.path
    from _wetstego import *  # noqa: F401,F403
    from _wetstego import __doc__  # noqa: F401
