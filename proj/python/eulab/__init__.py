"""Eisenstein integer arithmetic, prime-support bounds and searches."""

from ._core import *  # noqa: F401,F403
from ._core import EInt, __version__


def eints(pairs):
    """Convert an iterable of (a, b) tuples or ints to a list of EInt."""
    return [EInt(*p) if isinstance(p, tuple) else EInt(p) for p in pairs]
