"""Tomography from the time evolution of a single probe."""

from ._evotomo import *  # noqa: F401,F403
from ._evotomo import __doc__  # noqa: F401
