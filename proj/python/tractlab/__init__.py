"""Python interface to the tractlab core library."""

from ._tractlab import *  # noqa: F401,F403
from ._tractlab import TractlabError, run_suite, suite_names

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
