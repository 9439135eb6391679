"""Distance Ramsey number toolkit.

Thin wrapper over the compiled ``_core`` extension; see ``help(ramsey_forge._core)``.
"""

from ._core import *  # noqa: F401,F403
from ._core import DomainError, FormatError, __doc__  # noqa: F401

__version__ = "0.1.0"
