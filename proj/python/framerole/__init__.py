"""Semantic role labeling over a Framester-style lexicon.

The package turns dependency-parsed sentences plus frame annotations into
role-oriented knowledge graphs, and scores or merges predicate-argument
outputs. Everything is implemented in the C++ extension module; this package
re-exports its public surface.
"""

from framerole._core import *  # noqa: F401,F403
from framerole._core import __doc__ as _core_doc  # noqa: F401

__version__ = "0.1.0"
