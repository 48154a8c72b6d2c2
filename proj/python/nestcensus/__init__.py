"""Nest graph family, permutation groups and the edge-transitive census."""

from ._nestcensus import *  # noqa: F401,F403
from ._nestcensus import __doc__  # noqa: F401
