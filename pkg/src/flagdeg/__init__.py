"""Exact computations on linear degenerations of type A flag varieties."""

from .errors import FlagdegError, GuardExceeded, Inconclusive, InvariantViolation, NotRealizable
from .quiver import MatrixRep, QuiverContext, RankCollection, RepClass

__version__ = "0.1.0"

__all__ = [
    "FlagdegError",
    "GuardExceeded",
    "Inconclusive",
    "InvariantViolation",
    "MatrixRep",
    "NotRealizable",
    "QuiverContext",
    "RankCollection",
    "RepClass",
]
