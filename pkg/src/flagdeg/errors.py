"""Exception types and the desk-scale guard switch."""

from __future__ import annotations

import contextlib


class FlagdegError(Exception):
    pass


class GuardExceeded(FlagdegError, ValueError):
    """Input is larger than the configured desk-scale guard."""


class NotRealizable(FlagdegError, ValueError):
    """A rank collection that corresponds to no representation."""


class Inconclusive(FlagdegError, RuntimeError):
    """Randomized and fallback monomorphism tests disagree."""


class InvariantViolation(FlagdegError, AssertionError):
    """A mathematical statement the library relies on failed on a concrete input."""


_guards_enabled = True


def guard(condition: bool, message: str) -> None:
    if _guards_enabled and not condition:
        raise GuardExceeded(message)


@contextlib.contextmanager
def guards_disabled():
    global _guards_enabled
    old = _guards_enabled
    _guards_enabled = False
    try:
        yield
    finally:
        _guards_enabled = old


def set_guards(enabled: bool) -> None:
    global _guards_enabled
    _guards_enabled = enabled
