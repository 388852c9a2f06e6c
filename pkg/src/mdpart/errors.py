"""Exception hierarchy shared by the library and the CLI.

The CLI maps these onto its exit codes: ParseError -> 1, InputError -> 2,
InvariantError -> 3.
"""

from __future__ import annotations


class MdpartError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(MdpartError, ValueError):
    """Malformed textual input (edge lists, budget files)."""

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InputError(MdpartError, ValueError):
    """An argument violates an operation's precondition."""


class StateError(MdpartError, RuntimeError):
    """A move would leave a partition side empty."""


class GenerationError(InputError):
    """A random generator cannot satisfy the requested constraints."""


class EnumerationCapError(InputError):
    """Exhaustive enumeration was requested above the configured vertex cap."""


class InvariantError(MdpartError, AssertionError):
    """A proof-derived invariant failed; this always indicates a bug."""
