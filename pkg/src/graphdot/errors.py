"""Exception types shared by the library and the CLI.

Each class carries the CLI exit code it maps to.
"""

from __future__ import annotations


class GraphDotError(Exception):
    exit_code = 1
    kind = "error"


class GraphParseError(GraphDotError, ValueError):
    """Malformed graph6 or edge-list input.

    ``offset`` is the 0-based byte (or line) position of the first bad token,
    when one can be identified.
    """

    exit_code = 2
    kind = "parse"

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (at offset {offset})"
        super().__init__(message)
        self.offset = offset


class GuardExceeded(GraphDotError):
    """An input is larger than the exhaustive/search bound of an operation."""

    exit_code = 3
    kind = "guard"

    def __init__(self, what: str, size: int, bound: int, hint: str = ""):
        message = f"{what}: {size} exceeds bound {bound}"
        if hint:
            message += f"; {hint}"
        super().__init__(message)
        self.size = size
        self.bound = bound


class OrderMismatch(GraphDotError, ValueError):
    exit_code = 4
    kind = "order"
