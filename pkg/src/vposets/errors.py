"""Exception types shared across the package."""

from __future__ import annotations


class ParseError(ValueError):
    """Raised when a tree or poset text description is malformed."""


class OracleBoundError(ValueError):
    """Raised when an input exceeds the size bound of a brute-force routine."""


class NotVPosetError(ValueError):
    """Raised when an operation defined only on V-posets gets something else.

    The offending induced pattern is attached as ``pattern``.
    """

    def __init__(self, pattern):
        super().__init__(
            f"not a V-poset: induced {pattern.kind} pattern on elements "
            f"{pattern.u}, {pattern.v}, {pattern.w}, {pattern.x}"
        )
        self.pattern = pattern
