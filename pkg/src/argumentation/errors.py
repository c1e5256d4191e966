"""Exception types shared across the engine.

Resource-bound overruns are deliberately distinct exception classes so a
caller can never mistake "gave up" for a false verdict.
"""

from __future__ import annotations


class ResourceBoundError(Exception):
    """A configured enumeration or size bound was exceeded."""


class AtomBudgetError(ResourceBoundError):
    """An entailment query mentioned more distinct atoms than allowed."""

    def __init__(self, count: int, budget: int):
        super().__init__(f"entailment query uses {count} atoms, budget is {budget}")
        self.count = count
        self.budget = budget


class EnumerationBoundError(ResourceBoundError):
    """A subset/candidate enumeration would exceed its configured bound."""


class ParseError(Exception):
    """Syntax error with source position.

    Positions are 1-based; ``path`` is ``<string>`` for text not read
    from a file.
    """

    def __init__(self, message: str, line: int = 1, column: int = 1, path: str = "<string>"):
        super().__init__(f"{path}:{line}:{column}: {message}")
        self.message = message
        self.line = line
        self.column = column
        self.path = path

    def at(self, line: int, path: str | None = None) -> "ParseError":
        """Copy of this error re-anchored at an enclosing location."""
        return ParseError(self.message, line, self.column, path or self.path)


class GroundingError(Exception):
    """A schematic formula or rule could not be instantiated."""
