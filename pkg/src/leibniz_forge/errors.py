"""Exception hierarchy. The CLI maps these onto exit codes."""

from __future__ import annotations


class LeibnizForgeError(Exception):
    """Base class for every error raised by this package."""


class ParseError(LeibnizForgeError, ValueError):
    """Malformed coefficient expression or structure file."""

    def __init__(self, message: str, text: str | None = None, position: int | None = None):
        self.text = text
        self.position = position
        if position is not None and text is not None:
            message = f"{message} at position {position}: {text!r}"
        super().__init__(message)


class ShapeError(LeibnizForgeError, ValueError):
    """Tensor order, dimension or ring mismatch."""


class PreconditionError(LeibnizForgeError, ValueError):
    """An operation was called on data violating its mathematical precondition."""


class InconsistencyError(LeibnizForgeError):
    """A theorem-guaranteed implication failed. Always a bug (or a printed erratum)."""


class UnknownEntryError(LeibnizForgeError, KeyError):
    """No catalog entry has the requested id."""

    def __str__(self):
        return str(self.args[0]) if self.args else "unknown entry"
