"""Exception types shared across the package."""

from __future__ import annotations


class SpecError(ValueError):
    """A group spec string is malformed or names an unsupported group."""

    def __init__(self, message: str, position: int | None = None) -> None:
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class InternalCheckError(RuntimeError):
    """A structural self-check failed.

    Raised when two routes that must agree (a closed form and the recursive
    decomposition, a partition and its quotient, a reconstructed order and a
    computed one) disagree. This always means a bug or a falsified structural
    assumption, never bad user input.
    """
