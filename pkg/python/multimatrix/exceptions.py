from __future__ import annotations


class MultimatrixError(Exception):
    """Base exception for all multimatrix errors."""


class InputError(MultimatrixError, ValueError):
    """Invalid shape, coordinate, plane or graph structure."""


class ParseError(InputError):
    """Malformed instance text."""

    def __init__(self, line: int, message: str) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message

    def __reduce__(self):
        return type(self), (self.line, self.message)


class FeasibilityError(MultimatrixError):
    """Instance exceeds a configured guard or budget."""

    def __init__(self, what: str, required: int, limit: int) -> None:
        super().__init__(f"{what} requires {required}, limit is {limit}")
        self.what = what
        self.required = required
        self.limit = limit

    def __reduce__(self):
        # worker processes send these back through pickle
        return type(self), (self.what, self.required, self.limit)
