from typing import Optional


class IdealError(ValueError):
    """Base class for every error raised by the ideal services."""


class DimensionError(IdealError):
    """Exponent vectors or ideals live in different numbers of variables."""

    def __init__(self, expected: int, got: int, what: str = "exponent vector"):
        super().__init__(f"{what} has length {got}, expected {expected}")
        self.expected = expected
        self.got = got


class IdealSyntaxError(IdealError):
    """Inline ideal text does not follow the monomial grammar."""

    def __init__(self, message: str, text: str = "", position: Optional[int] = None):
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)
        self.text = text
        self.position = position

    def pointer(self) -> str:
        """Two-line rendering with a caret under the offending character."""
        if self.position is None:
            return self.text
        return f"{self.text}\n{' ' * self.position}^"


class UnknownVariableError(IdealSyntaxError):
    """A monomial names a variable outside the declared variable list."""


class UndefinedOrderError(IdealError):
    """Orders and valuations of the zero ideal are undefined."""
