"""
Sign labels for the two square-wave generators phi+ and phi-.
"""

from enum import Enum


class Sign(int, Enum):
    """A generator label sigma; its integer value is the sign it stands for."""
    PLUS = 1
    MINUS = -1

    @property
    def symbol(self) -> str:
        return "+" if self is Sign.PLUS else "-"

    def flip(self) -> "Sign":
        """sigma-bar."""
        return Sign.MINUS if self is Sign.PLUS else Sign.PLUS

    @classmethod
    def parse(cls, value) -> "Sign":
        if isinstance(value, Sign):
            return value
        if value in ("+", "plus", 1, "1", "+1"):
            return cls.PLUS
        if value in ("-", "minus", -1, "-1"):
            return cls.MINUS
        raise ValueError(f"not a sign: {value!r}")

    def __str__(self) -> str:
        return self.symbol


BOTH_SIGNS = (Sign.PLUS, Sign.MINUS)
