"""Exception types raised by the zariski_lab library and mapped to CLI exit codes."""

from typing import Optional


class ZariskiLabError(Exception):
    """Base class for all library errors"""


class OrderOfZero(ZariskiLabError, ValueError):
    """The zero polynomial has no order"""


class ShapeError(ZariskiLabError, ValueError):
    """Matrix dimensions do not fit the requested operation"""


class EmptyIdeal(ZariskiLabError, ValueError):
    """An ideal was given no nonzero generators"""


class NotMPrimary(ZariskiLabError, ValueError):
    """The ideal does not contain a power of the maximal ideal"""


class NotIntegrallyClosed(ZariskiLabError, ValueError):
    """The ideal differs from its integral closure"""


class UnitIdeal(ZariskiLabError, ValueError):
    """A proper ideal was required but the unit ideal was given"""


class OrderTooSmall(ZariskiLabError, ValueError):
    """The ideal's order is below the requested rank"""


class NotUnimodular(ZariskiLabError, ValueError):
    """A coordinate change matrix has non-unit determinant"""


class RankTooSmall(ZariskiLabError, ValueError):
    """Rank must be at least 2"""


class ParseError(ZariskiLabError, ValueError):
    """Syntax error in an ideal or polynomial expression.

    Attributes:
        column: 1-based column of the offending token
        token: The offending token (empty at end of input)
    """

    def __init__(self, message: str, column: int, token: Optional[str] = None):
        self.column = column
        self.token = token or ""
        super().__init__(f"{message} at column {column}" + (f" near '{self.token}'" if self.token else ""))


class VerificationError(ZariskiLabError, RuntimeError):
    """A certified identity failed to hold; always indicates a bug"""


# exit codes used by the CLI
EXIT_OK = 0
EXIT_UNEXPECTED = 1
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_VERIFICATION = 4


def exit_code_for(error: BaseException) -> int:
    """Map an exception to the CLI exit code"""
    if isinstance(error, ParseError):
        return EXIT_PARSE
    if isinstance(error, VerificationError):
        return EXIT_VERIFICATION
    if isinstance(error, ZariskiLabError):
        return EXIT_PRECONDITION
    return EXIT_UNEXPECTED
