"""Exception hierarchy shared by the library and the CLI.

Each family maps to a distinct CLI exit code (see cli.EXIT_CODES).
"""


class Error(Exception):
    """Base class for all errors raised by this package."""


class FormatError(Error):
    """A text artifact (hgt/bgt/certificate/recipe) deviates from its format.

    Messages start with ``line <n>:`` whenever a line number is known.
    """


class ValidationError(Error):
    """A structure value violates its invariants (names the offending part)."""


class PreconditionError(Error):
    """An operation was called with arguments outside its contract."""


class ResourceBudgetError(Error):
    """An exact computation would exceed its configured budget.

    Raised instead of ever returning an approximate or wrong answer.
    """


class VerificationError(Error):
    """A self-check, cross-check, or fail-fast verification did not hold."""
