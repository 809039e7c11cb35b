"""Exception hierarchy shared by the qtoric services and CLI."""

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from qtoric.models.reports import ValidationReport


class QtoricError(Exception):
    """Base class for all qtoric errors."""


class ArgumentError(QtoricError, ValueError):
    """Raised when an operation receives an argument outside its domain."""


class InvalidQuasitoricDataError(QtoricError):
    """Raised when quasitoric data fails validation."""

    def __init__(self, report: "ValidationReport"):
        """Initialize the error from a failed validation report.

        Args:
            report: The validation report listing every violated invariant
        """
        self.report = report
        summary = "; ".join(issue.message for issue in report.issues[:3])
        super().__init__(f"Quasitoric data '{report.name}' is invalid: {summary}")


class IntegrityError(QtoricError):
    """Raised when the top-degree cohomology is not free of rank one."""


class NotSurjectiveError(QtoricError):
    """Raised when the characteristic matrix is not surjective over the integers."""


class InputParseError(QtoricError):
    """Raised when an input file cannot be read or does not match the schema."""
