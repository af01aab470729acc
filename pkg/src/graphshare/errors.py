"""Exception hierarchy shared by every module.

Anything deriving from :class:`SharingError` is a domain error: the CLI maps it
to exit code 1. Programming mistakes (bad types etc.) are left as the usual
built-in exceptions.
"""


class SharingError(Exception):
    """Base class for all domain errors."""


class ContractError(SharingError, ValueError):
    """An operation was called with arguments violating its precondition."""


class FormatError(SharingError):
    """A share or graph file is malformed."""

    def __init__(self, message, line=None, source=None):
        self.message = message
        self.line = line
        self.source = source
        where = source or "<input>"
        if line is not None:
            where = f"{where}:{line}"
        super().__init__(f"{where}: {message}")


class BelowThresholdError(SharingError):
    """Fewer shares than the threshold were supplied."""


class BelowThresholdWarning(UserWarning):
    """Attached to a forced, below-threshold reconstruction."""


class ReconstructionError(SharingError):
    """Shares are inconsistent with each other (mismatch, corruption, tampering)."""


class InsecureParamsError(ContractError):
    """Padding below the security floor without an explicit override."""


class PlantingError(SharingError):
    """No node pick can host the complete subgraph without touching the secret."""


class ExhaustionError(SharingError):
    """A random domain ran out of fresh values."""


class SingularSystemError(SharingError):
    """Two Shamir shares with the same x coordinate."""


class EnumerationCapError(ContractError):
    """Brute-force enumeration was asked for more nodes than the cap allows."""


class NotAPasswordGraph(ContractError):
    """An 11-node graph whose edge mask does not encode a password rank."""
