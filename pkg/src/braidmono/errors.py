"""Exception hierarchy shared by every module.

The CLI maps these onto exit codes: validation problems exit 1, oracle
mismatches exit 2 and resource caps exit 3.
"""


class BraidMonoError(Exception):
    """Base class for all toolkit errors."""


class ValidationError(BraidMonoError, ValueError):
    """A precondition on the input was violated."""


class StrandMismatchError(ValidationError):
    """Two objects that must share a strand count (or rank) do not."""


class OracleMismatchError(BraidMonoError):
    """An exact equality check that was required to hold failed."""


class ProductMismatchError(OracleMismatchError):
    """A proposed decomposition does not multiply to the entry it replaces."""


class ResourceLimitError(BraidMonoError, RuntimeError):
    """An intermediate object exceeded a configured size cap."""
