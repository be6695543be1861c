"""Exception types shared across the package.

The engine distinguishes "certified no" from "could not certify": searches
that fail raise the *Undecided / NotApplicable errors below rather than
claiming a definite negative.
"""


class SteincalcError(Exception):
    """Base class for structured errors raised by this package."""


class RankMismatchError(SteincalcError):
    """Vectors or classes from surfaces of different homology rank were combined."""


class CommutationUndecidedError(SteincalcError):
    """A reordering needed a disjointness certificate that is not available.

    Distinct from "the curves intersect": the engine only ever certifies
    disjointness, never intersection.
    """


class NotApplicableError(SteincalcError):
    """No certified embedding was found for a substitution.

    Weaker than "definitely absent": the search is sound but incomplete.
    """


class UnsupportedInputError(SteincalcError):
    """Input lacks data an exact computation needs (hole sets, rotations, ...)."""


class BaselineUnavailableError(SteincalcError):
    """A relative signature was requested without an asserted baseline."""


class IncomparableSigmaError(SteincalcError):
    """Two signature values live in different modes or over different baselines."""


class DocumentError(SteincalcError):
    """An input document was rejected. Carries the offending location."""

    def __init__(self, location: str, message: str):
        self.location = location
        self.message = message
        super().__init__(f"{location}: {message}")


class ConsistencyAlarmError(SteincalcError):
    """An internal cross-check failed; results cannot be trusted."""
