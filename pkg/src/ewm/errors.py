"""Exception hierarchy shared by the whole package.

Every failure mode named in the module contracts gets its own class so that
callers (and the CLI exit-code mapping) can dispatch on type rather than on
message strings.
"""

__all__ = [
    "EwmError",
    "InvalidType",
    "NegativeRootCoordinate",
    "MissingOmegaBar",
    "SupportOutsidePiL",
    "SupportClash",
    "AlphaNotInLambda",
    "NoExpression",
    "NoLift",
    "Inconsistent",
    "UniquenessViolated",
    "GeneratorsOutsideAmbient",
    "PiMapError",
    "BijectionFailure",
    "SchemaError",
    "DataInconsistency",
]


class EwmError(Exception):
    """Base class for all errors raised by this package."""


class InvalidType(EwmError):
    """A Cartan type outside the allowed family/rank ranges."""


class NegativeRootCoordinate(EwmError):
    """supp() called on a vector with mixed-sign coordinates."""


class MissingOmegaBar(EwmError):
    """A restriction of a fundamental weight is required but was not supplied."""


class SupportOutsidePiL(EwmError):
    """A Levi-side weight has support outside the Levi simple roots."""


class SupportClash(EwmError):
    """A second-family generator's support meets the complement of the Levi."""


class AlphaNotInLambda(EwmError):
    """A simple root is not an element of the computed weight lattice."""


class NoExpression(EwmError):
    """iota(alpha) has no expression in the given module weights (bad input)."""


class NoLift(EwmError):
    """A module weight lies outside the image of the restriction map."""


class Inconsistent(EwmError):
    """The third-family linear system has no integer solution."""


class UniquenessViolated(EwmError):
    """A unique solution was promised but a positive-dimensional family exists."""


class GeneratorsOutsideAmbient(EwmError):
    """ideal_closure() generators do not lie in the span of the ambient basis."""


class PiMapError(EwmError):
    """The distinguished-simple-root map is undefined or ambiguous for a root."""


class BijectionFailure(EwmError):
    """The restricted map pi: F(beta) -> Supp(beta) fails to be bijective."""


class SchemaError(EwmError):
    """Input document fails schema validation; carries a JSON-pointer path."""

    def __init__(self, message: str, pointer: str = ""):
        super().__init__(message)
        self.pointer = pointer


class DataInconsistency(EwmError):
    """Input assertions contradict a computed necessary condition."""
