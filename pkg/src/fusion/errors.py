"""Exception hierarchy shared by the library and the CLI.

The CLI maps :class:`HypothesisViolation` to exit code 2 and
:class:`InvariantViolation` to exit code 1.
"""


class FusionError(Exception):
    """Base class for every error raised by the fusion toolkit."""


class HypothesisViolation(FusionError, ValueError):
    """Input outside the admissible domain (nondominant weight, G2 gate, Schur hypothesis)."""


class UnboundedSystemError(FusionError, ValueError):
    """An inequality system leaves some coordinate without a finite upper bound."""

    def __init__(self, system: str, coordinate: str):
        self.system = system
        self.coordinate = coordinate
        super().__init__(f"system {system!r}: coordinate {coordinate!r} has no finite upper bound")


class InvariantViolation(FusionError, AssertionError):
    """A computed quantity broke an identity that must hold exactly."""
