"""Exception hierarchy.

``ToricError`` subclasses split into input problems (exit code 1 in the CLI)
and internal invariant violations (exit code 2).
"""


class ToricError(Exception):
    """Base class for all package errors."""


class InputError(ToricError):
    """Bad user input: malformed documents, invalid fans, bad arguments."""


class InvariantViolation(ToricError):
    """An internal consistency check failed; indicates a bug, not bad input."""


class CompositionNotZero(InvariantViolation):
    """Two consecutive differentials do not compose to zero."""


class ResolutionFailure(InvariantViolation):
    """The Cech complex of a complete fan does not have point homology."""


class NotStrictlyConvex(InputError):
    """A cone contains a line."""


class NotFacet(InputError):
    """Incidence sign requested for a pair that is not a codimension-one face pair."""


class ConeNotInFan(InputError):
    pass


class ParseError(InputError):
    pass


class ValidationError(InputError):
    """A fan failed validation; ``report`` carries the violations."""

    def __init__(self, report):
        self.report = report
        super().__init__("; ".join(str(v) for v in report.violations) or "invalid fan")


class UnknownBuiltin(InputError):
    pass
