"""Exception hierarchy shared by every module of the package."""


class BrauerError(Exception):
    """Base class for all domain errors raised by brauercfg."""


class UnknownIdError(BrauerError, KeyError):
    """A vertex, polygon or group element id does not exist."""

    def __str__(self):
        return Exception.__str__(self)


class InvalidConfigurationError(BrauerError, ValueError):
    """A configuration fails C1-C3 or its orientation is inconsistent."""

    def __init__(self, report):
        self.report = report
        super().__init__("invalid Brauer configuration: " + report.summary())


class PreconditionError(BrauerError, ValueError):
    """An operation was called outside of its documented domain."""


class GroupAxiomError(BrauerError, ValueError):
    """A Cayley table does not describe a group."""


class BoundExceededError(BrauerError, ValueError):
    """A group is larger than the configured enumeration bound."""


class InconsistencyError(BrauerError, RuntimeError):
    """Two independent evaluations of the same quantity disagree.

    This can only be caused by a bug in this package.
    """
