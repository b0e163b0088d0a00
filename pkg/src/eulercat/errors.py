"""Exception hierarchy.

Every domain failure is an :class:`EulerCalcError`; the class name doubles as
the error name reported by the command line tool.
"""


class EulerCalcError(Exception):
    """Base class for domain errors."""

    @property
    def name(self) -> str:
        return type(self).__name__


# category-core
class DuplicateObject(EulerCalcError):
    pass


class MissingIdentity(EulerCalcError):
    pass


class NotComposable(EulerCalcError):
    pass


class ShapeMismatch(EulerCalcError):
    pass


class UnknownObject(EulerCalcError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


# euler-characteristic
class NotAcyclic(EulerCalcError):
    pass


class CapExceeded(EulerCalcError):
    pass


# definable functions
class MissingValue(EulerCalcError):
    pass


class NotClassClosed(EulerCalcError):
    pass


class NotDefinable(EulerCalcError):
    pass


# integration
class NotMeasurable(EulerCalcError):
    pass


class NotMeasurableMap(EulerCalcError):
    pass


class SourceTargetMismatch(EulerCalcError):
    pass


class TargetNotPoset(EulerCalcError):
    pass


# sensor networks
class UnknownNode(EulerCalcError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class CycleDetected(EulerCalcError):
    pass


class NotCoverEdge(EulerCalcError):
    """A Hasse edge that is implied by other edges.

    ``reduction`` holds the transitive reduction of the offending edge list.
    """

    def __init__(self, message, reduction=()):
        super().__init__(message)
        self.reduction = list(reduction)


class InvalidPlacement(EulerCalcError):
    pass


class NotMonotone(EulerCalcError):
    pass


class NotMonotoneWarning(UserWarning):
    """Counting function is not monotone; the exact-count guarantee is void."""


# documents
class ParseError(Exception):
    """Malformed input document."""
