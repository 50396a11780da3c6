"""Exception hierarchy shared by every module."""


class RootFinderError(Exception):
    """Base class for all package errors."""


class MalformedLiteral(RootFinderError, ValueError):
    pass


class UnknownProblem(RootFinderError, KeyError):
    pass


class UnknownMethod(RootFinderError, KeyError):
    pass


class NoConvergence(RootFinderError):
    pass


class DegenerateNodes(RootFinderError, ZeroDivisionError):
    """Two interpolation or divided-difference nodes coincide."""


class WeightSingular(RootFinderError, ZeroDivisionError):
    """A rational weight function hit a vanishing denominator."""


class InsufficientTrace(RootFinderError):
    pass


class ZeroError(RootFinderError):
    """An iterate hit the root exactly, so a log-ratio is undefined."""


class InvalidSpec(RootFinderError, ValueError):
    """A benchmark run specification was rejected before computing."""
