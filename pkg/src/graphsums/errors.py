"""Exception types raised across the package."""


class GraphSumsError(Exception):
    """Base class for every error raised by graphsums."""


class MixedRing(GraphSumsError, TypeError):
    """A rational number was combined with a polynomial."""


class UnboundVariable(GraphSumsError, KeyError):
    def __init__(self, name):
        super().__init__(name)
        self.name = name

    def __str__(self):
        return f"no value assigned to variable {self.name!r}"


class NonIntegerResult(GraphSumsError, ArithmeticError):
    """An exact division that should have been integral was not."""


class TooLarge(GraphSumsError, ValueError):
    """Input exceeds the configured enumeration cap."""


class Disconnected(GraphSumsError, ValueError):
    pass


class BadPairSet(GraphSumsError, ValueError):
    pass


class BadShape(GraphSumsError, ValueError):
    pass


class IsolatedVertex(GraphSumsError, ValueError):
    pass


class NotIrreducible(GraphSumsError, ValueError):
    pass


class IdentityViolation(GraphSumsError, AssertionError):
    """Two computations that must agree did not."""


class ParseError(GraphSumsError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DuplicateEdge(ParseError):
    pass


class LoopEdge(ParseError):
    pass
