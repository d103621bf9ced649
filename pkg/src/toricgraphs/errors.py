"""Exception hierarchy shared by all toricgraphs modules."""


class ToricGraphsError(Exception):
    """Base class for all errors raised by this package."""


# --- graph construction -------------------------------------------------

class LoopEdgeError(ToricGraphsError):
    pass


class DuplicateEdgeError(ToricGraphsError):
    pass


class VertexOutOfRangeError(ToricGraphsError):
    pass


class BadParametersError(ToricGraphsError):
    pass


class GlueElementMissingError(ToricGraphsError):
    pass


class NotAWalkError(ToricGraphsError):
    pass


class OddWalkError(ToricGraphsError):
    pass


class NotBipartiteError(ToricGraphsError):
    pass


# --- budgets ------------------------------------------------------------

class BudgetExceededError(ToricGraphsError):
    """An enumeration hit its configured cap.

    ``partial`` records how many objects had been produced when the cap
    was hit, so callers can report graceful degradation.
    """

    def __init__(self, message: str, partial: int = 0):
        super().__init__(message)
        self.partial = partial


class CycleBudgetExceededError(BudgetExceededError):
    pass


class WalkBudgetExceededError(BudgetExceededError):
    pass


class FiberBudgetExceededError(BudgetExceededError):
    pass


class FanBudgetExceededError(BudgetExceededError):
    pass


# --- binomial algebra ---------------------------------------------------

class DimensionMismatchError(ToricGraphsError):
    pass


class ZeroBinomialError(ToricGraphsError):
    pass


class NotInIdealError(ToricGraphsError):
    pass


class NotReducedError(ToricGraphsError):
    pass


class NotAFacetError(ToricGraphsError):
    pass


# --- parsing ------------------------------------------------------------

class ParseError(ToricGraphsError):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class MalformedGraph6Error(ParseError):
    pass
