"""Exception hierarchy shared by every module."""


class ClarForceError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(ClarForceError):
    """Input could not be turned into a lattice graph."""


class EmptyInput(ParseError):
    pass


class DisconnectedCells(ParseError):
    pass


class CutVertex(ParseError):
    pass


class DuplicateCell(ParseError):
    pass


class Hole(ParseError):
    """The cell region encloses an interior region that is not a cell."""


class NoPerfectMatching(ClarForceError):
    pass


class NotPerfect(ClarForceError):
    """A matching passed where a perfect matching is required is not perfect."""


class Infeasible(ClarForceError):
    pass


class BudgetExceeded(ClarForceError):
    pass


class CoverInvalid(ClarForceError):
    pass


class CoverNotMaximum(ClarForceError):
    pass


class InvariantViolation(ClarForceError):
    """A consistency check between independent computations failed."""
