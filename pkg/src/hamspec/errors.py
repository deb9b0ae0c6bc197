"""Exception hierarchy.

Every error carries a short ``code`` used by the CLI's JSON error object.
"""


class HamspecError(Exception):
    code = "Error"


# graph construction
class InvalidEdge(HamspecError):
    code = "InvalidEdge"


class DuplicateEdge(HamspecError):
    code = "DuplicateEdge"


class VertexOutOfRange(HamspecError):
    code = "VertexOutOfRange"


class InvalidSize(HamspecError):
    code = "InvalidSize"


class EmptyGraph(HamspecError):
    code = "EmptyGraph"


# spectra and conditions
class IsolatedVertex(HamspecError):
    code = "IsolatedVertex"


class NonSymmetric(HamspecError):
    code = "NonSymmetric"


class ConvergenceFailure(HamspecError):
    code = "ConvergenceFailure"


class WrongOperator(HamspecError):
    code = "WrongOperator"


class InvalidConstant(HamspecError):
    code = "InvalidConstant"


class NotRegular(HamspecError):
    code = "NotRegular"


# rotations and cycles
class InvalidPivot(HamspecError):
    code = "InvalidPivot"


class BrokenEdgeNotOriginal(HamspecError):
    code = "BrokenEdgeNotOriginal"


class BudgetExceeded(HamspecError):
    code = "BudgetExceeded"

    def __init__(self, message, frontier=None):
        super().__init__(message)
        self.frontier = frontier


class TooLarge(HamspecError):
    code = "TooLarge"


class DomainError(HamspecError):
    code = "DomainError"


# generators
class ParityError(HamspecError):
    code = "ParityError"


class GenerationFailure(HamspecError):
    code = "GenerationFailure"


# file format
class ParseError(HamspecError):
    code = "ParseError"

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class InvariantViolation(HamspecError):
    code = "InvariantViolation"

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
