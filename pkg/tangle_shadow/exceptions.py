"""
Custom exceptions for the tangle shadow toolkit
"""


class TangleShadowException(Exception):
    """Base exception for the tangle shadow toolkit"""
    def __init__(self, message: str, details: dict = None):
        super().__init__(message)
        self.details = details or {}


class NotDivisibleError(TangleShadowException):
    """Raised when an exact polynomial division leaves a remainder"""
    pass


class BothZeroError(TangleShadowException):
    """Raised when gcd is asked for two zero polynomials"""
    pass


class InvalidPairError(TangleShadowException):
    """Raised when a bracket pair has both components zero"""
    pass


class TangleSyntaxError(TangleShadowException):
    """Raised when a tangle expression does not parse"""
    def __init__(self, message: str, position: int, text: str = ""):
        super().__init__(f"{message} at position {position}", {"position": position, "text": text})
        self.position = position
        self.text = text


class InvalidTwistError(TangleShadowException, ValueError):
    """Raised for a negative twist count such as [-2]"""
    pass


class UnknownKnotError(TangleShadowException):
    """Raised for a knot id outside K1..K6"""
    pass


class BudgetExceededError(TangleShadowException):
    """Raised when a diagram has more smoothing states than the budget allows"""
    def __init__(self, crossings: int, budget: int):
        super().__init__(
            f"Diagram with {crossings} crossings has 2^{crossings} states, budget is {budget}",
            {"crossings": crossings, "budget": budget},
        )
        self.crossings = crossings
        self.budget = budget


class HasEndpointsError(TangleShadowException):
    """Raised when a knot operation receives a tangle diagram"""
    pass


class HasNoEndpointsError(TangleShadowException):
    """Raised when a tangle operation receives a knot diagram"""
    pass


class NonplanarStateError(TangleShadowException):
    """Raised when a smoothing state joins NW to SE"""
    pass


class DiagramFormatError(TangleShadowException):
    """Raised when a diagram file is malformed"""
    pass


class ConfigurationError(TangleShadowException):
    """Raised for invalid configuration values"""
    pass


class EntryNotFoundError(TangleShadowException):
    """Raised for an unknown catalog entry id"""
    pass


class TableNotFoundError(TangleShadowException):
    """Raised for a table number or (entry, kind) with no printed table"""
    pass
