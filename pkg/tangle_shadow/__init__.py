"""
Tangle Shadow Bracket

Exact bracket polynomials of 2-tangle shadows, their closures, and the
catalog of tangle classes with up to four crossings.
"""

__version__ = "1.0.0"
__author__ = "Tangle Shadow Bracket contributors"

from .exceptions import (
    TangleShadowException,
    TangleSyntaxError,
    InvalidTwistError,
    UnknownKnotError,
    BudgetExceededError,
    NotDivisibleError,
    InvalidPairError,
    ConfigurationError,
)
from .models import BracketPair, ClosureKind
from .poly import Polynomial, from_string
from .tangle import bracket_pair, evaluate, parse
from .closures import close, repeat_closure, repeat_pair
from .fraction import classify, fraction, skeleton
from .workbench import TangleWorkbench

__all__ = [
    'TangleWorkbench',
    'Polynomial',
    'from_string',
    'BracketPair',
    'ClosureKind',
    'parse',
    'evaluate',
    'bracket_pair',
    'close',
    'repeat_pair',
    'repeat_closure',
    'fraction',
    'skeleton',
    'classify',
    'TangleShadowException',
    'TangleSyntaxError',
    'InvalidTwistError',
    'UnknownKnotError',
    'BudgetExceededError',
    'NotDivisibleError',
    'InvalidPairError',
    'ConfigurationError',
]
