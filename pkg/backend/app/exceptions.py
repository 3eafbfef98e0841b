"""Error hierarchy for the quaternionic engine and the CLI.

Every error carries the CLI exit code it maps to, so the top-level handler in
``app.main`` can translate exceptions the same way for every verb.
"""
from typing import Any, Dict, List, Optional

# Exit code contract of the command-line front end
EXIT_OK = 0
EXIT_HYPOTHESIS_VIOLATED = 1
EXIT_CONCLUSION_VIOLATED = 2
EXIT_NUMERICAL_FAILURE = 3
EXIT_USAGE = 64
EXIT_PARSE = 65
EXIT_INTERNAL = 70


class QBernError(Exception):
    """Base class for all library errors"""

    exit_code: int = EXIT_NUMERICAL_FAILURE

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}

    def to_dict(self) -> Dict[str, Any]:
        return {
            "error": type(self).__name__,
            "message": self.message,
            "details": self.details or None,
        }


class ZeroDivisor(QBernError, ZeroDivisionError):
    """Inverse of a (numerically) zero quaternion was requested"""


class RealAxisInput(QBernError, ValueError):
    """The input has no imaginary part; callers must take the real-point branch"""

    exit_code = EXIT_USAGE


class InvalidUnitImaginary(QBernError, ValueError):
    """A quaternion used as imaginary unit is not purely imaginary of modulus 1"""

    exit_code = EXIT_USAGE


class NonFiniteQuaternion(QBernError, ValueError):
    """A component is NaN or infinite"""


class ZeroPolynomial(QBernError, ValueError):
    """Operation undefined for the zero polynomial"""

    exit_code = EXIT_USAGE


class ConstantPolynomial(QBernError, ValueError):
    """Operation undefined for constant polynomials"""

    exit_code = EXIT_USAGE


class DomainError(QBernError, ValueError):
    """Real parameter outside its admissible range"""

    exit_code = EXIT_USAGE


class OffSphere(QBernError, ValueError):
    """Point expected on the unit sphere S^3"""

    exit_code = EXIT_USAGE


class NumericalNonconvergence(QBernError, ArithmeticError):
    """Iterative method failed to converge"""

    def __init__(self, message: str, residuals: Optional[List[float]] = None, sweeps: int = 0):
        super().__init__(message, {"residuals": residuals or [], "sweeps": sweeps})
        self.residuals = residuals or []
        self.sweeps = sweeps


class PolynomialParseError(QBernError, ValueError):
    """Malformed polynomial or quaternion input"""

    exit_code = EXIT_PARSE


__all__ = [
    "EXIT_OK",
    "EXIT_HYPOTHESIS_VIOLATED",
    "EXIT_CONCLUSION_VIOLATED",
    "EXIT_NUMERICAL_FAILURE",
    "EXIT_USAGE",
    "EXIT_PARSE",
    "EXIT_INTERNAL",
    "QBernError",
    "ZeroDivisor",
    "RealAxisInput",
    "InvalidUnitImaginary",
    "NonFiniteQuaternion",
    "ZeroPolynomial",
    "ConstantPolynomial",
    "DomainError",
    "OffSphere",
    "NumericalNonconvergence",
    "PolynomialParseError",
]
