"""
Exceptions for the Pompeiu toolkit

Library code raises these instead of printing. The command-line front end maps
each class to a process exit code (see ``pompeiu.cli``).
"""

from typing import Any, Optional, Sequence


class PompeiuError(Exception):
    """
    Base class for every error raised by the package.

    Attributes:
        message: Human-readable error description
    """

    exit_code: int = 4

    def __init__(self, message: str):
        self.message = message
        super().__init__(message)


class InvalidInputError(PompeiuError):
    """Raised for malformed parameters, sets, words or group descriptions."""

    exit_code = 2


class UnsupportedGroupError(PompeiuError):
    """
    Raised for groups the decision procedures cannot handle.

    Attributes:
        group: Description of the rejected group (e.g. "Z^2")
    """

    exit_code = 3

    def __init__(self, group: str, reason: str):
        self.group = group
        self.reason = reason
        super().__init__(f"Unsupported group {group}: {reason}")


class BallTooSmallError(InvalidInputError):
    """
    Raised when a ball function is too small for the requested operation.

    Attributes:
        required: Minimum radius needed
        actual: Radius of the ball that was supplied
    """

    def __init__(self, required: int, actual: int, operation: str = "operation"):
        self.required = required
        self.actual = actual
        super().__init__(
            f"{operation} needs a ball of radius >= {required}, got radius {actual}"
        )


class InexactDivisionError(PompeiuError):
    """Raised by exact polynomial division when the remainder is nonzero."""

    exit_code = 4

    def __init__(self, dividend: Any, divisor: Any, remainder: Any):
        self.dividend = dividend
        self.divisor = divisor
        self.remainder = remainder
        super().__init__(
            f"Division of {dividend} by {divisor} is not exact (remainder {remainder})"
        )


class RootFindingError(PompeiuError):
    """
    Raised when root refinement does not reach the requested tolerance.

    Attributes:
        iterations: Number of iterations performed
        residual: Worst relative residual reached
    """

    exit_code = 4

    def __init__(self, iterations: int, residual: float, tol: float):
        self.iterations = iterations
        self.residual = residual
        self.tol = tol
        super().__init__(
            f"Root refinement did not converge after {iterations} iterations "
            f"(residual {residual:.3e} > tol {tol:.1e})"
        )


class NotACommonRootError(InvalidInputError):
    """
    Raised when a proposed witness point is not a root of every transform.

    Attributes:
        z: The rejected point
        residuals: Value of each transform at z
    """

    def __init__(self, z: Any, residuals: Sequence[Any]):
        self.z = z
        self.residuals = tuple(residuals)
        super().__init__(f"{z} is not a common root (transform values: {list(residuals)})")


class VerificationError(PompeiuError):
    """
    Raised when a constructed witness fails its brute-force verification.

    Attributes:
        residual: Worst residual observed
        tol: Tolerance that was exceeded
    """

    exit_code = 4

    def __init__(self, message: str, residual: Optional[float] = None, tol: Optional[float] = None):
        self.residual = residual
        self.tol = tol
        super().__init__(message)
