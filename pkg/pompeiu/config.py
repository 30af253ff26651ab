"""
Runtime configuration for the decision procedures.
"""

from dataclasses import dataclass, field
from typing import Tuple


@dataclass(frozen=True)
class PompeiuConfig:
    """
    Tolerances and size bounds shared by all modules.

    Attributes:
        tol: Tolerance for floating character sums and exponential witnesses
        numeric_witness_tol: Residual bound for witnesses built from irrational roots
        root_tol: Relative residual required of every numerically refined root
        max_root_iterations: Iteration cap for Aberth refinement
        max_group_size: Largest finite abelian group whose characters are enumerated
        max_scan_radius: Largest radius accepted by mvp_scan
        witness_range: Integer interval used to check exponential witnesses on Z
        min_witness_radius: Lower bound of the default witness ball radius
        max_default_witness_radius: Cap on the doubled default radius (kept >= max radius + 3)
    """

    tol: float = 1e-9
    numeric_witness_tol: float = 1e-8
    root_tol: float = 1e-10
    max_root_iterations: int = 200
    max_group_size: int = 10**6
    max_scan_radius: int = 20
    witness_range: Tuple[int, int] = field(default=(-50, 50))
    min_witness_radius: int = 6
    max_default_witness_radius: int = 10

    def __post_init__(self):
        if self.tol <= 0 or self.numeric_witness_tol <= 0 or self.root_tol <= 0:
            raise ValueError("tolerances must be positive")
        if self.max_root_iterations < 1:
            raise ValueError("max_root_iterations must be at least 1")
        if self.max_group_size < 1:
            raise ValueError("max_group_size must be positive")
        if self.max_scan_radius < 1:
            raise ValueError("max_scan_radius must be positive")
        lo, hi = self.witness_range
        if lo > hi:
            raise ValueError("witness_range must be an increasing interval")
        if self.min_witness_radius < 0:
            raise ValueError("min_witness_radius must be non-negative")
        if self.max_default_witness_radius < self.min_witness_radius:
            raise ValueError("max_default_witness_radius must be >= min_witness_radius")

    def witness_radius(self, max_radius: int) -> int:
        """
        Default truncation radius for spherical witnesses of a family.

        Twice the largest radius, at least min_witness_radius; beyond
        max_default_witness_radius only max_radius + 3 is guaranteed, since ball
        sizes grow like (2k - 1)^R.
        """
        doubled = min(2 * max_radius, max(max_radius + 3, self.max_default_witness_radius))
        return max(self.min_witness_radius, doubled)


DEFAULT_CONFIG = PompeiuConfig()
