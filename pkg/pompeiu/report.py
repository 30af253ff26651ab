"""
Decision Reports

Result records shared by the free-group and abelian decision procedures, and
their deterministic JSON form. Exact numbers (GCD coefficients, rational
roots) are written as strings; floats only for numeric roots and residuals.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from .exact import format_exact
from .polyalg import IntPolynomial, Root


@dataclass(frozen=True)
class Verification:
    """
    Residual statistics of a brute-force witness check.

    Attributes:
        translate_residual: Max |translate sum| over the checked centers
        passed: Whether the residuals are within tolerance (exactly 0 in exact mode)
        exact: Whether the check ran in exact arithmetic
        tol: Tolerance used for floating checks
        conv_residual: Max |convolution| over the inner ball (free groups)
        inner_radius: Radius of the inner ball where data is defined (free groups)
        relative_residual: Residual scaled by the sum of absolute values (Z)
        value_range: Integer interval the exponential witness was checked on (Z)
    """

    translate_residual: float
    passed: bool
    exact: bool
    tol: float
    conv_residual: Optional[float] = None
    inner_radius: Optional[int] = None
    relative_residual: Optional[float] = None
    value_range: Optional[Tuple[int, int]] = None

    @property
    def verified(self) -> bool:
        return self.passed

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {}
        if self.conv_residual is not None:
            data["convResidual"] = float(self.conv_residual)
        data["translateResidual"] = float(self.translate_residual)
        if self.relative_residual is not None:
            data["relativeResidual"] = float(self.relative_residual)
        if self.inner_radius is not None:
            data["innerRadius"] = self.inner_radius
        if self.value_range is not None:
            data["range"] = list(self.value_range)
        data["exact"] = self.exact
        data["passed"] = self.passed
        return data


def root_to_dict(root: Root) -> Dict[str, Any]:
    """{"re", "im", "exact"}: strings for exact rational roots, floats otherwise."""
    if root.is_exact:
        return {"re": format_exact(root.exact), "im": "0/1", "exact": True}
    return {"re": float(root.value.real), "im": float(root.value.imag), "exact": False}


@dataclass(frozen=True)
class DecisionReport:
    """
    Outcome of a Pompeiu decision.

    Attributes:
        group: "free", "z" or "finite-abelian"
        family: The sets, each as a sorted tuple (radii, integers or element tuples)
        pompeiu: The verdict
        k: Generator count (free groups)
        orders: Cyclic orders, 0 for a Z factor (finite abelian and products)
        gcd: GCD certificate (free groups and Z)
        common_root: Common root of the transforms (not-Pompeiu on free groups and Z)
        character: Exponents of the annihilating character (finite abelian)
        witness: Witness object (BallFunction on free groups, GroupRingElement on
            finite groups); not serialized beyond its description
        witness_info: JSON description of the witness
        verification: Residuals of the witness check
        inversion: Radial elements mu_K with sum mu_K * chi_K = chi_0 (Pompeiu on free groups)
    """

    group: str
    family: Tuple[Tuple[Any, ...], ...]
    pompeiu: bool
    k: Optional[int] = None
    orders: Optional[Tuple[int, ...]] = None
    gcd: Optional[IntPolynomial] = None
    common_root: Optional[Root] = None
    character: Optional[Tuple[int, ...]] = None
    witness: Any = field(default=None, compare=False)
    witness_info: Optional[Dict[str, Any]] = None
    verification: Optional[Verification] = None
    inversion: Optional[Tuple[Any, ...]] = None

    @property
    def decision(self) -> str:
        return "pompeiu" if self.pompeiu else "not-pompeiu"

    @property
    def verified(self) -> bool:
        return self.verification is None or self.verification.passed

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"group": self.group}
        if self.k is not None:
            data["k"] = self.k
        if self.orders is not None:
            data["orders"] = list(self.orders)
        data["family"] = [_family_entry(s) for s in self.family]
        data["decision"] = self.decision
        data["gcd"] = self.gcd.to_json() if self.gcd is not None else None
        data["commonRoot"] = root_to_dict(self.common_root) if self.common_root is not None else None
        if self.character is not None:
            data["character"] = list(self.character)
        data["witness"] = self.witness_info
        data["verification"] = self.verification.to_dict() if self.verification is not None else None
        if self.inversion is not None:
            data["inversion"] = [mu.to_json() for mu in self.inversion]
        return data

    def summary(self) -> str:
        """One-line text rendering used by the CLI."""
        parts: List[str] = [f"{self.group}: {self.decision}"]
        if self.gcd is not None:
            parts.append(f"gcd {self.gcd}")
        if self.common_root is not None:
            root = self.common_root
            parts.append(f"common root {format_exact(root.exact) if root.is_exact else root.value}")
        if self.character is not None:
            parts.append(f"character {list(self.character)}")
        if self.verification is not None:
            parts.append("verified" if self.verification.passed else "VERIFICATION FAILED")
        return ", ".join(parts)


def _family_entry(members: Tuple[Any, ...]) -> List[Any]:
    return [list(m) if isinstance(m, tuple) else m for m in members]
