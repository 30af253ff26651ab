"""
Pompeiu Property Toolkit for Free Groups and Abelian Groups

Exact decision procedures for the Pompeiu property of finite radial subsets
of free groups F_k and of finite subsets of Z, finite abelian groups and
Z x finite products, with explicit annihilated counterexample functions and
brute-force verification on truncated Cayley balls. Also decides when two
mean-value properties force harmonicity.

Main components:
- free_group: reduced words, spheres, group ring, convolution, ball functions
- radial: radial subalgebra, recurrence polynomials p_n, spherical functions
- polyalg: exact polynomials, subresultant GCD, roots
- abelian: characters, Z transforms, torsion zero divisors
- decision: free-group decisions, witnesses, mean-value criterion
- oracle: exact finite linear-algebra cross-checks
- pipeline_nodes: py-trees pipeline used by the CLI

Example usage:
    from pompeiu import RadialSetFamily, free_pompeiu_check

    report = free_pompeiu_check(RadialSetFamily(k=2, sets=((1,), (3,))))
    report.decision          # "not-pompeiu"
    report.common_root.exact # Fraction(0, 1)
"""

from .abelian import (
    Character,
    FiniteAbelianGroup,
    exponential_witness_check,
    finite_abelian_pompeiu_check,
    mixed_pompeiu_check,
    torsion_annihilator,
    z_pompeiu_check,
    z_transform,
)
from .blackboard_keys import BlackboardKeys
from .config import DEFAULT_CONFIG, PompeiuConfig
from .decision import (
    RadialSetFamily,
    construct_counterexample,
    free_pompeiu_check,
    is_harmonic,
    laplacian,
    mean_value_factor,
    mvp_check,
    mvp_counterexample,
    mvp_hypothesis_check,
    mvp_scan,
    pompeiu_inversion,
    two_circle_check,
    verify_annihilation,
)
from .errors import (
    BallTooSmallError,
    InexactDivisionError,
    InvalidInputError,
    NotACommonRootError,
    PompeiuError,
    RootFindingError,
    UnsupportedGroupError,
    VerificationError,
)
from .exact import ComplexRational
from .free_group import (
    BallFunction,
    FreeGroup,
    GroupRingElement,
    ReducedWord,
    convolve,
    convolve_on_ball,
    left_translate,
    multiply,
    pairing,
    reduce,
    sphere,
    tilde,
)
from .pipeline_nodes import DecisionNode, VerificationGateNode, WitnessExportNode, run_decision_tree
from .polyalg import IntPolynomial, RootSet, gcd, is_simple_root, roots
from .radial import RadialElement, chi, hat, p_poly, radial_convolve, radialize, spherical
from .report import DecisionReport, Verification

__version__ = "0.1.0"

__all__ = [
    # Groups and group rings
    "FreeGroup",
    "ReducedWord",
    "GroupRingElement",
    "BallFunction",
    "ComplexRational",
    "reduce",
    "multiply",
    "sphere",
    "convolve",
    "convolve_on_ball",
    "left_translate",
    "tilde",
    "pairing",
    # Radial algebra
    "RadialElement",
    "chi",
    "p_poly",
    "hat",
    "radial_convolve",
    "spherical",
    "radialize",
    # Polynomials
    "IntPolynomial",
    "RootSet",
    "gcd",
    "roots",
    "is_simple_root",
    # Abelian groups
    "FiniteAbelianGroup",
    "Character",
    "z_transform",
    "z_pompeiu_check",
    "finite_abelian_pompeiu_check",
    "mixed_pompeiu_check",
    "exponential_witness_check",
    "torsion_annihilator",
    # Decisions
    "RadialSetFamily",
    "DecisionReport",
    "Verification",
    "free_pompeiu_check",
    "two_circle_check",
    "construct_counterexample",
    "verify_annihilation",
    "pompeiu_inversion",
    "laplacian",
    "is_harmonic",
    "mvp_check",
    "mean_value_factor",
    "mvp_hypothesis_check",
    "mvp_scan",
    "mvp_counterexample",
    # Pipeline
    "BlackboardKeys",
    "DecisionNode",
    "VerificationGateNode",
    "WitnessExportNode",
    "run_decision_tree",
    # Configuration and errors
    "PompeiuConfig",
    "DEFAULT_CONFIG",
    "PompeiuError",
    "InvalidInputError",
    "UnsupportedGroupError",
    "BallTooSmallError",
    "InexactDivisionError",
    "RootFindingError",
    "NotACommonRootError",
    "VerificationError",
]
