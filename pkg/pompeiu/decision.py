"""
Pompeiu and Mean-Value Decisions on Free Groups

A family of nonempty finite radial sets K in F_k has the Pompeiu property iff
the transforms chi_K-hat have no common complex root, i.e. iff their GCD is a
nonzero constant. When a common root z0 exists, the spherical function
phi_{z0} is annihilated by every chi_K and serves as the counterexample.

The mean-value part asks when the two mean-value properties for spheres of
radii n and m force harmonicity (harmonic here means f * (chi_1 - 2k) = 0):
exactly when gcd(p_n - e_n, p_m - e_m) = z - 2k.

Main components:
- RadialSetFamily: the input family
- free_pompeiu_check / two_circle_check: decisions with witnesses or inversion formulas
- construct_counterexample / verify_annihilation: witnesses and their brute-force check
- mvp_hypothesis_check / mvp_scan / mvp_counterexample: the mean-value criterion
- laplacian / is_harmonic / mvp_check: operators on ball functions
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .config import DEFAULT_CONFIG, PompeiuConfig
from .errors import BallTooSmallError, InvalidInputError, NotACommonRootError, VerificationError
from .exact import as_exact, is_exact
from .free_group import (
    BallFunction,
    FreeGroup,
    GroupRingElement,
    convolve_on_ball,
    sphere_size,
    support_radius,
    translate_sums,
)
from .polyalg import IntPolynomial, Root, extended_gcd, gcd, gcd_many, relative_residual, roots
from .radial import RadialElement, chi, chi_set, from_hat, hat, p_poly, spherical
from .report import DecisionReport, Verification, root_to_dict

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RadialSetFamily:
    """
    Family of radial sets in F_k, each given by its radii.

    The radial set with radii K is the union of the spheres E_n, n in K.

    Attributes:
        k: Generator count
        sets: Each set as a sorted tuple of distinct nonnegative radii
    """

    k: int
    sets: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        if not self.sets:
            raise InvalidInputError("the family of radial sets is empty")
        normalized = []
        for radii in self.sets:
            members = tuple(sorted(set(radii)))
            if not members:
                raise InvalidInputError("radial sets must be nonempty")
            if any(not isinstance(n, int) or n < 0 for n in members):
                raise InvalidInputError(f"radii must be nonnegative integers, got {list(radii)}")
            normalized.append(members)
        object.__setattr__(self, "sets", tuple(normalized))
        FreeGroup(self.k)

    @property
    def max_radius(self) -> int:
        return max(radii[-1] for radii in self.sets)

    def elements(self) -> List[RadialElement]:
        """chi_K for every K in the family."""
        return [chi_set(self.k, radii) for radii in self.sets]

    def transforms(self) -> List[IntPolynomial]:
        return [hat(alpha) for alpha in self.elements()]


RadialLike = Union[RadialElement, GroupRingElement]


def _elements_of(family: Union[RadialSetFamily, Sequence[RadialLike]]) -> List[RadialLike]:
    return family.elements() if isinstance(family, RadialSetFamily) else list(family)


def _as_group_ring(alpha: RadialLike) -> GroupRingElement:
    return alpha.expand() if isinstance(alpha, RadialElement) else alpha


# ---------------------------------------------------------------------------
# Verification
# ---------------------------------------------------------------------------

def verify_annihilation(alpha: RadialLike, f: BallFunction, tol: Optional[float] = None) -> Verification:
    """
    Brute-force check that f is annihilated by alpha.

    Computes the convolution residual max |(alpha * f~)(g)| and the translate-sum
    residual max |sum_y alpha(y) f(gy)| over the inner ball |g| <= R - m, where
    m is the support radius of alpha. The two agree (g <-> g^-1); in exact mode
    both must vanish exactly.

    Raises:
        BallTooSmallError: if R < m
    """
    element = _as_group_ring(alpha)
    conv = convolve_on_ball(element, f.tilde())
    sums = translate_sums(element, f)
    tol = DEFAULT_CONFIG.numeric_witness_tol if tol is None else tol
    if f.exact:
        passed = conv.is_zero() and sums.is_zero()
    else:
        passed = max(conv.max_abs(), sums.max_abs()) <= tol
    return Verification(
        conv_residual=conv.max_abs(),
        translate_residual=sums.max_abs(),
        inner_radius=f.radius - support_radius(element),
        passed=passed,
        exact=f.exact,
        tol=0.0 if f.exact else tol,
    )


def verify_family(family, f: BallFunction, tol: Optional[float] = None) -> Verification:
    """verify_annihilation for every element of the family, aggregated (max residuals, all passed)."""
    checks = [verify_annihilation(alpha, f, tol) for alpha in _elements_of(family)]
    return Verification(
        conv_residual=max(c.conv_residual for c in checks),
        translate_residual=max(c.translate_residual for c in checks),
        inner_radius=min(c.inner_radius for c in checks),
        passed=all(c.passed for c in checks),
        exact=f.exact,
        tol=checks[0].tol,
    )


# ---------------------------------------------------------------------------
# Pompeiu decisions
# ---------------------------------------------------------------------------

def construct_counterexample(
    family: Union[RadialSetFamily, Sequence[RadialElement]],
    z0,
    radius: int,
    k: Optional[int] = None,
    config: Optional[PompeiuConfig] = None,
) -> BallFunction:
    """
    The spherical function phi_{z0} on a ball, after checking that z0 is a common root.

    Args:
        family: A RadialSetFamily or radial elements (e.g. chi_n - e_n chi_0)
        z0: Exact number (checked exactly) or complex float (checked by relative residual)
        radius: Ball radius
        k: Generator count when family is a plain sequence (read from the elements otherwise)
        config: Tolerances

    Raises:
        NotACommonRootError: if some transform does not vanish at z0
    """
    config = config or DEFAULT_CONFIG
    elements = _elements_of(family)
    if not elements:
        raise InvalidInputError("no radial elements given")
    k = k or elements[0].k
    transforms = [hat(alpha) for alpha in elements]
    if is_exact(z0):
        point = as_exact(z0)
        values = [t.eval(point) for t in transforms]
        if any(v != 0 for v in values):
            raise NotACommonRootError(z0, values)
    else:
        point = complex(z0)
        values = [relative_residual([complex(as_exact(c)) for c in t.coeffs], point) for t in transforms]
        if any(v > config.numeric_witness_tol for v in values):
            raise NotACommonRootError(z0, values)
    return spherical(k, point, radius)


def pompeiu_inversion(family: RadialSetFamily) -> Tuple[RadialElement, ...]:
    """
    Radial elements mu_K with sum_K mu_K * chi_K = chi_0, exactly.

    Any f with all translate sums zero then satisfies f = sum_K mu_K * (f * chi_K) = 0.

    Raises:
        InvalidInputError: if the family is not Pompeiu (no such elements exist)
        VerificationError: if the Bezout identity does not check out
    """
    transforms = family.transforms()
    current = transforms[0].monic()
    cofactors = [IntPolynomial.constant(Fraction(1) / Fraction(transforms[0].leading))]
    for t in transforms[1:]:
        current, u, v = extended_gcd(current, t)
        cofactors = [c * u for c in cofactors] + [v]
    if current.degree != 0:
        raise InvalidInputError(f"family {list(family.sets)} is not Pompeiu (gcd {current})")
    total = IntPolynomial.zero()
    for c, t in zip(cofactors, transforms):
        total = total + c * t
    if total != IntPolynomial.constant(1):
        raise VerificationError(f"Bezout identity failed: sum = {total}")
    return tuple(from_hat(family.k, c) for c in cofactors)


def free_pompeiu_check(
    family: RadialSetFamily,
    radius: Optional[int] = None,
    config: Optional[PompeiuConfig] = None,
) -> DecisionReport:
    """
    Decide the Pompeiu property of a radial family in F_k.

    Args:
        family: The family
        radius: Witness ball radius (default config.witness_radius(max radius))
        config: Tolerances

    Returns:
        A DecisionReport: the gcd certificate plus the inversion elements when
        Pompeiu; otherwise the common root, the spherical witness and its
        verification against every set

    Raises:
        BallTooSmallError: if radius is smaller than the largest radius in the family
    """
    config = config or DEFAULT_CONFIG
    transforms = family.transforms()
    common = gcd_many(transforms)
    logger.info(f"F_{family.k} family {[list(s) for s in family.sets]}: gcd {common}")
    if common.degree == 0:
        return DecisionReport(
            group="free",
            k=family.k,
            family=family.sets,
            pompeiu=True,
            gcd=common,
            inversion=pompeiu_inversion(family),
        )

    radius = config.witness_radius(family.max_radius) if radius is None else radius
    if radius < family.max_radius:
        raise BallTooSmallError(family.max_radius, radius, "free_pompeiu_check")
    root = roots(common, config.root_tol, config).first()
    z0 = root.exact if root.is_exact else root.value
    witness = construct_counterexample(family, z0, radius, config=config)
    verification = verify_family(family, witness, config.numeric_witness_tol)
    if not verification.passed:
        logger.error(f"witness phi_{z0} failed verification: residual {verification.translate_residual:.3e}")
    return DecisionReport(
        group="free",
        k=family.k,
        family=family.sets,
        pompeiu=False,
        gcd=common,
        common_root=root,
        witness=witness,
        witness_info={"type": "spherical", "z": root_to_dict(root), "radius": radius},
        verification=verification,
    )


def two_circle_check(
    k: int, r: int, s: int, radius: Optional[int] = None, config: Optional[PompeiuConfig] = None
) -> DecisionReport:
    """
    Two-circle problem: do the sphere sums of radii r and s determine f?

    Not Pompeiu exactly when r and s are both odd (then 0 is a common root).
    """
    if r < 1 or s < 1:
        raise InvalidInputError(f"two-circle radii must be >= 1, got {r}, {s}")
    return free_pompeiu_check(RadialSetFamily(k, ((r,), (s,))), radius, config)


# ---------------------------------------------------------------------------
# Operators on ball functions
# ---------------------------------------------------------------------------

def laplacian(f: BallFunction) -> BallFunction:
    """
    (1/2k) sum_{y in E_1} f(xy) - f(x) on the ball of radius R - 1.

    Raises:
        BallTooSmallError: if R = 0
    """
    if f.radius < 1:
        raise BallTooSmallError(1, f.radius, "laplacian")
    neighbour_sums = translate_sums(chi(f.k, 1).expand(), f)
    weight = Fraction(1, 2 * f.k) if f.exact else 1 / (2 * f.k)
    inner = f.restrict(f.radius - 1)
    return BallFunction(
        f.k,
        f.radius - 1,
        {w: weight * s - inner[w] for w, s in neighbour_sums.values.items()},
        f.exact,
    )


def is_harmonic(f: BallFunction, tol: float = DEFAULT_CONFIG.tol) -> bool:
    """Laplacian identically zero on the inner ball (exactly, for exact f)."""
    lap = laplacian(f)
    return lap.is_zero() if f.exact else lap.max_abs() <= tol


@dataclass(frozen=True)
class MeanValueCheck:
    """
    Result of mvp_check.

    Attributes:
        holds: Whether the mean-value property holds on the inner ball
        residual: max |sum_{y in E_n} f(xy) - e_n f(x)| over |x| <= R - n
        inner_radius: R - n
    """

    holds: bool
    residual: float
    inner_radius: int

    def __bool__(self) -> bool:
        return self.holds


def mvp_check(f: BallFunction, n: int, tol: float = DEFAULT_CONFIG.tol) -> MeanValueCheck:
    """
    Mean-value property for spheres of radius n: e_n f(x) = sum_{y in E_n} f(xy).

    Raises:
        BallTooSmallError: if R < n
    """
    if n < 0:
        raise InvalidInputError(f"sphere radius must be non-negative, got {n}")
    if f.radius < n:
        raise BallTooSmallError(n, f.radius, "mvp_check")
    sums = translate_sums(chi(f.k, n).expand(), f)
    e_n = sphere_size(f.k, n)
    inner = f.restrict(f.radius - n)
    diff = sums - inner.scale(e_n)
    holds = diff.is_zero() if f.exact else diff.max_abs() <= tol
    return MeanValueCheck(holds=holds, residual=diff.max_abs(), inner_radius=f.radius - n)


# ---------------------------------------------------------------------------
# Mean-value criterion
# ---------------------------------------------------------------------------

def mean_value_polynomial(k: int, n: int) -> IntPolynomial:
    """p_n - e_n, the transform of chi_n - e_n chi_0."""
    return p_poly(k, n) - sphere_size(k, n)


def mean_value_factor(k: int, n: int) -> RadialElement:
    """
    alpha_n with (chi_1 - 2k) * alpha_n = chi_n - e_n chi_0, exactly.

    Its transform does not vanish at 2k since 2k is a simple root of p_n - e_n.

    Raises:
        InvalidInputError: if n < 1
    """
    if n < 1:
        raise InvalidInputError(f"mean_value_factor needs n >= 1, got {n}")
    quotient = mean_value_polynomial(k, n).divide_exact(IntPolynomial.linear_root(2 * k))
    return from_hat(k, quotient)


@dataclass(frozen=True)
class MvpResult:
    """
    Outcome of mvp_hypothesis_check.

    Attributes:
        k, n, m: Parameters
        holds: gcd(p_n - e_n, p_m - e_m) equals z - 2k
        gcd: The gcd certificate
        extra_factor: gcd / (z - 2k); constant 1 exactly when the hypothesis holds
    """

    k: int
    n: int
    m: int
    holds: bool
    gcd: IntPolynomial
    extra_factor: IntPolynomial

    def to_dict(self):
        return {
            "k": self.k,
            "n": self.n,
            "m": self.m,
            "holds": self.holds,
            "gcd": self.gcd.to_json(),
            "extraFactor": self.extra_factor.to_json(),
        }


def mvp_hypothesis_check(k: int, n: int, m: int) -> MvpResult:
    """
    Do the mean-value properties for radii n and m force harmonicity?

    True iff the only common solution of p_n(z) = e_n and p_m(z) = e_m is z = 2k,
    i.e. gcd(p_n - e_n, p_m - e_m) = z - 2k.

    Raises:
        InvalidInputError: if n < 1 or m < 1
    """
    if n < 1 or m < 1:
        raise InvalidInputError(f"mean-value radii must be >= 1, got {n}, {m}")
    common = gcd(mean_value_polynomial(k, n), mean_value_polynomial(k, m))
    target = IntPolynomial.linear_root(2 * k)
    extra = common.divide_exact(target)
    holds = common == target
    logger.debug(f"mvp k={k} ({n},{m}): gcd {common}, holds={holds}")
    return MvpResult(k=k, n=n, m=m, holds=holds, gcd=common, extra_factor=extra)


@dataclass(frozen=True)
class MvpScan:
    """
    Table of mvp_hypothesis_check over 1 <= n < m <= max_radius.

    Attributes:
        k: Generator count
        max_radius: Largest radius scanned
        entries: (n, m) -> MvpResult
    """

    k: int
    max_radius: int
    entries: Dict[Tuple[int, int], MvpResult] = field(default_factory=dict)

    def parity_summary(self) -> Dict[str, Dict[str, int]]:
        """Pass counts per parity class: odd-odd, odd-even (mixed) and even-even."""
        summary: Dict[str, Dict[str, int]] = {}
        for (n, m), result in self.entries.items():
            label = {0: "even-even", 1: "odd-even", 2: "odd-odd"}[n % 2 + m % 2]
            bucket = summary.setdefault(label, {"pass": 0, "total": 0})
            bucket["total"] += 1
            bucket["pass"] += int(result.holds)
        return {label: summary[label] for label in ("odd-odd", "odd-even", "even-even") if label in summary}

    def to_dict(self):
        return {
            "k": self.k,
            "maxRadius": self.max_radius,
            "table": [
                {"n": n, "m": m, "holds": r.holds, "gcd": r.gcd.to_json()}
                for (n, m), r in sorted(self.entries.items())
            ],
            "summary": self.parity_summary(),
        }


def mvp_scan(k: int, max_radius: int, config: Optional[PompeiuConfig] = None) -> MvpScan:
    """
    mvp_hypothesis_check for every 1 <= n < m <= max_radius.

    Experimental data only: no conclusion beyond the table is drawn.

    Raises:
        InvalidInputError: if max_radius is outside 1..config.max_scan_radius
    """
    config = config or DEFAULT_CONFIG
    if not 1 <= max_radius <= config.max_scan_radius:
        raise InvalidInputError(f"max_radius must be in 1..{config.max_scan_radius}, got {max_radius}")
    entries = {
        (n, m): mvp_hypothesis_check(k, n, m)
        for n in range(1, max_radius + 1)
        for m in range(n + 1, max_radius + 1)
    }
    logger.info(f"mvp_scan k={k} up to {max_radius}: {sum(r.holds for r in entries.values())}/{len(entries)} hold")
    return MvpScan(k=k, max_radius=max_radius, entries=entries)


@dataclass(frozen=True)
class MvpCounterexample:
    """
    A function with both mean-value properties that is not harmonic.

    Attributes:
        root: Common root z != 2k of p_n - e_n and p_m - e_m
        witness: phi_z on a ball
        checks: mvp_check results for n and m
        harmonic: is_harmonic(witness); False for a genuine counterexample
    """

    root: Root
    witness: BallFunction
    checks: Tuple[MeanValueCheck, MeanValueCheck]
    harmonic: bool


def mvp_counterexample(
    k: int, n: int, m: int, radius: Optional[int] = None, config: Optional[PompeiuConfig] = None
) -> MvpCounterexample:
    """
    Spherical witness for a pair (n, m) failing the mean-value criterion.

    Uses a rational root of gcd / (z - 2k) when there is one (z = -2k for two
    even radii), the first root otherwise.

    Raises:
        InvalidInputError: if the hypothesis holds for (n, m)
        VerificationError: if the witness does not have both properties or is harmonic
    """
    config = config or DEFAULT_CONFIG
    result = mvp_hypothesis_check(k, n, m)
    if result.holds:
        raise InvalidInputError(f"({n}, {m}) satisfies the mean-value criterion for k={k}; no counterexample")
    root_set = roots(result.extra_factor, config.root_tol, config)
    root = next((r for r in root_set if r.is_exact), root_set.first())
    z = root.exact if root.is_exact else root.value
    radius = config.witness_radius(max(n, m)) if radius is None else radius
    elements = [chi(k, n) - chi(k, 0).scale(sphere_size(k, n)), chi(k, m) - chi(k, 0).scale(sphere_size(k, m))]
    witness = construct_counterexample(elements, z, radius, k=k, config=config)
    checks = (mvp_check(witness, n, config.numeric_witness_tol), mvp_check(witness, m, config.numeric_witness_tol))
    harmonic = is_harmonic(witness, config.numeric_witness_tol)
    if not all(checks) or harmonic:
        raise VerificationError(f"phi_{z} is not a mean-value counterexample for ({n}, {m})")
    return MvpCounterexample(root=root, witness=witness, checks=checks, harmonic=harmonic)
