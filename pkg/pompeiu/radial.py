"""
Radial Subalgebra of the Free Group Ring

Radial elements sum a_n chi_n, where chi_n is the characteristic function of the
sphere of radius n, form a commutative subalgebra of CF_k isomorphic to C[z].
The isomorphism sends chi_n to the recurrence polynomial p_n:

    p_0 = 1, p_1 = z, p_2 = z^2 - 2k,
    p_{n+1} = z p_n - (2k - 1) p_{n-1}   for n >= 2

Main components:
- RadialElement: coefficient sequence (a_0, ..., a_m)
- chi / p_poly / hat / from_hat: basis elements and the polynomial transform
- radial_convolve: multiplication through the transform
- spherical: the spherical function phi_z tabulated on a ball
- radialize / radial_profile: sphere averages of a ball function
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, List, Sequence, Tuple

from .errors import InvalidInputError
from .exact import ZERO, ComplexRational, as_exact, format_exact, is_exact, parse_exact
from .free_group import (
    BallFunction,
    FreeGroup,
    GroupRingElement,
    ReducedWord,
    convolve,
    sphere,
    sphere_size,
)
from .polyalg import IntPolynomial

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RadialElement:
    """
    Radial element sum_n a_n chi_n of CF_k.

    Attributes:
        k: Generator count
        coeffs: Exact coefficients (a_0, ..., a_m); trailing zeros are stripped
    """

    k: int
    coeffs: Tuple[ComplexRational, ...] = field(default=())

    def __post_init__(self):
        FreeGroup(self.k)
        coeffs = [as_exact(c) for c in self.coeffs]
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, n: int) -> ComplexRational:
        return self.coeffs[n] if 0 <= n < len(self.coeffs) else ZERO

    def is_zero(self) -> bool:
        return not self.coeffs

    def _check_same_k(self, other: "RadialElement") -> None:
        if self.k != other.k:
            raise InvalidInputError(f"radial elements over F_{self.k} and F_{other.k}")

    def __add__(self, other: "RadialElement") -> "RadialElement":
        self._check_same_k(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return RadialElement(self.k, tuple(self.coefficient(i) + other.coefficient(i) for i in range(n)))

    def __sub__(self, other: "RadialElement") -> "RadialElement":
        return self + other.scale(-1)

    def scale(self, factor) -> "RadialElement":
        factor = as_exact(factor)
        return RadialElement(self.k, tuple(factor * c for c in self.coeffs))

    def expand(self) -> GroupRingElement:
        """The element sum a_n chi_n of the group ring."""
        terms = {}
        for n, a in enumerate(self.coeffs):
            if a:
                for w in sphere(self.k, n):
                    terms[w] = a
        return GroupRingElement(FreeGroup(self.k), terms)

    def to_json(self) -> List[str]:
        return [format_exact(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, k: int, data: Sequence[str]) -> "RadialElement":
        return cls(k, tuple(parse_exact(str(c)) for c in data))

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        return " + ".join(f"{format_exact(a)}*chi_{n}" for n, a in enumerate(self.coeffs) if a)


def chi(k: int, n: int) -> RadialElement:
    """chi_n, the characteristic function of the sphere of radius n."""
    if n < 0:
        raise InvalidInputError(f"sphere radius must be non-negative, got {n}")
    return RadialElement(k, (0,) * n + (1,))


def chi_set(k: int, radii) -> RadialElement:
    """chi_K for the radial set K = union of spheres over the given radii."""
    radii = sorted(set(radii))
    if not radii:
        raise InvalidInputError("a radial set needs at least one radius")
    if radii[0] < 0:
        raise InvalidInputError(f"radii must be non-negative, got {radii[0]}")
    coeffs = [0] * (radii[-1] + 1)
    for n in radii:
        coeffs[n] = 1
    return RadialElement(k, tuple(coeffs))


@lru_cache(maxsize=None)
def _p_table(k: int, n: int) -> Tuple[IntPolynomial, ...]:
    omega2 = 2 * k - 1
    table = [IntPolynomial((1,)), IntPolynomial((0, 1)), IntPolynomial((-2 * k, 0, 1))]
    z = IntPolynomial((0, 1))
    while len(table) <= n:
        table.append(z * table[-1] - table[-2].scale(omega2))
    return tuple(table[: max(n + 1, 1)])


def p_poly(k: int, n: int) -> IntPolynomial:
    """
    Recurrence polynomial p_n for F_k.

    The start p_2 = z^2 - 2k does not follow the three-term rule; the rule
    applies from n = 2 on.

    Raises:
        InvalidInputError: if n < 0
    """
    FreeGroup(k)
    if n < 0:
        raise InvalidInputError(f"p_n needs n >= 0, got {n}")
    return _p_table(k, n)[n]


def p_values(k: int, z, n_max: int) -> List[Any]:
    """[p_0(z), ..., p_{n_max}(z)] by running the recurrence on the value z."""
    omega2 = 2 * k - 1
    values = [1, z, z * z - 2 * k]
    while len(values) <= n_max:
        values.append(z * values[-1] - omega2 * values[-2])
    return values[: n_max + 1]


def hat(alpha: RadialElement) -> IntPolynomial:
    """alpha-hat = sum_j a_j p_j; a ring isomorphism onto polynomials."""
    result = IntPolynomial.zero()
    for n, a in enumerate(alpha.coeffs):
        if a:
            result = result + p_poly(alpha.k, n).scale(a)
    return result


def from_hat(k: int, poly: IntPolynomial) -> RadialElement:
    """
    Inverse of hat: the radial element whose transform is poly.

    Each p_n is monic of degree n, so the top coefficient of the remainder is
    the next p-basis coefficient.
    """
    remainder = poly
    coeffs = [0] * (poly.degree + 1)
    while not remainder.is_zero():
        n = remainder.degree
        coeffs[n] = remainder.leading
        remainder = remainder - p_poly(k, n).scale(remainder.leading)
    return RadialElement(k, tuple(coeffs))


def radial_convolve(alpha: RadialElement, beta: RadialElement) -> RadialElement:
    """Product in the radial algebra, computed as from_hat(hat(alpha) * hat(beta))."""
    alpha._check_same_k(beta)
    return from_hat(alpha.k, hat(alpha) * hat(beta))


def radial_convolve_direct(alpha: RadialElement, beta: RadialElement) -> RadialElement:
    """Same product through full group-ring convolution; slow, used as a cross-check."""
    alpha._check_same_k(beta)
    product = convolve(alpha.expand(), beta.expand())
    return radialize_element(alpha.k, product)


def radialize_element(k: int, f: GroupRingElement) -> RadialElement:
    """Radial projection of a finitely supported element (sphere averages)."""
    radius = max((w.length() for w in f.terms), default=0)
    return radialize(BallFunction.tabulate(k, radius, f))


# ---------------------------------------------------------------------------
# Ball functions
# ---------------------------------------------------------------------------

def spherical(k: int, z, radius: int) -> BallFunction:
    """
    The spherical function phi_z = sum p_n(z)/e_n chi_n on the ball of the given radius.

    Exact when z is exact (int, Fraction, ComplexRational); floating otherwise.

    Raises:
        InvalidInputError: if radius < 0
    """
    if radius < 0:
        raise InvalidInputError(f"ball radius must be non-negative, got {radius}")
    exact = is_exact(z)
    point = as_exact(z) if exact else complex(z)
    per_length = [
        (as_exact(v) / sphere_size(k, n)) if exact else complex(v) / sphere_size(k, n)
        for n, v in enumerate(p_values(k, point, radius))
    ]
    logger.debug(f"spherical(k={k}, z={z}, R={radius}) exact={exact}")
    return BallFunction.tabulate(k, radius, lambda w: per_length[len(w.letters)], exact)


def expand_to_ball(alpha: RadialElement, radius: int) -> BallFunction:
    """Tabulate sum a_n chi_n on a ball (coefficients beyond the radius are dropped)."""
    return BallFunction.tabulate(alpha.k, radius, lambda w: alpha.coefficient(len(w.letters)))


def radial_profile(f: BallFunction) -> List[Any]:
    """Average of f over each sphere E_0, ..., E_R (exact or floating, like f)."""
    sums = [f.zero_value()] * (f.radius + 1)
    for w, v in f.values.items():
        n = len(w.letters)
        sums[n] = sums[n] + v
    if f.exact:
        return [s / sphere_size(f.k, n) for n, s in enumerate(sums)]
    return [complex(s) / sphere_size(f.k, n) for n, s in enumerate(sums)]


def radialize(f: BallFunction) -> RadialElement:
    """
    Radialization P(f): coefficient n is the average of f over E_n.

    Raises:
        InvalidInputError: for floating ball functions
    """
    if not f.exact:
        raise InvalidInputError("radialize needs an exact ball function; use radial_profile")
    return RadialElement(f.k, tuple(radial_profile(f)))


def is_radial(f: BallFunction) -> bool:
    """True when f is constant on every sphere of its ball."""
    profile = radial_profile(f)
    return all(v == profile[len(w.letters)] for w, v in f.values.items())


def sphere_pairing(k: int, x: ReducedWord, m: int, n: int) -> int:
    """
    <x * chi_m, chi_n>: the number of y in E_m with |xy| = n.

    Depends only on |x|, m and n.
    """
    if m < 0 or n < 0:
        raise InvalidInputError("sphere radii must be non-negative")
    shifted = convolve(GroupRingElement.delta(FreeGroup(k), x), chi(k, m).expand())
    value = sum((c for w, c in shifted.terms.items() if w.length() == n), ZERO)
    return int(value.re)
