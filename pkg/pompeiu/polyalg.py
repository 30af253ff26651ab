"""
Exact Polynomial Algebra

Univariate polynomials with exact coefficients (arbitrary-precision integers
in the common case, rationals or complex rationals in general), GCD
certificates, square-free decomposition and root isolation.

The algebra is done by sympy's Poly over ZZ, QQ or QQ_I; IntPolynomial keeps
a plain coefficient tuple so values stay hashable, comparable and printable
in the package's text form.

Exactness lives in the GCDs and in rational roots; irrational roots are only
ever approximated (companion-matrix eigenvalues refined by Aberth iteration)
and reported with their residuals.

Main components:
- IntPolynomial: immutable polynomial, coefficients lowest degree first
- gcd / gcd_many: primitive GCD with positive leading coefficient
- extended_gcd: Bezout cofactors over the rationals
- square_free_decomposition: square-free factors with multiplicities
- rational_roots / roots / numeric_roots: root isolation
- is_simple_root: exact simple-root test by synthetic division
"""

import cmath
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from numbers import Rational
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np
from numpy.polynomial import polynomial as npoly
from sympy import QQ, QQ_I, ZZ, Poly, Symbol

from .config import DEFAULT_CONFIG, PompeiuConfig
from .errors import InexactDivisionError, InvalidInputError, RootFindingError
from .exact import ComplexRational, as_exact, format_exact, parse_exact

logger = logging.getLogger(__name__)

Coefficient = Union[int, Fraction, ComplexRational]

_GEN = Symbol("z")


def _normalize(value) -> Coefficient:
    """Store each coefficient in its simplest exact type (int, Fraction, ComplexRational)."""
    if isinstance(value, bool):
        return int(value)
    if isinstance(value, int):
        return value
    if isinstance(value, ComplexRational):
        if value.im:
            return value
        value = value.re
    if isinstance(value, Rational):
        value = Fraction(value)
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, str):
        return _normalize(parse_exact(value))
    raise InvalidInputError(f"polynomial coefficient {value!r} is not exact")


def _ground_domain(coeffs: Sequence[Coefficient]):
    if any(isinstance(c, ComplexRational) for c in coeffs):
        return QQ_I
    if any(isinstance(c, Fraction) for c in coeffs):
        return QQ
    return ZZ


def _to_ground(c: Coefficient, domain):
    if isinstance(c, ComplexRational):
        return c.gaussian
    if domain.is_ZZ:
        return ZZ(c)
    q = QQ(c.numerator, c.denominator)
    return q if domain.is_QQ else QQ_I(q)


def _from_ground(c, domain) -> Coefficient:
    if domain.is_ZZ:
        return int(c)
    if domain.is_QQ:
        return Fraction(int(c.numerator), int(c.denominator))
    if domain.is_QQ_I or domain.is_ZZ_I:
        return ComplexRational.from_gaussian(c)
    raise InvalidInputError(f"coefficient domain {domain} is not exact")


@dataclass(frozen=True)
class IntPolynomial:
    """
    Polynomial in z with exact coefficients, lowest degree first.

    Trailing zero coefficients are stripped, so the leading coefficient is
    nonzero unless the polynomial is zero (empty coefficient tuple).

    Attributes:
        coeffs: Coefficients (c_0, c_1, ..., c_d)
    """

    coeffs: Tuple[Coefficient, ...] = field(default=())

    def __post_init__(self):
        coeffs = [_normalize(c) for c in self.coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls) -> "IntPolynomial":
        return cls(())

    @classmethod
    def constant(cls, value) -> "IntPolynomial":
        return cls((value,))

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> "IntPolynomial":
        return cls((0,) * degree + (coeff,))

    @classmethod
    def linear_root(cls, root) -> "IntPolynomial":
        """z - root."""
        return cls((-as_exact(root), 1))

    @classmethod
    def from_poly(cls, poly: Poly) -> "IntPolynomial":
        """Read back a univariate sympy Poly over ZZ, QQ, ZZ_I or QQ_I."""
        domain = poly.get_domain()
        return cls(tuple(_from_ground(c, domain) for c in reversed(poly.rep.to_list())))

    @cached_property
    def sympy_poly(self) -> Poly:
        """The same polynomial as a sympy Poly in z over the smallest exact domain."""
        domain = _ground_domain(self.coeffs)
        rep = [_to_ground(c, domain) for c in reversed(self.coeffs)]
        return Poly.from_list(rep, _GEN, domain=domain)

    # -- properties -------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Coefficient:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return self.degree <= 0

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def is_real(self) -> bool:
        return not any(isinstance(c, ComplexRational) for c in self.coeffs)

    def __getitem__(self, i: int) -> Coefficient:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    # -- arithmetic -------------------------------------------------------

    def __call__(self, x):
        return self.eval(x)

    def eval(self, x):
        """Horner evaluation; exact when x is exact, numpy-friendly otherwise."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial.from_poly(self.sympy_poly.diff())

    def __add__(self, other) -> "IntPolynomial":
        return IntPolynomial.from_poly(self.sympy_poly.add(_as_polynomial(other).sympy_poly))

    __radd__ = __add__

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial.from_poly(self.sympy_poly.neg())

    def __sub__(self, other) -> "IntPolynomial":
        return IntPolynomial.from_poly(self.sympy_poly.sub(_as_polynomial(other).sympy_poly))

    def __rsub__(self, other) -> "IntPolynomial":
        return _as_polynomial(other) - self

    def __mul__(self, other) -> "IntPolynomial":
        return IntPolynomial.from_poly(self.sympy_poly.mul(_as_polynomial(other).sympy_poly))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "IntPolynomial":
        return IntPolynomial.from_poly(self.sympy_poly.pow(exponent))

    def scale(self, factor) -> "IntPolynomial":
        return self * IntPolynomial.constant(factor)

    def divmod(self, divisor: "IntPolynomial") -> Tuple["IntPolynomial", "IntPolynomial"]:
        """
        Division with remainder over the coefficient field.

        Raises:
            ZeroDivisionError: if divisor is zero
        """
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        quotient, remainder = self.sympy_poly.div(divisor.sympy_poly)
        return IntPolynomial.from_poly(quotient), IntPolynomial.from_poly(remainder)

    def divide_exact(self, divisor: "IntPolynomial") -> "IntPolynomial":
        """
        Exact quotient self / divisor.

        Raises:
            InexactDivisionError: if the remainder is nonzero
        """
        quotient, remainder = self.divmod(divisor)
        if not remainder.is_zero():
            raise InexactDivisionError(str(self), str(divisor), str(remainder))
        return quotient

    def content(self) -> int:
        """
        gcd of the integer coefficients; 0 for the zero polynomial.

        Raises:
            InvalidInputError: if some coefficient is not an integer
        """
        if not self.is_integral():
            raise InvalidInputError(f"content needs integer coefficients: {self}")
        return int(self.sympy_poly.content())

    def primitive_part(self) -> "IntPolynomial":
        """
        Integer polynomial with content 1 and positive leading coefficient.

        Rational coefficients are cleared of denominators first.

        Raises:
            InvalidInputError: for non-real coefficients
        """
        if not self.is_real():
            raise InvalidInputError(f"primitive part needs real rational coefficients: {self}")
        if self.is_zero():
            return self
        _, cleared = self.sympy_poly.clear_denoms(convert=True)
        _, primitive = cleared.primitive()
        if primitive.LC() < 0:
            primitive = primitive.neg()
        return IntPolynomial.from_poly(primitive)

    def monic(self) -> "IntPolynomial":
        if self.is_zero():
            return self
        return IntPolynomial.from_poly(self.sympy_poly.monic())

    # -- serialization ----------------------------------------------------

    def to_json(self) -> List[str]:
        """Coefficient strings, lowest degree first (integers plain, others num/den)."""
        return [str(c) if isinstance(c, int) else format_exact(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "IntPolynomial":
        return cls(tuple(_normalize(str(c)) for c in data))

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for power in range(self.degree, -1, -1):
            c = self.coeffs[power]
            if c == 0:
                continue
            negative = not isinstance(c, ComplexRational) and c < 0
            magnitude = -c if negative else c
            if isinstance(magnitude, ComplexRational):
                text = f"({format_exact(magnitude)})"
            elif isinstance(magnitude, Fraction):
                text = f"({magnitude})"
            else:
                text = str(magnitude)
            if power > 0 and magnitude == 1:
                text = ""
            if power >= 1:
                text += "z" if power == 1 else f"z^{power}"
            if not parts:
                parts.append(("-" if negative else "") + text)
            else:
                parts.append(("- " if negative else "+ ") + text)
        return " ".join(parts)


def _as_polynomial(value) -> IntPolynomial:
    return value if isinstance(value, IntPolynomial) else IntPolynomial.constant(value)


Z = IntPolynomial((0, 1))


# ---------------------------------------------------------------------------
# GCDs
# ---------------------------------------------------------------------------

def gcd(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    """
    Primitive GCD of two real rational polynomials.

    Both inputs are reduced to primitive integer polynomials and handed to
    sympy's GCD over ZZ.

    Args:
        p: First polynomial
        q: Second polynomial

    Returns:
        The GCD, content 1, positive leading coefficient (constant 1 when coprime)

    Raises:
        InvalidInputError: if both inputs are zero or a coefficient is non-real
    """
    if p.is_zero() and q.is_zero():
        raise InvalidInputError("gcd(0, 0) is undefined")
    if p.is_zero():
        return q.primitive_part()
    if q.is_zero():
        return p.primitive_part()
    a, b = p.primitive_part(), q.primitive_part()
    result = IntPolynomial.from_poly(a.sympy_poly.gcd(b.sympy_poly)).primitive_part()
    logger.debug(f"gcd of degrees {p.degree}, {q.degree} has degree {result.degree}")
    return result


def gcd_many(polys: Iterable[IntPolynomial]) -> IntPolynomial:
    """GCD of a collection; zero polynomials are ignored unless all are zero."""
    nonzero = [p for p in polys if not p.is_zero()]
    if not nonzero:
        raise InvalidInputError("gcd of zero polynomials is undefined")
    result = nonzero[0].primitive_part()
    for p in nonzero[1:]:
        if result.degree == 0:
            break
        result = gcd(result, p)
    return result


def extended_gcd(p: IntPolynomial, q: IntPolynomial) -> Tuple[IntPolynomial, IntPolynomial, IntPolynomial]:
    """
    Bezout cofactors over the rationals.

    Returns:
        (g, u, v) with u*p + v*q = g and g monic

    Raises:
        InvalidInputError: if both inputs are zero
    """
    if p.is_zero() and q.is_zero():
        raise InvalidInputError("extended_gcd(0, 0) is undefined")
    if q.is_zero():
        return p.monic(), IntPolynomial.constant(1 / as_exact(p.leading)), IntPolynomial.zero()
    if p.is_zero():
        return q.monic(), IntPolynomial.zero(), IntPolynomial.constant(1 / as_exact(q.leading))
    u, v, g = p.sympy_poly.gcdex(q.sympy_poly)
    return IntPolynomial.from_poly(g), IntPolynomial.from_poly(u), IntPolynomial.from_poly(v)


def square_free_decomposition(p: IntPolynomial) -> List[Tuple[IntPolynomial, int]]:
    """
    Square-free decomposition (Yun's algorithm, via sympy's sqf_list).

    Returns:
        Pairs (factor, multiplicity), multiplicity ascending, with primitive,
        pairwise coprime, square-free factors; prod factor^multiplicity equals
        p up to a constant.

    Raises:
        InvalidInputError: if p is zero or has non-real coefficients
    """
    if p.is_zero():
        raise InvalidInputError("square-free decomposition of the zero polynomial")
    p = p.primitive_part()
    if p.degree == 0:
        return []
    _, factors = p.sympy_poly.sqf_list()
    result = [(IntPolynomial.from_poly(f).primitive_part(), k) for f, k in factors]
    return sorted(result, key=lambda item: item[1])


# ---------------------------------------------------------------------------
# Roots
# ---------------------------------------------------------------------------

def rational_roots(p: IntPolynomial) -> List[Fraction]:
    """
    Distinct rational roots, ascending: the linear factors of p over the rationals.

    Raises:
        InvalidInputError: for the zero polynomial or non-real coefficients
    """
    if p.is_zero():
        raise InvalidInputError("the zero polynomial has every number as a root")
    p = p.primitive_part()
    if p.degree < 1:
        return []
    _, factors = p.sympy_poly.factor_list()
    found = []
    for factor, _ in factors:
        if factor.degree() == 1:
            a, b = factor.rep.to_list()
            found.append(Fraction(-int(b), int(a)))
    return sorted(found)


def synthetic_division(p: IntPolynomial, r) -> Tuple[IntPolynomial, Coefficient]:
    """Divide p by (z - r): returns (quotient, remainder) with remainder = p(r)."""
    quotient, remainder = p.divmod(IntPolynomial.linear_root(_normalize(r)))
    return quotient, remainder[0]


def is_simple_root(p: IntPolynomial, r) -> bool:
    """
    True iff r is a root of multiplicity exactly one, decided exactly.

    p = (z - r) q + p(r); r is simple iff p(r) = 0 and q(r) = p'(r) != 0.

    Raises:
        InvalidInputError: if r is not an exact number
    """
    try:
        r = _normalize(r)
    except InvalidInputError as e:
        raise InvalidInputError(f"is_simple_root needs an exact point, got {r!r}") from e
    quotient, remainder = synthetic_division(p, r)
    return remainder == 0 and quotient.eval(r) != 0


def relative_residual(coeffs: Sequence[complex], z: complex) -> float:
    """|p(z)| / sum |c_i| |z|^i, the backward error of z as a root."""
    c = np.asarray(coeffs, dtype=complex)
    value = abs(npoly.polyval(z, c))
    scale = float(npoly.polyval(abs(z), np.abs(c)))
    return value / scale if scale else value


def numeric_roots(
    coeffs: Sequence[complex],
    tol: float = DEFAULT_CONFIG.root_tol,
    max_iterations: int = DEFAULT_CONFIG.max_root_iterations,
) -> List[complex]:
    """
    All complex roots of a floating polynomial (lowest degree first).

    Starts from the companion-matrix eigenvalues (numpy.roots) and polishes
    all roots simultaneously with Aberth iteration.

    Raises:
        InvalidInputError: if the polynomial is constant
        RootFindingError: if some residual stays above tol after max_iterations
    """
    c = np.trim_zeros(np.asarray(coeffs, dtype=complex), "b")
    if c.size < 2:
        raise InvalidInputError("numeric_roots needs a polynomial of degree >= 1")
    zero_roots = int(np.argmax(c != 0))
    c = c[zero_roots:]
    z = np.roots(c[::-1]).astype(complex) if c.size > 1 else np.empty(0, dtype=complex)
    dc = npoly.polyder(c)
    iterations = 0
    for iterations in range(1, max_iterations + 1):
        if z.size == 0:
            break
        value = npoly.polyval(z, c)
        slope = npoly.polyval(z, dc)
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = np.where(slope != 0, value / slope, 0)
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, np.inf)
            repulsion = np.sum(1.0 / diff, axis=1)
            step = ratio / (1 - ratio * repulsion)
        step = np.where(np.isfinite(step), step, 0)
        z = z - step
        if np.all(np.abs(step) <= 4 * np.finfo(float).eps * np.maximum(1.0, np.abs(z))):
            break
    found = [0j] * zero_roots + [complex(x) for x in z]
    worst = max((relative_residual(c, x) for x in z), default=0.0)
    if worst >= tol:
        raise RootFindingError(iterations, worst, tol)
    logger.debug(f"numeric_roots: degree {c.size - 1 + zero_roots}, {iterations} Aberth steps, residual {worst:.3e}")
    return [_clean(x, tol) for x in found]


def _clean(z: complex, tol: float) -> complex:
    """Snap imaginary parts that are pure rounding noise to zero."""
    if abs(z.imag) <= tol * max(1.0, abs(z)):
        return complex(z.real, 0.0)
    return z


@dataclass(frozen=True)
class Root:
    """
    One root of a polynomial.

    Attributes:
        value: Complex approximation (exact roots are converted)
        multiplicity: Multiplicity as a root of the defining polynomial
        exact: The exact rational value when the root is rational
    """

    value: complex
    multiplicity: int
    exact: Optional[Fraction] = None

    @property
    def is_exact(self) -> bool:
        return self.exact is not None


def root_sort_key(z: complex) -> Tuple[float, float]:
    """Order by magnitude, then by argument in [0, 2*pi)."""
    angle = cmath.phase(z) % (2 * math.pi) if z != 0 else 0.0
    return (round(abs(z), 9), round(angle, 9) % round(2 * math.pi, 9))


@dataclass(frozen=True)
class RootSet:
    """
    Complex roots with multiplicities.

    Attributes:
        roots: Roots sorted by magnitude, then argument
        certified: True when every root is an exact rational
        degree: Degree of the defining polynomial (sum of multiplicities)
    """

    roots: Tuple[Root, ...]
    certified: bool
    degree: int

    def __iter__(self):
        return iter(self.roots)

    def __len__(self) -> int:
        return len(self.roots)

    def values(self) -> List[complex]:
        return [r.value for r in self.roots]

    def first(self) -> Root:
        return self.roots[0]


def roots(p: IntPolynomial, tol: float = DEFAULT_CONFIG.root_tol, config: Optional[PompeiuConfig] = None) -> RootSet:
    """
    All complex roots of a real rational polynomial with multiplicities.

    Multiplicities come from the exact square-free decomposition; rational
    roots are extracted exactly, the remaining ones numerically.

    Raises:
        InvalidInputError: if p has degree < 1
        RootFindingError: if Aberth iteration does not converge
    """
    config = config or DEFAULT_CONFIG
    if p.degree < 1:
        raise InvalidInputError(f"roots needs degree >= 1, got {p}")
    found: List[Root] = []
    for factor, multiplicity in square_free_decomposition(p):
        for r in rational_roots(factor):
            found.append(Root(complex(r), multiplicity, r))
            factor = factor.divide_exact(IntPolynomial.linear_root(r)).primitive_part()
        if factor.degree >= 1:
            coeffs = [float(Fraction(c)) for c in factor.coeffs]
            for z in numeric_roots(coeffs, tol, config.max_root_iterations):
                found.append(Root(z, multiplicity))
    found.sort(key=lambda r: root_sort_key(r.value))
    result = RootSet(tuple(found), all(r.is_exact for r in found), p.degree)
    logger.debug(f"roots({p}): {len(found)} distinct, certified={result.certified}")
    return result
