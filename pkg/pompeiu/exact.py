"""
Exact Complex Rationals

Group-ring coefficients are complex numbers whose real and imaginary parts are
arbitrary-precision rationals, so every algebraic identity in the package can
be checked with zero tolerance.

Arithmetic is carried by sympy's Gaussian rational field QQ_I; this module
adds the number protocol the rest of the package relies on (mixing with ints
and Fractions, hashing equal to real values) and the text form.

Text form (used by CSV and JSON reports):
- "3/4"          real value
- "3/4+1/2i"     complex value
- "-1/1-2/3i"    negative parts carry their own sign
"""

import math
import re
from fractions import Fraction
from numbers import Rational
from typing import Union

from sympy import QQ, QQ_I

_EXACT_PATTERN = re.compile(
    r"^\s*(?P<re>[+-]?\d+(?:/\d+)?)?\s*(?:(?P<im>[+-]\s*\d+(?:/\d+)?|[+-])i)?\s*$"
)


def _to_qq(value):
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def _to_fraction(value) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


class ComplexRational:
    """
    Immutable complex number with rational real and imaginary parts.

    Instances behave like numbers: they support +, -, *, / with ints,
    Fractions and other ComplexRationals, compare equal to ints and
    Fractions when their imaginary part vanishes, and are hashable.

    Attributes:
        gaussian: The underlying QQ_I element
    """

    __slots__ = ("gaussian",)

    def __init__(self, re: Union[int, Fraction, str] = 0, im: Union[int, Fraction, str] = 0):
        object.__setattr__(self, "gaussian", QQ_I(_to_qq(re), _to_qq(im)))

    @classmethod
    def from_gaussian(cls, value) -> "ComplexRational":
        """Wrap an element of QQ_I (or ZZ_I)."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "gaussian", QQ_I.convert(value))
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("ComplexRational is immutable")

    @property
    def re(self) -> Fraction:
        return _to_fraction(self.gaussian.x)

    @property
    def im(self) -> Fraction:
        return _to_fraction(self.gaussian.y)

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.gaussian

    def is_real(self) -> bool:
        return not self.gaussian.y

    def __bool__(self) -> bool:
        return bool(self.gaussian)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return ComplexRational.from_gaussian(self.gaussian + other)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return ComplexRational.from_gaussian(self.gaussian - other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return ComplexRational.from_gaussian(other - self.gaussian)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return ComplexRational.from_gaussian(self.gaussian * other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other:
            raise ZeroDivisionError("division by exact zero")
        return ComplexRational.from_gaussian(self.gaussian / other)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero():
            raise ZeroDivisionError("division by exact zero")
        return ComplexRational.from_gaussian(other / self.gaussian)

    def __neg__(self):
        return ComplexRational.from_gaussian(-self.gaussian)

    def __pos__(self):
        return self

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent == 0:
            return ONE
        if exponent < 0:
            return ONE / (self ** -exponent)
        return ComplexRational.from_gaussian(self.gaussian ** exponent)

    def conjugate(self) -> "ComplexRational":
        value = self.gaussian
        return ComplexRational.from_gaussian(value.new(value.x, -value.y))

    def norm_squared(self) -> Fraction:
        value = self.gaussian
        return _to_fraction(value.x * value.x + value.y * value.y)

    # -- conversions ------------------------------------------------------

    def to_complex(self) -> complex:
        return complex(float(self.re), float(self.im))

    def abs_float(self) -> float:
        return math.hypot(float(self.re), float(self.im))

    def __complex__(self) -> complex:
        return self.to_complex()

    # -- comparison & hashing ----------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.gaussian == other

    def __hash__(self):
        if self.is_real():
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"ComplexRational({format_exact(self)!r})"

    def __str__(self):
        return format_exact(self)


ZERO = ComplexRational.from_gaussian(QQ_I.zero)
ONE = ComplexRational.from_gaussian(QQ_I.one)

ExactScalar = Union[int, Fraction, ComplexRational]


def _coerce(value):
    """QQ_I element for an exact scalar, NotImplemented otherwise."""
    if isinstance(value, ComplexRational):
        return value.gaussian
    if isinstance(value, (int, Rational)):
        return QQ_I(_to_qq(value))
    return NotImplemented


def is_exact(value) -> bool:
    """True for ints, rationals and ComplexRationals (but not bools' float cousins)."""
    return isinstance(value, (int, Rational, ComplexRational))


def as_exact(value) -> ComplexRational:
    """
    Coerce an exact scalar (or its text form) to ComplexRational.

    Raises:
        TypeError: for floats and complex floats, which have no exact reading
    """
    if isinstance(value, str):
        return parse_exact(value)
    if isinstance(value, ComplexRational):
        return value
    coerced = _coerce(value)
    if coerced is NotImplemented:
        raise TypeError(f"{value!r} ({type(value).__name__}) is not an exact scalar")
    return ComplexRational.from_gaussian(coerced)


def _format_fraction(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def format_exact(value) -> str:
    """Format an exact scalar as "num/den" or "num/den+num/den i"."""
    value = as_exact(value)
    text = _format_fraction(value.re)
    im = value.im
    if im:
        sign = "+" if im > 0 else "-"
        text += f"{sign}{_format_fraction(abs(im))}i"
    return text


def parse_exact(text: str) -> ComplexRational:
    """
    Parse the output of ``format_exact`` (plain integers are accepted too).

    Raises:
        ValueError: if the text is not an exact scalar
    """
    match = _EXACT_PATTERN.match(text)
    if not match or (match.group("re") is None and match.group("im") is None):
        raise ValueError(f"Not an exact scalar: {text!r}")
    re_part = Fraction(match.group("re")) if match.group("re") else Fraction(0)
    im_text = match.group("im")
    if im_text is None:
        im_part = Fraction(0)
    else:
        im_text = im_text.replace(" ", "")
        im_part = Fraction(im_text + "1") if im_text in "+-" else Fraction(im_text)
    return ComplexRational(re_part, im_part)
