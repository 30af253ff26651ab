"""
Free Group Arithmetic

Reduced words, Cayley spheres and balls, the group ring CG and convolution
for the free group F_k, plus ball functions: complex-valued functions
tabulated on a Cayley ball of radius R, the truncated model of an arbitrary
function on F_k.

Words are stored as tuples of signed generator indices: +i is the i-th
generator, -i its inverse (1 <= i <= k). Text form uses a..z for generators,
A..Z for inverses and "e" for the identity (see ``format_word``).

Main components:
- FreeGroup: the group F_k (identity, multiply, invert, spheres)
- ReducedWord: a freely reduced word
- GroupRingElement: finitely supported exact function on a group
- BallFunction: function tabulated on a Cayley ball (exact or floating)
- convolve / convolve_on_ball / translate_sums: the convolution products
"""

import csv
import logging
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from types import MappingProxyType
from typing import Any, Callable, Dict, Iterable, Iterator, Mapping, NamedTuple, Optional, Sequence, Tuple, Union

from .errors import BallTooSmallError, InvalidInputError
from .exact import ONE, ZERO, ComplexRational, as_exact, format_exact, is_exact, parse_exact

logger = logging.getLogger(__name__)

MAX_GENERATORS = 26
_LOWER = "abcdefghijklmnopqrstuvwxyz"
_UPPER = _LOWER.upper()


class ReducedWord(NamedTuple):
    """
    A freely reduced word of F_k.

    Attributes:
        letters: Signed generator indices, no adjacent pair (i, -i)
        k: Number of generators of the ambient free group
    """

    letters: Tuple[int, ...]
    k: int

    def length(self) -> int:
        return len(self.letters)

    def is_identity(self) -> bool:
        return not self.letters

    def __str__(self) -> str:
        return format_word(self)


def _check_k(k: int) -> None:
    if not isinstance(k, int) or not 1 <= k <= MAX_GENERATORS:
        raise InvalidInputError(f"generator count k must be in 1..{MAX_GENERATORS}, got {k!r}")


def letter_order(k: int) -> Tuple[int, ...]:
    """Canonical letter order: generator index ascending, +1 before -1."""
    return tuple(letter for i in range(1, k + 1) for letter in (i, -i))


def identity(k: int) -> ReducedWord:
    _check_k(k)
    return ReducedWord((), k)


def reduce(letters: Iterable[int], k: int) -> ReducedWord:
    """
    Freely reduce a raw letter sequence.

    Args:
        letters: Signed generator indices (not necessarily reduced)
        k: Number of generators

    Returns:
        The freely reduced word; reduce is idempotent

    Raises:
        InvalidInputError: if a generator index is outside 1..k
    """
    _check_k(k)
    stack = []
    for letter in letters:
        if not isinstance(letter, int) or letter == 0 or abs(letter) > k:
            raise InvalidInputError(f"generator index {letter!r} out of range 1..{k}")
        if stack and stack[-1] == -letter:
            stack.pop()
        else:
            stack.append(letter)
    return ReducedWord(tuple(stack), k)


def multiply(x: ReducedWord, y: ReducedWord) -> ReducedWord:
    """Product x·y, reduced; cancellation only happens at the junction."""
    if x.k != y.k:
        raise InvalidInputError(f"cannot multiply words of F_{x.k} and F_{y.k}")
    a, b = x.letters, y.letters
    i, n = 0, min(len(a), len(b))
    while i < n and a[-1 - i] == -b[i]:
        i += 1
    return ReducedWord(a[: len(a) - i] + b[i:], x.k)


def invert(x: ReducedWord) -> ReducedWord:
    return ReducedWord(tuple(-letter for letter in reversed(x.letters)), x.k)


def sphere_size(k: int, n: int) -> int:
    """e_n = 2k(2k-1)^(n-1) for n >= 1 and e_0 = 1."""
    if n < 0:
        raise InvalidInputError(f"sphere radius must be non-negative, got {n}")
    return 1 if n == 0 else 2 * k * (2 * k - 1) ** (n - 1)


def ball_size(k: int, radius: int) -> int:
    return sum(sphere_size(k, n) for n in range(radius + 1))


@lru_cache(maxsize=None)
def sphere(k: int, n: int) -> Tuple[ReducedWord, ...]:
    """
    All words of length exactly n, each once, in lexicographic letter order.

    Enumeration is depth-first, never appending the inverse of the last letter.

    Raises:
        InvalidInputError: if k < 2 or n < 0
    """
    _check_k(k)
    if k < 2:
        raise InvalidInputError(f"spheres are defined for k >= 2, got k={k}")
    if n < 0:
        raise InvalidInputError(f"sphere radius must be non-negative, got {n}")
    order = letter_order(k)
    words = []

    def extend(prefix: Tuple[int, ...]) -> None:
        if len(prefix) == n:
            words.append(ReducedWord(prefix, k))
            return
        last = prefix[-1] if prefix else 0
        for letter in order:
            if letter != -last:
                extend(prefix + (letter,))

    extend(())
    logger.debug(f"sphere(k={k}, n={n}) enumerated {len(words)} words")
    return tuple(words)


def ball(k: int, radius: int) -> Tuple[ReducedWord, ...]:
    """All words of length <= radius, shortest first."""
    if radius < 0:
        raise InvalidInputError(f"ball radius must be non-negative, got {radius}")
    return tuple(w for n in range(radius + 1) for w in sphere(k, n))


def word_sort_key(word: ReducedWord) -> Tuple[int, Tuple[int, ...]]:
    """Key ordering words by length, then lexicographically in letter order."""
    rank = {letter: i for i, letter in enumerate(letter_order(word.k))}
    return (len(word.letters), tuple(rank[letter] for letter in word.letters))


# ---------------------------------------------------------------------------
# Text form
# ---------------------------------------------------------------------------

def identity_token(k: int) -> str:
    """"e" while it is unambiguous (k <= 4), "1" once generator 5 owns the letter e."""
    return "e" if k <= 4 else "1"


def format_word(word: ReducedWord) -> str:
    if not word.letters:
        return identity_token(word.k)
    return "".join(_LOWER[l - 1] if l > 0 else _UPPER[-l - 1] for l in word.letters)


def parse_word(text: str, k: int) -> ReducedWord:
    """
    Parse the text form of a word (the result is reduced).

    Raises:
        InvalidInputError: on unknown letters or generators beyond k
    """
    _check_k(k)
    text = text.strip()
    if text == "1" or (text == "e" and k <= 4) or text == "":
        return ReducedWord((), k)
    letters = []
    for ch in text:
        if ch in _LOWER:
            letters.append(_LOWER.index(ch) + 1)
        elif ch in _UPPER:
            letters.append(-(_UPPER.index(ch) + 1))
        else:
            raise InvalidInputError(f"invalid letter {ch!r} in word {text!r}")
    return reduce(letters, k)


# ---------------------------------------------------------------------------
# Groups
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FreeGroup:
    """
    The free group F_k on k generators, as a group object for group rings.

    Attributes:
        k: Number of generators (2..26)
    """

    k: int

    def __post_init__(self):
        _check_k(self.k)
        if self.k < 2:
            raise InvalidInputError(f"free groups need k >= 2, got k={self.k}")

    def identity(self) -> ReducedWord:
        return ReducedWord((), self.k)

    def multiply(self, x: ReducedWord, y: ReducedWord) -> ReducedWord:
        return multiply(x, y)

    def invert(self, x: ReducedWord) -> ReducedWord:
        return invert(x)

    def validate(self, x: Any) -> ReducedWord:
        if not isinstance(x, ReducedWord) or x.k != self.k:
            raise InvalidInputError(f"{x!r} is not a word of F_{self.k}")
        return x

    def sphere(self, n: int) -> Tuple[ReducedWord, ...]:
        return sphere(self.k, n)

    def __str__(self) -> str:
        return f"F_{self.k}"


# ---------------------------------------------------------------------------
# Group ring
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class GroupRingElement:
    """
    Finitely supported function on a group with exact complex-rational values.

    Zero coefficients are dropped on construction, so two elements are equal
    exactly when their stored terms agree.

    Attributes:
        group: Group object providing identity / multiply / invert / validate
        terms: Mapping group element -> nonzero ComplexRational coefficient
    """

    group: Any
    terms: Mapping[Any, ComplexRational]

    def __post_init__(self):
        cleaned: Dict[Any, ComplexRational] = {}
        for element, coeff in self.terms.items():
            coeff = as_exact(coeff)
            if coeff:
                cleaned[self.group.validate(element)] = coeff
        object.__setattr__(self, "terms", MappingProxyType(cleaned))

    @classmethod
    def zero(cls, group) -> "GroupRingElement":
        return cls(group, {})

    @classmethod
    def delta(cls, group, element=None, coeff=1) -> "GroupRingElement":
        """coeff times the point mass at element (the identity by default)."""
        element = group.identity() if element is None else element
        return cls(group, {element: coeff})

    @classmethod
    def indicator(cls, group, elements: Iterable) -> "GroupRingElement":
        """Characteristic function chi_K of a finite set K."""
        return cls(group, {element: 1 for element in elements})

    def __call__(self, element) -> ComplexRational:
        return self.terms.get(element, ZERO)

    def support(self) -> Tuple[Any, ...]:
        return tuple(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def _check_same_group(self, other: "GroupRingElement") -> None:
        if self.group != other.group:
            raise InvalidInputError(f"mismatched groups: {self.group} and {other.group}")

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        self._check_same_group(other)
        terms = dict(self.terms)
        for element, coeff in other.terms.items():
            terms[element] = terms.get(element, ZERO) + coeff
        return GroupRingElement(self.group, terms)

    def __sub__(self, other: "GroupRingElement") -> "GroupRingElement":
        return self + other.scale(-1)

    def __neg__(self) -> "GroupRingElement":
        return self.scale(-1)

    def scale(self, factor) -> "GroupRingElement":
        factor = as_exact(factor)
        return GroupRingElement(self.group, {g: factor * c for g, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self.group == other.group and dict(self.terms) == dict(other.terms)

    __hash__ = None

    def __repr__(self):
        body = ", ".join(f"{g}: {format_exact(c)}" for g, c in self.terms.items())
        return f"GroupRingElement({self.group}, {{{body}}})"


def support_radius(alpha: GroupRingElement) -> int:
    """Largest word length in the support of an element of CF_k (0 if zero)."""
    return max((w.length() for w in alpha.terms), default=0)


def convolve(alpha: GroupRingElement, f: GroupRingElement) -> GroupRingElement:
    """
    Convolution (alpha * f)(g) = sum_h alpha(g h^-1) f(h).

    Raises:
        InvalidInputError: if the two elements live on different groups
    """
    alpha._check_same_group(f)
    group = alpha.group
    out: Dict[Any, ComplexRational] = {}
    for g, a in alpha.terms.items():
        for h, b in f.terms.items():
            key = group.multiply(g, h)
            out[key] = out.get(key, ZERO) + a * b
    return GroupRingElement(group, out)


def left_translate(g, f: GroupRingElement) -> GroupRingElement:
    """(L_g f)(x) = f(gx)."""
    group = f.group
    g_inv = group.invert(group.validate(g))
    return GroupRingElement(group, {group.multiply(g_inv, w): c for w, c in f.terms.items()})


def tilde(f: GroupRingElement) -> GroupRingElement:
    """Reindex g -> g^-1."""
    return GroupRingElement(f.group, {f.group.invert(w): c for w, c in f.terms.items()})


def conj(f: GroupRingElement) -> GroupRingElement:
    return GroupRingElement(f.group, {w: c.conjugate() for w, c in f.terms.items()})


def pairing(alpha: GroupRingElement, f: GroupRingElement) -> ComplexRational:
    """<alpha, f> = sum_g alpha(g) conj(f(g))."""
    alpha._check_same_group(f)
    total = ZERO
    for g, a in alpha.terms.items():
        b = f.terms.get(g)
        if b is not None:
            total = total + a * b.conjugate()
    return total


# ---------------------------------------------------------------------------
# Ball functions
# ---------------------------------------------------------------------------

Scalar = Union[ComplexRational, complex]


@dataclass(frozen=True, eq=False)
class BallFunction:
    """
    A function tabulated on every word of length <= radius in F_k.

    Exact ball functions hold ComplexRational values; floating ones hold
    Python complex values (used for witnesses built from irrational roots).

    Attributes:
        k: Number of generators
        radius: Radius R of the ball
        values: Mapping word -> value, in canonical ball order
        exact: Whether the values are exact complex rationals
    """

    k: int
    radius: int
    values: Mapping[ReducedWord, Scalar]
    exact: bool = True

    def __post_init__(self):
        FreeGroup(self.k)
        if self.radius < 0:
            raise InvalidInputError(f"ball radius must be non-negative, got {self.radius}")
        expected = ball_size(self.k, self.radius)
        if len(self.values) != expected:
            raise InvalidInputError(
                f"ball of radius {self.radius} in F_{self.k} needs {expected} values, "
                f"got {len(self.values)}"
            )
        convert: Callable[[Any], Scalar] = as_exact if self.exact else complex
        ordered: Dict[ReducedWord, Scalar] = {}
        try:
            for word in ball(self.k, self.radius):
                ordered[word] = convert(self.values[word])
        except KeyError as e:
            raise InvalidInputError(f"ball function is missing the word {e.args[0]}") from e
        except TypeError as e:
            raise InvalidInputError(f"ball function value has the wrong type: {e}") from e
        object.__setattr__(self, "values", MappingProxyType(ordered))

    @classmethod
    def tabulate(cls, k: int, radius: int, fn: Callable[[ReducedWord], Any], exact: bool = True) -> "BallFunction":
        """Build a ball function by evaluating fn on every word of the ball."""
        return cls(k, radius, {w: fn(w) for w in ball(k, radius)}, exact)

    @classmethod
    def constant(cls, k: int, radius: int, value=1, exact: bool = True) -> "BallFunction":
        return cls.tabulate(k, radius, lambda _w: value, exact)

    @classmethod
    def from_group_ring(cls, f: GroupRingElement, radius: int) -> "BallFunction":
        """Restrict an element of CF_k to a ball (exact)."""
        return cls.tabulate(f.group.k, radius, f)

    def __getitem__(self, word: ReducedWord) -> Scalar:
        return self.values[word]

    def words(self) -> Iterator[ReducedWord]:
        return iter(self.values)

    def zero_value(self) -> Scalar:
        return ZERO if self.exact else 0j

    def restrict(self, radius: int) -> "BallFunction":
        if radius > self.radius:
            raise BallTooSmallError(radius, self.radius, "restrict")
        return BallFunction(self.k, radius, {w: self.values[w] for w in ball(self.k, radius)}, self.exact)

    def tilde(self) -> "BallFunction":
        return BallFunction(self.k, self.radius, {invert(w): v for w, v in self.values.items()}, self.exact)

    def scale(self, factor) -> "BallFunction":
        if not self.exact:
            factor = complex(factor)
        return BallFunction(self.k, self.radius, {w: factor * v for w, v in self.values.items()}, self.exact)

    def to_floating(self) -> "BallFunction":
        if not self.exact:
            return self
        return BallFunction(self.k, self.radius, {w: v.to_complex() for w, v in self.values.items()}, False)

    def __sub__(self, other: "BallFunction") -> "BallFunction":
        if (self.k, self.radius) != (other.k, other.radius):
            raise InvalidInputError("ball functions live on different balls")
        left, right = (self, other) if self.exact == other.exact else (self.to_floating(), other.to_floating())
        return BallFunction(
            self.k, self.radius, {w: v - right.values[w] for w, v in left.values.items()}, left.exact
        )

    def __eq__(self, other):
        if not isinstance(other, BallFunction):
            return NotImplemented
        return (
            (self.k, self.radius, self.exact) == (other.k, other.radius, other.exact)
            and dict(self.values) == dict(other.values)
        )

    __hash__ = None

    def max_abs(self) -> float:
        return max((abs_value(v) for v in self.values.values()), default=0.0)

    def is_zero(self) -> bool:
        if self.exact:
            return all(v.is_zero() for v in self.values.values())
        return all(v == 0 for v in self.values.values())

    # -- CSV ---------------------------------------------------------------

    def to_csv(self, path: Union[str, Path]) -> Path:
        """
        Write the ``word,re,im`` CSV form.

        Exact values are written as num/den; floating values use repr so that
        re-reading reproduces them bit for bit.
        """
        path = Path(path)
        with open(path, "w", newline="") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(["word", "re", "im"])
            for word, value in self.values.items():
                if self.exact:
                    writer.writerow([format_word(word), _fraction_text(value.re), _fraction_text(value.im)])
                else:
                    writer.writerow([format_word(word), repr(value.real), repr(value.imag)])
        logger.info(f"Wrote ball function (k={self.k}, R={self.radius}, exact={self.exact}) to {path}")
        return path

    @classmethod
    def from_csv(cls, path: Union[str, Path], k: int) -> "BallFunction":
        """
        Read a CSV written by ``to_csv``; exactness is detected from the values.

        Raises:
            InvalidInputError: on malformed rows or an incomplete ball
        """
        path = Path(path)
        with open(path, newline="") as f:
            rows = list(csv.reader(f))
        if not rows or [c.strip() for c in rows[0]] != ["word", "re", "im"]:
            raise InvalidInputError(f"{path}: expected header 'word,re,im'")
        body = [row for row in rows[1:] if row]
        exact = all("/" in row[1] and "/" in row[2] for row in body if len(row) == 3)
        values: Dict[ReducedWord, Scalar] = {}
        for line_no, row in enumerate(body, start=2):
            if len(row) != 3:
                raise InvalidInputError(f"{path}:{line_no}: expected 3 columns, got {len(row)}")
            word = parse_word(row[0], k)
            try:
                if exact:
                    value: Scalar = ComplexRational(parse_exact(row[1]).re, parse_exact(row[2]).re)
                else:
                    value = complex(float(row[1]), float(row[2]))
            except ValueError as e:
                raise InvalidInputError(f"{path}:{line_no}: {e}") from e
            values[word] = value
        radius = max((w.length() for w in values), default=0)
        logger.debug(f"Read {len(values)} values from {path} (radius {radius}, exact={exact})")
        return cls(k, radius, values, exact)


def _fraction_text(value) -> str:
    return f"{value.numerator}/{value.denominator}"


def abs_value(value: Scalar) -> float:
    if isinstance(value, ComplexRational):
        return value.abs_float()
    return abs(value)


def _prepare_terms(alpha: GroupRingElement, exact: bool, transform: Callable[[ReducedWord], ReducedWord]):
    prepared = []
    for y, c in alpha.terms.items():
        coeff: Scalar = c if exact else c.to_complex()
        prepared.append((transform(y), coeff, c == ONE))
    return prepared


def _weighted_sum(prepared, lookup: Callable[[ReducedWord], Scalar], start: Scalar) -> Scalar:
    total = start
    for key, coeff, unit in prepared:
        value = lookup(key)
        total = total + (value if unit else coeff * value)
    return total


def _check_ball_operands(alpha: GroupRingElement, f: BallFunction, operation: str) -> int:
    if not isinstance(alpha.group, FreeGroup) or alpha.group.k != f.k:
        raise InvalidInputError(f"{operation}: element of {alpha.group} does not act on F_{f.k}")
    m = support_radius(alpha)
    if f.radius < m:
        raise BallTooSmallError(m, f.radius, operation)
    return m


def convolve_on_ball(alpha: GroupRingElement, f: BallFunction) -> BallFunction:
    """
    Values of alpha * f on the inner ball of radius R - m.

    (alpha * f)(g) = sum_y alpha(y) f(y^-1 g); with |y| <= m and |g| <= R - m
    every input lies inside the ball.

    Raises:
        BallTooSmallError: if R < m, the support radius of alpha
    """
    m = _check_ball_operands(alpha, f, "convolve_on_ball")
    prepared = _prepare_terms(alpha, f.exact, invert)
    values = f.values
    out = {
        g: _weighted_sum(prepared, lambda y_inv: values[multiply(y_inv, g)], f.zero_value())
        for g in ball(f.k, f.radius - m)
    }
    logger.debug(f"convolve_on_ball: support radius {m}, output radius {f.radius - m}")
    return BallFunction(f.k, f.radius - m, out, f.exact)


def translate_sums(alpha: GroupRingElement, f: BallFunction) -> BallFunction:
    """
    Weighted translate sums sum_y alpha(y) f(g y) for |g| <= R - m.

    For alpha = chi_K this is sum over x in gK of f(x), the left-translate sum.

    Raises:
        BallTooSmallError: if R < m
    """
    m = _check_ball_operands(alpha, f, "translate_sums")
    prepared = _prepare_terms(alpha, f.exact, lambda y: y)
    values = f.values
    out = {
        g: _weighted_sum(prepared, lambda y: values[multiply(g, y)], f.zero_value())
        for g in ball(f.k, f.radius - m)
    }
    return BallFunction(f.k, f.radius - m, out, f.exact)


def words_from_text(texts: Sequence[str], k: int) -> Tuple[ReducedWord, ...]:
    return tuple(parse_word(t, k) for t in texts)
