"""
Pompeiu Decisions on Abelian Groups

For an abelian group G a family of finite sets fails the Pompeiu property
exactly when some character annihilates every characteristic function in the
family. This module realizes that criterion concretely for:

- Z: characters are z -> z0^m with z0 != 0; the transform of K is the Laurent
  polynomial sum_{g in K} z^g, normalized to an ordinary polynomial
- finite abelian groups Z_{n_1} x ... x Z_{n_d}: characters are enumerated
- Z x finite: for each character of the finite part, the Z criterion on the
  character-weighted transforms

Z^d for d >= 2 is rejected (common zeros on the d-torus need elimination theory).
"""

import cmath
import itertools
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Iterable, Iterator, Optional, Sequence, Tuple

import numpy as np

from .config import DEFAULT_CONFIG, PompeiuConfig
from .errors import InvalidInputError, UnsupportedGroupError, VerificationError
from .free_group import GroupRingElement, convolve
from .polyalg import IntPolynomial, Root, gcd_many, numeric_roots, relative_residual, root_sort_key, roots
from .report import DecisionReport, Verification

logger = logging.getLogger(__name__)

Element = Tuple[int, ...]


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """
    Z_{n_1} x ... x Z_{n_d} with componentwise addition.

    Attributes:
        orders: Cyclic orders (n_1, ..., n_d), each >= 2
    """

    orders: Tuple[int, ...]

    def __post_init__(self):
        orders = tuple(self.orders)
        if not orders:
            raise InvalidInputError("a finite abelian group needs at least one cyclic factor")
        for n in orders:
            if not isinstance(n, int) or n < 2:
                raise InvalidInputError(f"cyclic orders must be integers >= 2, got {n!r}")
        object.__setattr__(self, "orders", orders)

    @property
    def size(self) -> int:
        return math.prod(self.orders)

    def identity(self) -> Element:
        return (0,) * len(self.orders)

    def multiply(self, x: Element, y: Element) -> Element:
        return tuple((a + b) % n for a, b, n in zip(x, y, self.orders))

    def invert(self, x: Element) -> Element:
        return tuple(-a % n for a, n in zip(x, self.orders))

    def validate(self, x: Any) -> Element:
        if isinstance(x, int) and len(self.orders) == 1:
            x = (x,)
        if not isinstance(x, tuple) or len(x) != len(self.orders):
            raise InvalidInputError(f"{x!r} is not an element of {self}")
        for a, n in zip(x, self.orders):
            if not isinstance(a, int) or not 0 <= a < n:
                raise InvalidInputError(f"element {x!r} out of range for {self}")
        return x

    def elements(self) -> Iterator[Element]:
        """All elements in lexicographic order."""
        return itertools.product(*(range(n) for n in self.orders))

    def __str__(self) -> str:
        return " x ".join(f"Z_{n}" for n in self.orders)


def cyclic(n: int) -> FiniteAbelianGroup:
    return FiniteAbelianGroup((n,))


@dataclass(frozen=True)
class Character:
    """
    Character g -> prod_j exp(2 pi i m_j g_j / n_j) of a finite abelian group.

    Attributes:
        exponents: (m_1, ..., m_d), 0 <= m_j < n_j
        orders: Cyclic orders of the group
    """

    exponents: Tuple[int, ...]
    orders: Tuple[int, ...]

    def phase(self, g: Element) -> Fraction:
        """Argument / 2 pi, reduced to [0, 1)."""
        return sum((Fraction(m * a % n, n) for m, a, n in zip(self.exponents, g, self.orders)), Fraction(0)) % 1

    def __call__(self, g: Element) -> complex:
        return cmath.exp(2j * math.pi * float(self.phase(g)))

    def is_real(self) -> bool:
        """True when the character only takes the values +1 and -1."""
        return all((2 * m) % n == 0 for m, n in zip(self.exponents, self.orders))

    def real_value(self, g: Element) -> int:
        """Exact +-1 value of a real character."""
        if not self.is_real():
            raise InvalidInputError(f"character {self.exponents} is not real")
        return 1 if self.phase(g) == 0 else -1


# ---------------------------------------------------------------------------
# Z
# ---------------------------------------------------------------------------

def _int_set(K: Iterable[int]) -> Tuple[int, ...]:
    members = tuple(sorted(set(K)))
    if not members:
        raise InvalidInputError("sets in a family must be nonempty")
    for g in members:
        if not isinstance(g, int):
            raise InvalidInputError(f"{g!r} is not an integer")
    return members


def z_transform(K: Iterable[int]) -> Tuple[IntPolynomial, int]:
    """
    Normalized transform of chi_K on Z.

    Returns:
        (z^(-min K) * sum_{g in K} z^g, min K); the polynomial has a nonzero
        constant term, so its roots are exactly the annihilating characters

    Raises:
        InvalidInputError: if K is empty
    """
    members = _int_set(K)
    shift = members[0]
    coeffs = [0] * (members[-1] - shift + 1)
    for g in members:
        coeffs[g - shift] = 1
    return IntPolynomial(tuple(coeffs)), shift


def exponential_witness_check(
    z0: complex,
    sets: Sequence[Iterable[int]],
    value_range: Tuple[int, int] = DEFAULT_CONFIG.witness_range,
    tol: float = DEFAULT_CONFIG.tol,
) -> Verification:
    """
    Translate sums of f(m) = z0^m over every g + K inside value_range.

    The verdict uses the relative residual max |sum| / max sum |z0^x|; the
    absolute maximum is reported as translate_residual.

    Raises:
        InvalidInputError: if z0 == 0
    """
    z0 = complex(z0)
    if z0 == 0:
        raise InvalidInputError("z0 = 0 is not a character of Z")
    lo, hi = value_range
    worst, worst_relative = 0.0, 0.0
    for K in sets:
        members = _int_set(K)
        for g in range(lo - members[0], hi - members[-1] + 1):
            terms = [z0 ** (g + x) for x in members]
            total = abs(sum(terms))
            scale = sum(abs(t) for t in terms)
            worst = max(worst, total)
            worst_relative = max(worst_relative, total / scale if scale else total)
    return Verification(
        translate_residual=worst,
        relative_residual=worst_relative,
        passed=worst_relative <= tol,
        exact=False,
        tol=tol,
        value_range=(lo, hi),
    )


def z_pompeiu_check(sets: Sequence[Iterable[int]], config: Optional[PompeiuConfig] = None) -> DecisionReport:
    """
    Pompeiu decision on Z.

    Pompeiu iff the gcd of the normalized transforms is constant; otherwise the
    gcd's first root z0 (smallest magnitude, then argument) gives the witness
    f(m) = z0^m, which is checked on config.witness_range.

    Raises:
        InvalidInputError: for an empty family or an empty set
    """
    config = config or DEFAULT_CONFIG
    if not sets:
        raise InvalidInputError("the family of sets is empty")
    family = tuple(_int_set(K) for K in sets)
    transforms = [z_transform(K)[0] for K in family]
    common = gcd_many(transforms)
    logger.info(f"Z family {[list(K) for K in family]}: gcd {common}")
    if common.degree == 0:
        return DecisionReport(group="z", family=family, pompeiu=True, gcd=common)
    root = roots(common, config.root_tol, config).first()
    verification = exponential_witness_check(root.value, family, config.witness_range, config.tol)
    if not verification.passed:
        logger.error(f"exponential witness z0={root.value} failed: residual {verification.relative_residual:.3e}")
    return DecisionReport(
        group="z",
        family=family,
        pompeiu=False,
        gcd=common,
        common_root=root,
        witness_info={"type": "exponential", "range": list(config.witness_range)},
        verification=verification,
    )


# ---------------------------------------------------------------------------
# Finite abelian groups
# ---------------------------------------------------------------------------

def _element_set(G: FiniteAbelianGroup, K: Iterable) -> Tuple[Element, ...]:
    members = tuple(sorted({G.validate(tuple(g) if isinstance(g, list) else g) for g in K}))
    if not members:
        raise InvalidInputError("sets in a family must be nonempty")
    return members


def finite_translate_sums(G: FiniteAbelianGroup, K: Iterable, f) -> Dict[Element, Any]:
    """
    Sum of f over g + K for every g in G.

    f may be a GroupRingElement (exact sums) or any mapping / callable on elements.
    """
    members = _element_set(G, K)
    lookup = f if callable(f) else f.__getitem__
    sums = {}
    for g in G.elements():
        values = [lookup(G.multiply(g, x)) for x in members]
        sums[g] = sum(values[1:], values[0])
    return sums


def characters(G: FiniteAbelianGroup) -> Iterator[Character]:
    """All characters, exponent tuples in lexicographic order."""
    for exponents in G.elements():
        yield Character(exponents, G.orders)


def _annihilating_index(G: FiniteAbelianGroup, family: Sequence[Tuple[Element, ...]], tol: float) -> Optional[int]:
    """Index (lexicographic) of the first character annihilating every set, or None."""
    orders = np.asarray(G.orders, dtype=np.int64)
    sets = [np.asarray(K, dtype=np.int64) for K in family]
    width = max(len(K) for K in family) * len(G.orders)
    chunk = max(1, 4_000_000 // width)
    for start in range(0, G.size, chunk):
        stop = min(G.size, start + chunk)
        exponents = np.stack(np.unravel_index(np.arange(start, stop), G.orders), axis=1)
        hit = np.ones(stop - start, dtype=bool)
        for K in sets:
            products = (exponents[:, None, :] * K[None, :, :]) % orders
            phase = (products / orders).sum(axis=2)
            sums = np.exp(2j * np.pi * phase).sum(axis=1)
            hit &= np.abs(sums) <= tol
        found = np.flatnonzero(hit)
        if found.size:
            return start + int(found[0])
    return None


def real_witness(G: FiniteAbelianGroup, character: Character) -> GroupRingElement:
    """The +-1 valued witness g -> character(g) of a real character, exact."""
    return GroupRingElement(G, {g: character.real_value(g) for g in G.elements()})


def finite_abelian_pompeiu_check(
    G: FiniteAbelianGroup, sets: Sequence[Iterable], config: Optional[PompeiuConfig] = None
) -> DecisionReport:
    """
    Pompeiu decision on a finite abelian group by character enumeration.

    Not Pompeiu iff some character has sum_{g in K} chi(g) = 0 (within
    config.tol) for every K; the lexicographically least such character is
    the witness. Its translate sums are re-checked directly, and exactly when
    the character is real.

    Raises:
        UnsupportedGroupError: if |G| exceeds config.max_group_size
        InvalidInputError: for empty sets or elements out of range
    """
    config = config or DEFAULT_CONFIG
    if G.size > config.max_group_size:
        raise UnsupportedGroupError(str(G), f"order {G.size} exceeds the bound {config.max_group_size}")
    if not sets:
        raise InvalidInputError("the family of sets is empty")
    family = tuple(_element_set(G, K) for K in sets)
    index = _annihilating_index(G, family, config.tol)
    if index is None:
        logger.info(f"{G}: no annihilating character, Pompeiu")
        return DecisionReport(group="finite-abelian", family=family, pompeiu=True, orders=G.orders)

    exponents = tuple(int(e) for e in np.unravel_index(index, G.orders))
    character = Character(exponents, G.orders)
    logger.info(f"{G}: character {exponents} annihilates every set")
    if character.is_real():
        witness = real_witness(G, character)
        residual = max(
            max(v.abs_float() for v in finite_translate_sums(G, K, witness).values()) for K in family
        )
        verification = Verification(translate_residual=float(residual), passed=residual == 0, exact=True, tol=0.0)
    else:
        witness = None
        residual = max(max(abs(v) for v in finite_translate_sums(G, K, character).values()) for K in family)
        verification = Verification(
            translate_residual=float(residual), passed=residual <= config.tol, exact=False, tol=config.tol
        )
    if not verification.passed:
        logger.error(f"character witness {exponents} failed verification: residual {residual}")
    return DecisionReport(
        group="finite-abelian",
        family=family,
        pompeiu=False,
        orders=G.orders,
        character=exponents,
        witness=witness,
        witness_info={"type": "character", "exponents": list(exponents), "real": character.is_real()},
        verification=verification,
    )


def torsion_annihilator(n: int) -> Tuple[GroupRingElement, GroupRingElement]:
    """
    The zero divisors (1 + g + ... + g^(n-1)) and (1 - g) of C[Z_n].

    Raises:
        InvalidInputError: if n < 2
        VerificationError: if their convolution is not exactly zero
    """
    if n < 2:
        raise InvalidInputError(f"torsion needs n >= 2, got {n}")
    G = cyclic(n)
    geometric = GroupRingElement(G, {(j,): 1 for j in range(n)})
    difference = GroupRingElement(G, {(0,): 1, (1,): -1})
    product = convolve(geometric, difference)
    if not product.is_zero():
        raise VerificationError(f"(1 + g + ... + g^{n - 1}) * (1 - g) = {product} in C[Z_{n}]")
    return geometric, difference


# ---------------------------------------------------------------------------
# Z x finite
# ---------------------------------------------------------------------------

def split_orders(orders: Sequence[int]) -> Tuple[Optional[int], Tuple[int, ...]]:
    """
    Locate the Z factor (order 0) in a product description.

    Returns:
        (index of the Z factor or None, orders of the finite factors)

    Raises:
        UnsupportedGroupError: for two or more Z factors
    """
    z_positions = [i for i, n in enumerate(orders) if n == 0]
    if len(z_positions) >= 2:
        raise UnsupportedGroupError(
            f"Z^{len(z_positions)}" + "".join(f" x Z_{n}" for n in orders if n),
            "torsion-free rank >= 2 needs multivariate elimination",
        )
    finite = tuple(n for n in orders if n != 0)
    return (z_positions[0] if z_positions else None), finite


def mixed_pompeiu_check(
    orders: Sequence[int], sets: Sequence[Iterable], config: Optional[PompeiuConfig] = None
) -> DecisionReport:
    """
    Pompeiu decision on Z x (finite abelian), the Z factor marked by order 0.

    A character of the product is z0^m * chi(h). For each character chi of the
    finite part (lexicographic order) the weighted transforms
    P_K(z) = sum_{(m, h) in K} chi(h) z^(m - min) must share a root z0 != 0.
    Pure Z and pure finite descriptions are delegated.

    Raises:
        UnsupportedGroupError: for Z^d with d >= 2 or an oversized finite part
        InvalidInputError: for malformed sets
    """
    config = config or DEFAULT_CONFIG
    orders = tuple(orders)
    z_index, finite_orders = split_orders(orders)
    if z_index is None:
        return finite_abelian_pompeiu_check(FiniteAbelianGroup(finite_orders), sets, config)
    if not finite_orders:
        return z_pompeiu_check([[g[0] if isinstance(g, (tuple, list)) else g for g in K] for K in sets], config)
    G = FiniteAbelianGroup(finite_orders)
    if G.size > config.max_group_size:
        raise UnsupportedGroupError(str(G), f"order {G.size} exceeds the bound {config.max_group_size}")
    if not sets:
        raise InvalidInputError("the family of sets is empty")

    family = []
    for K in sets:
        members = []
        for g in K:
            g = tuple(g)
            if len(g) != len(orders):
                raise InvalidInputError(f"{g!r} does not have {len(orders)} coordinates")
            rest = g[:z_index] + g[z_index + 1:]
            members.append((g[z_index], G.validate(rest)))
        if not members:
            raise InvalidInputError("sets in a family must be nonempty")
        family.append(tuple(sorted(set(members))))

    report_family = tuple(
        tuple(rest[:z_index] + (m,) + rest[z_index:] for m, rest in K) for K in family
    )
    for character in characters(G):
        found = _common_root_for_character(character, family, config)
        if found is None:
            continue
        verification = _mixed_witness_check(G, character, found, family, config)
        logger.info(f"{orders}: character {character.exponents} with z0={found} annihilates every set")
        return DecisionReport(
            group="finite-abelian",
            family=report_family,
            pompeiu=False,
            orders=orders,
            common_root=Root(found, 1),
            character=character.exponents,
            witness_info={"type": "mixed-character", "exponents": list(character.exponents),
                          "range": list(config.witness_range)},
            verification=verification,
        )
    return DecisionReport(group="finite-abelian", family=report_family, pompeiu=True, orders=orders)


def _weighted_transform(character: Character, K) -> np.ndarray:
    shift = min(m for m, _ in K)
    coeffs = np.zeros(max(m for m, _ in K) - shift + 1, dtype=complex)
    for m, h in K:
        coeffs[m - shift] += character(h)
    return coeffs


def _common_root_for_character(character: Character, family, config: PompeiuConfig) -> Optional[complex]:
    transforms = []
    for K in family:
        coeffs = _weighted_transform(character, K)
        # |chi(h)| = 1, so the cancellation-free size of the transform is |K|
        coeffs = np.where(np.abs(coeffs) <= config.tol * len(K), 0, coeffs)
        if np.any(coeffs != 0):
            transforms.append(np.trim_zeros(coeffs, "b"))
    if not transforms:
        return 1 + 0j
    if any(c.size == 1 for c in transforms):
        return None
    pivot = min(transforms, key=lambda c: c.size)
    candidates = [z for z in numeric_roots(pivot, config.root_tol, config.max_root_iterations) if abs(z) > config.tol]
    for z in sorted(candidates, key=root_sort_key):
        if all(relative_residual(c, z) <= config.tol for c in transforms):
            return z
    return None


def _mixed_witness_check(G, character, z0, family, config) -> Verification:
    lo, hi = config.witness_range
    worst, worst_relative = 0.0, 0.0
    for K in family:
        low, high = min(m for m, _ in K), max(m for m, _ in K)
        for shift in range(lo - low, hi - high + 1):
            for g in G.elements():
                terms = [z0 ** (shift + m) * character(G.multiply(g, h)) for m, h in K]
                total = abs(sum(terms))
                scale = sum(abs(t) for t in terms)
                worst = max(worst, total)
                worst_relative = max(worst_relative, total / scale if scale else total)
    return Verification(
        translate_residual=worst,
        relative_residual=worst_relative,
        passed=worst_relative <= config.tol,
        exact=False,
        tol=config.tol,
        value_range=(lo, hi),
    )
