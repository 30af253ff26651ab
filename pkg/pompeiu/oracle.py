"""
Finite Linear-Algebra Oracles

Exact rank computations over Q that check the decision procedures on a finite
shadow of F_k: a function on a ball of radius R is a vector indexed by the
ball's words, and each translate sum with all its data inside the ball is a
linear constraint on that vector.

- forces_zero_on_inner_ball: do the constraints force f = 0 near the identity?
- constraints_imply: is every constraint of one system a combination of another's?
- kernel_sample: a random exact solution of a constraint system
"""

import logging
import random
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .errors import InvalidInputError
from .exact import ComplexRational
from .free_group import BallFunction, ReducedWord, ball, multiply, sphere_size, support_radius
from .radial import RadialElement, chi

logger = logging.getLogger(__name__)

Row = Dict[int, Fraction]


def ball_index(k: int, radius: int) -> Dict[ReducedWord, int]:
    """Column index of every word of the ball, in canonical ball order."""
    return {w: i for i, w in enumerate(ball(k, radius))}


def _real(c: ComplexRational) -> Fraction:
    if c.im:
        raise InvalidInputError(f"oracle rows need rational coefficients, got {c}")
    return c.re


def translate_constraint_rows(elements: Sequence, k: int, radius: int) -> List[Row]:
    """
    One row per center g with |g| + m <= radius: sum_y alpha(y) f(gy) = 0.

    Args:
        elements: RadialElements or GroupRingElements over F_k
        k: Generator count
        radius: Ball radius

    Returns:
        Sparse rows {column: coefficient}
    """
    index = ball_index(k, radius)
    rows: List[Row] = []
    for alpha in elements:
        alpha = alpha.expand() if isinstance(alpha, RadialElement) else alpha
        m = support_radius(alpha)
        terms = [(y, _real(c)) for y, c in alpha.terms.items()]
        for g in ball(k, radius - m) if m <= radius else ():
            row: Row = {}
            for y, c in terms:
                j = index[multiply(g, y)]
                row[j] = row.get(j, Fraction(0)) + c
            rows.append({j: c for j, c in row.items() if c})
    return rows


def mean_value_rows(k: int, n: int, radius: int) -> List[Row]:
    """Rows of sum_{y in E_n} f(xy) - e_n f(x) = 0 for |x| <= radius - n."""
    element = chi(k, n) - chi(k, 0).scale(sphere_size(k, n))
    return translate_constraint_rows([element], k, radius)


def _matrix(rows: Sequence[Row], ncols: int) -> DomainMatrix:
    data = {
        i: {j: QQ(c.numerator, c.denominator) for j, c in row.items()}
        for i, row in enumerate(rows)
        if row
    }
    data = {new_i: data[i] for new_i, i in enumerate(sorted(data))}
    return DomainMatrix(data, (len(data), ncols), QQ)


def rank(rows: Sequence[Row], ncols: int) -> int:
    """Exact rank over Q."""
    if not any(rows):
        return 0
    return _matrix(rows, ncols).rank()


def constraints_imply(rows: Sequence[Row], consequences: Sequence[Row], ncols: int) -> bool:
    """True iff every consequence row lies in the row space of rows."""
    return rank(list(rows) + list(consequences), ncols) == rank(rows, ncols)


def forces_zero_on_inner_ball(elements: Sequence, k: int, radius: int, inner_radius: int) -> bool:
    """
    True iff every f on the ball whose translate sums (with data in the ball)
    all vanish is zero on the inner ball.

    Equivalent to each unit vector of the inner ball lying in the row space.
    """
    rows = translate_constraint_rows(elements, k, radius)
    units = [{i: Fraction(1)} for i in range(len(ball(k, inner_radius)))]
    ncols = len(ball(k, radius))
    base = rank(rows, ncols)
    extended = rank(rows + units, ncols)
    logger.debug(f"oracle k={k} R={radius}: {len(rows)} rows, rank {base}, with units {extended}")
    return base == extended


def satisfies_rows(rows: Sequence[Row], f: BallFunction) -> bool:
    """Exact check that f satisfies every row."""
    values = list(f.values.values())
    return all(sum((c * values[j] for j, c in row.items()), ComplexRational()).is_zero() for row in rows)


def kernel_sample(
    rows: Sequence[Row], k: int, radius: int, seed: Optional[int] = None, bound: int = 5
) -> BallFunction:
    """
    A random exact solution of the constraint system on the ball.

    Free variables of the reduced row echelon form get random integers in
    [-bound, bound]; pivot variables are solved for.
    """
    rng = random.Random(seed)
    ncols = len(ball(k, radius))
    solution = [Fraction(rng.randint(-bound, bound)) for _ in range(ncols)]
    if any(rows):
        reduced, pivots = _matrix(rows, ncols).rref()
        entries = reduced.to_sparse().rep
        pivot_set = set(pivots)
        for i, p in enumerate(pivots):
            row = entries.get(i, {})
            solution[p] = -sum(
                (Fraction(int(v.numerator), int(v.denominator)) * solution[j] for j, v in row.items() if j not in pivot_set),
                Fraction(0),
            )
    words = ball(k, radius)
    return BallFunction(k, radius, dict(zip(words, solution)))
