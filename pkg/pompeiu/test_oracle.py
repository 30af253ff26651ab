#!/usr/bin/env python3
"""
Test suite for the finite linear-algebra oracles

Validates, by exact rank computations on truncated Cayley balls, that Pompeiu
decisions force vanishing near the identity, that not-Pompeiu witnesses solve
the constraint systems, and the two-radius mean-value containments.
"""

import sys
from fractions import Fraction

import pytest

from pompeiu.decision import RadialSetFamily, free_pompeiu_check, pompeiu_inversion
from pompeiu.errors import InvalidInputError
from pompeiu.exact import ComplexRational
from pompeiu.free_group import ball
from pompeiu.oracle import (
    ball_index,
    constraints_imply,
    forces_zero_on_inner_ball,
    kernel_sample,
    mean_value_rows,
    rank,
    satisfies_rows,
    translate_constraint_rows,
)
from pompeiu.radial import chi, expand_to_ball, radialize, spherical

SPHERE_PAIRS = [((1,), (2,)), ((1,), (3,)), ((2,), (3,))]
MULTI_RADIUS_FAMILIES = [((1,), (1, 2)), ((1, 3), (2,)), ((2, 3), (1, 2, 3))]
INNER_RADIUS = 2


def certificate_radius(family: RadialSetFamily, inner_radius: int) -> int:
    """Ball radius on which f = sum mu_K * (f * chi_K) reaches every point of the inner ball."""
    mus = pompeiu_inversion(family)
    return inner_radius + max(radii[-1] + max(mu.degree, 0) for radii, mu in zip(family.sets, mus))


def check_family(family: RadialSetFamily) -> bool:
    report = free_pompeiu_check(family, radius=6)
    if report.pompeiu:
        radius = certificate_radius(family, INNER_RADIUS)
        assert radius <= 7
        assert forces_zero_on_inner_ball(family.elements(), 2, radius, INNER_RADIUS)
    else:
        rows = translate_constraint_rows(family.elements(), 2, 6)
        assert satisfies_rows(rows, report.witness)
    return report.pompeiu


class TestRows:
    def test_ball_index_is_canonical(self):
        index = ball_index(2, 3)
        assert tuple(index) == ball(2, 3)
        assert index[ball(2, 3)[0]] == 0

    def test_rows_for_first_sphere(self):
        rows = translate_constraint_rows([chi(2, 1)], 2, 2)
        assert len(rows) == len(ball(2, 1))
        assert all(len(row) == 4 and set(row.values()) == {Fraction(1)} for row in rows)

    def test_support_larger_than_ball(self):
        assert translate_constraint_rows([chi(2, 3)], 2, 2) == []

    def test_complex_coefficients_rejected(self):
        with pytest.raises(InvalidInputError):
            translate_constraint_rows([chi(2, 1).scale(ComplexRational(0, 1))], 2, 2)

    def test_rank(self):
        assert rank([], 3) == 0
        assert rank([{0: Fraction(1)}, {0: Fraction(2)}], 3) == 1
        assert rank([{0: Fraction(1), 1: Fraction(1)}, {1: Fraction(1)}, {0: Fraction(1)}], 3) == 2


class TestDecisionSoundness:
    @pytest.mark.parametrize("sets", SPHERE_PAIRS)
    def test_two_sphere_families_on_radius_six(self, sets):
        family = RadialSetFamily(2, sets)
        report = free_pompeiu_check(family, radius=6)
        forced = forces_zero_on_inner_ball(family.elements(), 2, 6, INNER_RADIUS)
        assert forced == report.pompeiu
        check_family(family)

    @pytest.mark.parametrize("sets", MULTI_RADIUS_FAMILIES)
    def test_multi_radius_families_on_certificate_radius(self, sets):
        check_family(RadialSetFamily(2, sets))

    def test_union_of_spheres_needs_a_larger_ball(self):
        family = RadialSetFamily(2, ((2, 3), (1, 2, 3)))
        assert check_family(family)
        assert certificate_radius(family, INNER_RADIUS) == 7
        assert not forces_zero_on_inner_ball(family.elements(), 2, 6, INNER_RADIUS)

    def test_identity_set_forces_everything(self):
        assert forces_zero_on_inner_ball([chi(2, 0)], 2, 3, 3)


class TestMeanValueContainment:
    def test_two_and_three_imply_harmonic(self):
        rows = mean_value_rows(2, 2, 6) + mean_value_rows(2, 3, 6)
        harmonic = mean_value_rows(2, 1, 4)
        assert constraints_imply(rows, harmonic, len(ball(2, 6)))

    def test_two_and_four_do_not(self):
        rows = mean_value_rows(2, 2, 6) + mean_value_rows(2, 4, 6)
        harmonic = mean_value_rows(2, 1, 4)
        assert not constraints_imply(rows, harmonic, len(ball(2, 6)))
        phi = spherical(2, -4, 6)
        assert satisfies_rows(rows, phi)
        assert not satisfies_rows(harmonic, phi)


class TestKernelSample:
    def test_solves_the_system(self):
        rows = mean_value_rows(2, 2, 5)
        f = kernel_sample(rows, 2, 5, seed=3)
        assert f.exact and f.radius == 5
        assert satisfies_rows(rows, f)
        assert kernel_sample(rows, 2, 5, seed=3) == f

    def test_radialization_stays_in_the_kernel(self):
        rows = mean_value_rows(2, 2, 5)
        for seed in range(3):
            f = kernel_sample(rows, 2, 5, seed=seed)
            assert satisfies_rows(rows, expand_to_ball(radialize(f), 5))

    def test_no_rows(self):
        f = kernel_sample([], 2, 1, seed=0, bound=0)
        assert f.is_zero()


def main():
    """Main entry point"""
    sys.exit(pytest.main([__file__, "-v"]))


if __name__ == "__main__":
    main()
