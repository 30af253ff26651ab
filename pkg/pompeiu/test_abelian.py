#!/usr/bin/env python3
"""
Test suite for abelian Pompeiu decisions

Validates Z transforms, exponential witnesses, character enumeration on
finite abelian groups, the torsion zero divisors and Z x finite products.
"""

import cmath
import random
import sys

import pytest
from hypothesis import given, settings, strategies as st

from pompeiu.abelian import (
    Character,
    FiniteAbelianGroup,
    characters,
    cyclic,
    exponential_witness_check,
    finite_abelian_pompeiu_check,
    finite_translate_sums,
    mixed_pompeiu_check,
    split_orders,
    torsion_annihilator,
    z_pompeiu_check,
    z_transform,
)
from pompeiu.errors import InvalidInputError, UnsupportedGroupError
from pompeiu.free_group import GroupRingElement, convolve
from pompeiu.polyalg import IntPolynomial, gcd, gcd_many
from pompeiu.config import PompeiuConfig

int_sets = st.sets(st.integers(-6, 6), min_size=1, max_size=4)


class TestZTransform:
    def test_examples(self):
        assert z_transform({0}) == (IntPolynomial.constant(1), 0)
        assert z_transform({0, 1, 2}) == (IntPolynomial((1, 1, 1)), 0)
        assert z_transform({5, 6, 7}) == (IntPolynomial((1, 1, 1)), 5)
        assert z_transform({-2, 1}) == (IntPolynomial((1, 0, 0, 1)), -2)

    def test_empty_set(self):
        with pytest.raises(InvalidInputError):
            z_transform(set())


class TestZDecision:
    def test_coprime_transforms(self):
        report = z_pompeiu_check([{0, 1, 2}, {0, 1}])
        assert report.pompeiu
        assert report.gcd == IntPolynomial.constant(1)
        assert report.common_root is None

    def test_cube_root_witness(self):
        report = z_pompeiu_check([{0, 1, 2}, {0, 2, 4}])
        assert not report.pompeiu
        assert report.gcd == IntPolynomial((1, 1, 1))
        assert abs(report.common_root.value - cmath.exp(2j * cmath.pi / 3)) < 1e-12
        assert report.verification.passed
        assert report.verification.relative_residual < 1e-9
        assert report.verification.translate_residual < 1e-9
        assert report.verification.value_range == (-50, 50)
        assert report.witness_info == {"type": "exponential", "range": [-50, 50]}

    def test_single_set(self):
        report = z_pompeiu_check([{0, 1, 2}])
        assert not report.pompeiu
        assert report.verified

    def test_empty_family(self):
        with pytest.raises(InvalidInputError):
            z_pompeiu_check([])

    @settings(deadline=None, max_examples=40)
    @given(st.lists(int_sets, min_size=1, max_size=3), st.lists(st.integers(-20, 20), min_size=3, max_size=3))
    def test_translation_invariance(self, family, shifts):
        moved = [{g + shifts[i] for g in K} for i, K in enumerate(family)]
        before, after = z_pompeiu_check(family), z_pompeiu_check(moved)
        assert before.pompeiu == after.pompeiu
        assert before.gcd == after.gcd
        assert after.verified


class TestExponentialWitness:
    def test_cube_root(self):
        check = exponential_witness_check(cmath.exp(2j * cmath.pi / 3), [{0, 1, 2}], (-50, 50))
        assert check.passed
        assert check.translate_residual < 1e-9

    def test_constant_function_fails(self):
        check = exponential_witness_check(1, [{0, 1}])
        assert not check.passed
        assert check.translate_residual == 2

    def test_alternating(self):
        check = exponential_witness_check(-1, [{0, 1}])
        assert check.passed
        assert check.translate_residual == 0

    def test_zero_is_not_a_character(self):
        with pytest.raises(InvalidInputError):
            exponential_witness_check(0, [{0}])


class TestFiniteAbelianGroups:
    def test_group_arithmetic(self):
        G = FiniteAbelianGroup((2, 3))
        assert G.size == 6
        assert G.multiply((1, 2), (1, 2)) == (0, 1)
        assert G.invert((1, 1)) == (1, 2)
        assert list(G.elements())[:3] == [(0, 0), (0, 1), (0, 2)]
        assert str(G) == "Z_2 x Z_3"

    def test_validation(self):
        with pytest.raises(InvalidInputError):
            FiniteAbelianGroup((1,))
        with pytest.raises(InvalidInputError):
            cyclic(3).validate((3,))
        assert cyclic(3).validate(2) == (2,)

    def test_characters(self):
        chars = list(characters(FiniteAbelianGroup((2, 2))))
        assert [c.exponents for c in chars] == [(0, 0), (0, 1), (1, 0), (1, 1)]
        assert all(c.is_real() for c in chars)
        sign = Character((1,), (2,))
        assert sign.real_value((1,)) == -1
        assert abs(Character((1,), (4,))((1,)) - 1j) < 1e-15
        with pytest.raises(InvalidInputError):
            Character((1,), (3,)).real_value((1,))


class TestFiniteDecision:
    def test_z2_full_set_has_signed_witness(self):
        G = cyclic(2)
        report = finite_abelian_pompeiu_check(G, [[0, 1]])
        assert not report.pompeiu
        assert report.character == (1,)
        assert report.witness == GroupRingElement(G, {(0,): 1, (1,): -1})
        assert report.verification.exact and report.verification.passed
        assert report.verification.translate_residual == 0

    @pytest.mark.parametrize("n", [2, 5, 12])
    def test_singletons_are_pompeiu(self, n):
        assert finite_abelian_pompeiu_check(cyclic(n), [[n - 1]]).pompeiu

    def test_z3_two_pairs(self):
        assert finite_abelian_pompeiu_check(cyclic(3), [[0, 1], [0, 2]]).pompeiu

    def test_complex_character_witness(self):
        report = finite_abelian_pompeiu_check(cyclic(3), [[0, 1, 2]])
        assert not report.pompeiu
        assert report.character == (1,)
        assert report.witness is None
        assert not report.verification.exact
        assert report.verification.passed

    @pytest.mark.parametrize("n", range(2, 13))
    def test_full_group_copies_are_not_pompeiu(self, n):
        everything = list(range(n))
        report = finite_abelian_pompeiu_check(cyclic(n), [everything, everything])
        assert not report.pompeiu
        assert report.character == (1,)
        assert report.verified

    def test_product_group(self):
        G = FiniteAbelianGroup((2, 3))
        report = finite_abelian_pompeiu_check(G, [[(0, 0), (1, 0)], [(0, 0), (1, 1)]])
        assert not report.pompeiu
        assert report.character == (1, 0)
        assert report.verified

    def test_group_too_large(self):
        config = PompeiuConfig(max_group_size=10)
        with pytest.raises(UnsupportedGroupError):
            finite_abelian_pompeiu_check(FiniteAbelianGroup((4, 4)), [[(0, 0)]], config)

    def test_out_of_range_element(self):
        with pytest.raises(InvalidInputError):
            finite_abelian_pompeiu_check(cyclic(4), [[4]])

    def test_agrees_with_roots_of_unity_criterion(self):
        rng = random.Random(12)
        for n in range(2, 13):
            cyclotomic = IntPolynomial((-1,) + (0,) * (n - 1) + (1,))
            for _ in range(15):
                family = [rng.sample(range(n), rng.randint(1, n)) for _ in range(rng.randint(1, 3))]
                common = gcd_many([z_transform(K)[0] for K in family])
                expected_pompeiu = gcd(common, cyclotomic).degree == 0
                report = finite_abelian_pompeiu_check(cyclic(n), family)
                assert report.pompeiu == expected_pompeiu, (n, family)
                assert report.verified

    def test_translate_sums_of_real_witness(self):
        G = cyclic(4)
        witness = GroupRingElement(G, {(0,): 1, (1,): -1, (2,): 1, (3,): -1})
        sums = finite_translate_sums(G, [0, 1], witness)
        assert all(v == 0 for v in sums.values())


class TestTorsion:
    @pytest.mark.parametrize("n", range(2, 13))
    def test_zero_divisors(self, n):
        geometric, difference = torsion_annihilator(n)
        assert len(geometric.support()) == n
        assert convolve(geometric, difference).is_zero()
        assert convolve(difference, geometric).is_zero()

    def test_rejects_trivial_group(self):
        with pytest.raises(InvalidInputError):
            torsion_annihilator(1)


class TestProducts:
    def test_split_orders(self):
        assert split_orders((0, 2, 3)) == (0, (2, 3))
        assert split_orders((2, 3)) == (None, (2, 3))
        with pytest.raises(UnsupportedGroupError):
            split_orders((0, 0))

    def test_z_squared_is_unsupported(self):
        with pytest.raises(UnsupportedGroupError):
            mixed_pompeiu_check((0, 0), [[(0, 0)]])

    def test_pure_descriptions_are_delegated(self):
        assert mixed_pompeiu_check((0,), [[0, 1, 2], [0, 2, 4]]).group == "z"
        assert mixed_pompeiu_check((2,), [[(0,), (1,)]]).character == (1,)

    def test_sign_character_kills_z_direction(self):
        report = mixed_pompeiu_check((0, 2), [[(0, 0), (0, 1)]])
        assert not report.pompeiu
        assert report.character == (1,)
        assert report.common_root.value == 1
        assert report.verified

    def test_trivial_character_with_alternating_z(self):
        report = mixed_pompeiu_check((0, 3), [[(0, 0), (1, 0)]])
        assert not report.pompeiu
        assert report.character == (0,)
        assert abs(report.common_root.value + 1) < 1e-12
        assert report.verified

    def test_singleton_is_pompeiu(self):
        report = mixed_pompeiu_check((0, 3), [[(5, 2)]])
        assert report.pompeiu
        assert report.orders == (0, 3)

    def test_z_factor_in_second_position(self):
        report = mixed_pompeiu_check((3, 0), [[(0, 0), (0, 1)]])
        assert not report.pompeiu
        assert report.family == (((0, 0), (0, 1)),)


def main():
    """Main entry point"""
    sys.exit(pytest.main([__file__, "-v"]))


if __name__ == "__main__":
    main()
