#!/usr/bin/env python3
"""
Test suite for free group arithmetic

Validates word reduction, sphere enumeration, group-ring convolution and the
ball-function operations against direct definitions.
"""

import sys
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st
from sympy.combinatorics.free_groups import free_group

from pompeiu.errors import BallTooSmallError, InvalidInputError
from pompeiu.exact import ComplexRational
from pompeiu.free_group import (
    BallFunction,
    FreeGroup,
    GroupRingElement,
    ReducedWord,
    ball,
    ball_size,
    conj,
    convolve,
    convolve_on_ball,
    format_word,
    identity,
    invert,
    left_translate,
    multiply,
    pairing,
    parse_word,
    reduce,
    sphere,
    sphere_size,
    tilde,
    translate_sums,
)

F2 = FreeGroup(2)


def w(text: str, k: int = 2) -> ReducedWord:
    return parse_word(text, k)


# Strategies: words of F_2 up to length 3, small exact coefficients.
letters = st.sampled_from([1, -1, 2, -2])
words = st.lists(letters, max_size=3).map(lambda ls: reduce(ls, 2))
coefficients = st.builds(
    ComplexRational,
    st.fractions(min_value=-3, max_value=3, max_denominator=4),
    st.integers(-2, 2),
)
elements = st.dictionaries(words, coefficients, max_size=5).map(lambda terms: GroupRingElement(F2, terms))


class TestReducedWords:
    def test_reduce(self):
        assert reduce([1, -1], 2) == identity(2)
        assert reduce([1, 2, -2, 1], 2) == ReducedWord((1, 1), 2)
        assert reduce([1, 2, -2, -1, 2], 2) == ReducedWord((2,), 2)

    def test_reduce_is_idempotent(self):
        once = reduce([2, 1, -1, -2, 1, 1], 2)
        assert reduce(once.letters, 2) == once

    def test_reduce_rejects_bad_letters(self):
        with pytest.raises(InvalidInputError):
            reduce([3], 2)
        with pytest.raises(InvalidInputError):
            reduce([0], 2)

    def test_multiply_cancels_at_junction(self):
        assert multiply(w("ab"), w("Ba")) == w("aa")
        assert multiply(w("ab"), w("BA")) == identity(2)
        assert multiply(identity(2), w("aB")) == w("aB")

    def test_multiply_mismatched_groups(self):
        with pytest.raises(InvalidInputError):
            multiply(w("a", 2), w("a", 3))

    def test_inverse(self):
        x = w("abA")
        assert invert(x) == w("aBA")
        assert multiply(x, invert(x)).is_identity()

    @settings(deadline=None, max_examples=100)
    @given(words, words, words)
    def test_associativity(self, x, y, z):
        assert multiply(multiply(x, y), z) == multiply(x, multiply(y, z))


raw_letters = st.lists(letters, max_size=8)


def to_sympy(word: ReducedWord, generators):
    result = generators[0] ** 0
    for letter in word.letters:
        result = result * generators[abs(letter) - 1] ** (1 if letter > 0 else -1)
    return result


def from_sympy(element, symbols) -> tuple:
    return tuple(
        symbols.index(s) + 1 if s.is_Symbol else -(symbols.index(-s) + 1) for s in element.letter_form
    )


class TestAgainstSympyFreeGroup:
    @settings(deadline=None, max_examples=60)
    @given(raw_letters, raw_letters)
    def test_reduce_multiply_invert(self, xs, ys):
        group, a, b = free_group("a b")
        generators = (a, b)
        x, y = reduce(xs, 2), reduce(ys, 2)
        raw = to_sympy(ReducedWord(tuple(xs), 2), generators)
        assert x.letters == from_sympy(raw, group.symbols)
        product = to_sympy(x, generators) * to_sympy(y, generators)
        assert multiply(x, y).letters == from_sympy(product, group.symbols)
        assert invert(x).letters == from_sympy(to_sympy(x, generators) ** -1, group.symbols)


class TestSpheres:
    @pytest.mark.parametrize("k", [2, 3])
    def test_sphere_sizes(self, k):
        for n in range(0, 8):
            words_n = sphere(k, n)
            assert len(words_n) == sphere_size(k, n)
            assert len(set(words_n)) == len(words_n)
            assert all(x.length() == n for x in words_n)

    def test_small_spheres(self):
        assert sphere(2, 0) == (identity(2),)
        assert [format_word(x) for x in sphere(2, 1)] == ["a", "A", "b", "B"]
        assert len(sphere(2, 2)) == 12

    def test_lexicographic_order(self):
        texts = [format_word(x) for x in sphere(2, 2)]
        assert texts[:3] == ["aa", "ab", "aB"]
        assert "aA" not in texts

    def test_sphere_requires_two_generators(self):
        with pytest.raises(InvalidInputError):
            sphere(1, 2)
        with pytest.raises(InvalidInputError):
            FreeGroup(1)
        with pytest.raises(InvalidInputError):
            FreeGroup(27)

    def test_ball(self):
        assert len(ball(2, 3)) == 1 + 4 + 12 + 36 == ball_size(2, 3)
        assert ball(2, 1)[0].is_identity()


class TestTextForm:
    def test_identity_token(self):
        assert format_word(identity(4)) == "e"
        assert format_word(identity(5)) == "1"
        assert parse_word("1", 5).is_identity()
        assert parse_word("e", 2).is_identity()
        assert parse_word("e", 5) == ReducedWord((5,), 5)

    def test_parse_reduces(self):
        assert parse_word("abBA", 2).is_identity()

    def test_parse_rejects_unknown_letters(self):
        with pytest.raises(InvalidInputError):
            parse_word("ac", 2)
        with pytest.raises(InvalidInputError):
            parse_word("a1", 2)


class TestGroupRing:
    def test_zero_coefficients_dropped(self):
        f = GroupRingElement(F2, {w("a"): 0, w("b"): 2})
        assert f.support() == (w("b"),)
        assert f(w("a")) == 0

    def test_convolution_examples(self):
        a, b = w("a"), w("b")
        assert convolve(GroupRingElement.delta(F2), GroupRingElement.delta(F2, a, 3)) == GroupRingElement.delta(F2, a, 3)
        product = convolve(GroupRingElement.delta(F2, a), GroupRingElement.delta(F2, b))
        assert product == GroupRingElement.delta(F2, w("ab"))
        chi1 = GroupRingElement.indicator(F2, sphere(2, 1))
        square = convolve(chi1, chi1)
        assert square(identity(2)) == 4
        assert all(square(x) == 1 for x in sphere(2, 2))
        assert len(square.support()) == 13

    def test_mismatched_groups(self):
        with pytest.raises(InvalidInputError):
            convolve(GroupRingElement.delta(F2), GroupRingElement.delta(FreeGroup(3)))

    def test_left_translate_and_tilde(self):
        f = GroupRingElement(F2, {w("ab"): 5})
        shifted = left_translate(w("a"), f)
        assert shifted == GroupRingElement(F2, {w("b"): 5})
        assert tilde(f) == GroupRingElement(F2, {w("BA"): 5})

    def test_pairing_conjugates_second_argument(self):
        f = GroupRingElement(F2, {w("a"): ComplexRational(0, 1)})
        assert pairing(f, f) == 1

    @settings(deadline=None, max_examples=60)
    @given(elements, elements, elements)
    def test_convolution_associative(self, alpha, beta, gamma):
        assert convolve(convolve(alpha, beta), gamma) == convolve(alpha, convolve(beta, gamma))

    @settings(deadline=None, max_examples=40)
    @given(elements, elements)
    def test_convolution_as_translated_pairing(self, alpha, f):
        # (alpha * f~)(g) = <L_g alpha, conj f>
        conv = convolve(alpha, tilde(f))
        for g in ball(2, 6):
            assert conv(g) == pairing(left_translate(g, alpha), conj(f))

    @settings(deadline=None, max_examples=40)
    @given(elements, st.sets(words, min_size=1, max_size=4))
    def test_translate_sums_match_convolution(self, f, K):
        # sum over x in gK of f(x) = (chi_K * f~)(g^-1)
        chi_K = GroupRingElement.indicator(F2, K)
        conv = convolve(chi_K, tilde(f))
        for g in ball(2, 4):
            direct = sum((f(multiply(g, y)) for y in K), ComplexRational())
            assert direct == conv(invert(g))


class TestBallFunctions:
    def test_requires_every_word(self):
        with pytest.raises(InvalidInputError):
            BallFunction(2, 1, {identity(2): 1})

    def test_rejects_floats_in_exact_mode(self):
        with pytest.raises(InvalidInputError):
            BallFunction.constant(2, 1, 0.5)

    def test_convolve_on_ball_examples(self):
        delta = GroupRingElement.delta(F2)
        ones = BallFunction.constant(2, 3)
        assert convolve_on_ball(delta, ones) == ones
        chi1 = GroupRingElement.indicator(F2, sphere(2, 1))
        result = convolve_on_ball(chi1, ones)
        assert result.radius == 2
        assert result == BallFunction.constant(2, 2, 4)

    def test_convolve_on_ball_too_small(self):
        chi2 = GroupRingElement.indicator(F2, sphere(2, 2))
        with pytest.raises(BallTooSmallError) as excinfo:
            convolve_on_ball(chi2, BallFunction.constant(2, 1))
        assert excinfo.value.required == 2
        assert excinfo.value.actual == 1

    def test_convolve_on_ball_matches_group_ring(self):
        alpha = GroupRingElement(F2, {w("a"): 2, w("bA"): Fraction(-1, 3)})
        f = GroupRingElement(F2, {w("ab"): 1, w("B"): ComplexRational(1, 1), w("e"): 5})
        on_ball = convolve_on_ball(alpha, BallFunction.from_group_ring(f, 5))
        assert on_ball == BallFunction.from_group_ring(convolve(alpha, f), 3)

    def test_translate_sums_are_convolution_of_tilde(self):
        alpha = GroupRingElement(F2, {w("a"): 1, w("Ab"): 3})
        f = BallFunction.tabulate(2, 4, lambda x: len(x.letters) ** 2 - x.letters.count(1))
        sums = translate_sums(alpha, f)
        conv = convolve_on_ball(alpha, f.tilde())
        for g in sums.words():
            assert sums[g] == conv[invert(g)]

    def test_restrict(self):
        f = BallFunction.tabulate(2, 3, lambda x: x.length())
        assert f.restrict(1) == BallFunction.tabulate(2, 1, lambda x: x.length())
        with pytest.raises(BallTooSmallError):
            f.restrict(4)

    def test_csv_exact(self, tmp_path):
        f = BallFunction.tabulate(2, 2, lambda x: ComplexRational(Fraction(x.length(), 3), -x.length()))
        path = f.to_csv(tmp_path / "f.csv")
        lines = path.read_text().splitlines()
        assert lines[0] == "word,re,im"
        assert lines[1] == "e,0/1,0/1"
        assert lines[2] == "a,1/3,-1/1"
        assert BallFunction.from_csv(path, 2) == f

    def test_csv_floating(self, tmp_path):
        f = BallFunction.tabulate(2, 2, lambda x: complex(0.1 * x.length(), 1 / 3), exact=False)
        back = BallFunction.from_csv(f.to_csv(tmp_path / "g.csv"), 2)
        assert not back.exact
        assert back == f

    def test_csv_rejects_bad_header(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("w,x,y\ne,0/1,0/1\n")
        with pytest.raises(InvalidInputError):
            BallFunction.from_csv(path, 2)


def main():
    """Main entry point"""
    sys.exit(pytest.main([__file__, "-v"]))


if __name__ == "__main__":
    main()
