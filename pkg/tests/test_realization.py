import random
from fractions import Fraction

import pytest

from loopsl2 import (
    RequiresExtensionError,
    TLaurent,
    act_h,
    apply_sym,
    classify_hom,
    elem_sym_values,
    eval_eta,
    generator,
    graded_image_period,
    make_element,
    make_sym,
    power_sum,
    psi,
    sym_mul,
    sym_one,
    theta,
    theta_inv,
)
from loopsl2.checks import psi_reaches_basis

half = Fraction(1, 2)


def rand_layer_element(rng, n, lo=-3, hi=3, nterms=3):
    return make_element([(tuple(rng.randint(lo, hi) for _ in range(n)),
                          rng.randint(-4, 4)) for _ in range(nterms)])


class TestPsi:
    def test_single_letter(self):
        assert psi(2, (1,)) == -2 * power_sum(2, 1)
        assert psi(2, (1,)) == make_sym(2, [((1, 0), -4)])

    def test_two_letters(self):
        assert psi(2, (1, 1)) == make_sym(2, [((2, 0), 8), ((1, 1), 8)])

    def test_empty_word_is_identity(self):
        for n in (1, 2, 3):
            assert psi(n, ()) == sym_one(n)

    def test_degree_is_letter_sum(self):
        p = psi(3, (2, -1, 3))
        assert {sum(g) for g in p.terms} == {4}

    def test_letters_commute(self):
        rng = random.Random(3)
        for _ in range(10):
            word = [rng.randint(-3, 3) for _ in range(3)]
            shuffled = list(word)
            rng.shuffle(shuffled)
            assert psi(2, word) == psi(2, shuffled)


class TestTheta:
    def test_monomial_image(self):
        assert theta(make_element([((1, 3), 1)])) == make_sym(2, [((3, 1), 1)])

    def test_linear(self):
        x = make_element([((1, 3), 1), ((2, 2), -1)])
        assert theta(x) == make_sym(2, [((3, 1), 1), ((2, 2), -1)])

    def test_inverse(self):
        assert theta_inv(make_sym(2, [((0, 0), 1)])) == make_element([((0, 0), 1)])
        rng = random.Random(5)
        for _ in range(20):
            n = rng.randint(1, 3)
            x = rand_layer_element(rng, n)
            if x.is_zero():
                continue
            assert theta_inv(theta(x)) == x

    def test_rejects_layer_zero_and_mixed(self):
        with pytest.raises(ValueError):
            theta(generator())
        with pytest.raises(ValueError):
            theta(generator() + make_element([((0,), 1)]))

    def test_preserves_degree(self):
        x = make_element([((-1, 4), 2)])
        assert {sum(g) for g in theta(x).terms} == {3}


class TestApplySym:
    def test_identity_element(self):
        rng = random.Random(7)
        for n in (1, 2, 3):
            x = rand_layer_element(rng, n)
            assert apply_sym(sym_one(n), x) == x

    def test_two_equal_summands(self):
        got = apply_sym(make_sym(2, [((1, 0), 1)]), make_element([((0, 0), 1)]))
        assert got == make_element([((0, 1), 1)])

    def test_power_sum_matches_cartan(self):
        x = make_element([((0, 1), 1)])
        got = apply_sym(power_sum(2, 2), x)
        assert got == make_element([((1, 2), 1), ((0, 3), 1)])
        assert got == Fraction(-1, 2) * act_h(2, x)

    def test_layer_mismatch_rejected(self):
        with pytest.raises(ValueError):
            apply_sym(sym_one(2), make_element([((0,), 1)]))

    def test_module_axiom(self):
        rng = random.Random(11)
        for _ in range(20):
            n = rng.randint(1, 3)
            p = make_sym(n, [(tuple(rng.randint(-2, 2) for _ in range(n)),
                              rng.randint(-3, 3)) for _ in range(2)])
            q = make_sym(n, [(tuple(rng.randint(-2, 2) for _ in range(n)),
                              rng.randint(-3, 3)) for _ in range(2)])
            x = rand_layer_element(rng, n, -2, 2, 2)
            assert apply_sym(p, apply_sym(q, x)) == apply_sym(sym_mul(p, q), x)

    def test_intertwined_by_theta(self):
        rng = random.Random(13)
        for _ in range(30):
            n = rng.randint(1, 3)
            p = make_sym(n, [(tuple(rng.randint(-2, 2) for _ in range(n)),
                              rng.randint(-3, 3)) for _ in range(2)])
            x = rand_layer_element(rng, n, -2, 2, 2)
            moved = apply_sym(p, x)
            if moved.is_zero():
                assert sym_mul(p, theta(x)).is_zero() if not x.is_zero() else True
            else:
                assert theta(moved) == sym_mul(p, theta(x))


class TestCommutingTriangle:
    def test_cartan_factors_through_power_sums(self):
        rng = random.Random(17)
        for _ in range(60):
            n = rng.randint(1, 3)
            x = rand_layer_element(rng, n)
            k = rng.randint(-3, 3)
            assert act_h(k, x) == apply_sym(psi(n, (k,)), x)


class TestEvalEta:
    def test_one_variable_powers(self):
        for k in (-2, 0, 1, 3):
            got = eval_eta([3], make_sym(1, [((k,), 1)]))
            assert got == TLaurent({k: Fraction(3) ** k})

    def test_sign_cancellation(self):
        assert eval_eta([1, -1], power_sum(2, 1)).is_zero()
        assert eval_eta([1, -1], power_sum(2, 2)) == TLaurent({2: 2})

    def test_identity_maps_to_one(self):
        for alphas in ((2,), (1, -1), (half, 3, -2)):
            assert eval_eta(alphas, sym_one(len(alphas))) == TLaurent({0: 1})

    def test_is_algebra_map(self):
        rng = random.Random(19)
        for _ in range(25):
            n = rng.randint(1, 3)
            alphas = [Fraction(rng.choice([1, 2, 3, -1, -2]), rng.randint(1, 2))
                      for _ in range(n)]
            a = make_sym(n, [(tuple(rng.randint(-2, 2) for _ in range(n)),
                              rng.randint(-3, 3)) for _ in range(2)])
            b = make_sym(n, [(tuple(rng.randint(-2, 2) for _ in range(n)),
                              rng.randint(-3, 3)) for _ in range(2)])
            assert eval_eta(alphas, sym_mul(a, b)) == eval_eta(alphas, a) * eval_eta(alphas, b)

    def test_graded(self):
        got = eval_eta([2, 3], make_sym(2, [((2, 1), 1)]))
        assert set(got.terms) <= {3}

    def test_zero_scalar_rejected(self):
        with pytest.raises(ValueError):
            eval_eta([1, 0], sym_one(2))


class TestClassifyHom:
    def test_factorable_quadratic(self):
        assert classify_hom(2, [3, 2]) == (Fraction(1), Fraction(2))
        # and the power-sum values it induces
        alphas = classify_hom(2, [3, 2])
        assert sum(alphas) == 3
        assert sum(a ** 2 for a in alphas) == 5

    def test_single_value(self):
        assert classify_hom(1, [7]) == (Fraction(7),)

    def test_irrational_roots_reported(self):
        with pytest.raises(RequiresExtensionError):
            classify_hom(2, [0, 1])    # 1 + t^2

    def test_zero_top_value_rejected(self):
        with pytest.raises(ValueError):
            classify_hom(2, [3, 0])

    def test_rational_roots(self):
        got = classify_hom(2, [Fraction(5, 6), Fraction(1, 6)])
        assert got == (Fraction(1, 3), Fraction(1, 2))

    def test_roundtrip_randomized(self):
        rng = random.Random(23)
        for _ in range(60):
            n = rng.randint(1, 4)
            alphas = tuple(sorted(Fraction(rng.choice([x for x in range(-6, 7) if x]),
                                           rng.randint(1, 4)) for _ in range(n)))
            assert classify_hom(n, elem_sym_values(alphas)) == alphas

    def test_elem_sym_values(self):
        assert elem_sym_values([1, 2]) == [3, 2]
        assert elem_sym_values([2, 3, 4]) == [9, 26, 24]


class TestGradedImagePeriod:
    def test_alternating_pair_has_period_two(self):
        assert graded_image_period([1, -1]) == 2

    def test_generic_pair_has_period_one(self):
        assert graded_image_period([1, 2]) == 1

    def test_single_scalar(self):
        for a in (1, -1, half, 5):
            assert graded_image_period([a]) == 1

    def test_divides_scalar_count(self):
        rng = random.Random(29)
        for _ in range(40):
            n = rng.randint(1, 4)
            alphas = [Fraction(rng.choice([x for x in range(-5, 6) if x]),
                               rng.randint(1, 3)) for _ in range(n)]
            assert n % graded_image_period(alphas) == 0

    def test_roots_of_unity_pattern(self):
        # scalars (1, -1, 2, -2): e1 = 0, e2 = -5, e3 = 0, e4 = 4 -> period 2
        assert graded_image_period([1, -1, 2, -2]) == 2


class TestPsiSurjectivityEvidence:
    def test_windowed_span(self):
        for n in (1, 2, 3):
            assert psi_reaches_basis(n)
