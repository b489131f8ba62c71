import cmath
import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ucoulomb.errors import BNonPositiveInteger, NoConvergence, PoleAtNonPositiveInteger
from ucoulomb.specfun import (
    SWITCH_RADIUS,
    cgamma,
    clngamma,
    hyp1f1,
    hyp1f1_asymptotic,
    hyp2f0_asymptotic,
    kummer_1f1,
    rgamma,
)

from .helpers import mp_gamma, mp_hyp1f1, rel


def stirling_gamma(z, shift=30):
    """Independent check value: Gamma(z + N) from a long Stirling series, then N downward steps."""
    w = z + shift
    bern = [1 / 6, -1 / 30, 1 / 42, -1 / 30, 5 / 66, -691 / 2730, 7 / 6]
    lg = (w - 0.5) * cmath.log(w) - w + 0.5 * math.log(2 * math.pi)
    for j, b in enumerate(bern, start=1):
        lg += b / (2 * j * (2 * j - 1) * w ** (2 * j - 1))
    g = cmath.exp(lg)
    for n in range(shift):
        g /= z + n
    return g


class TestGamma:
    def test_integers(self):
        assert cgamma(5) == pytest.approx(24, rel=1e-14)
        assert cgamma(1) == pytest.approx(1, rel=1e-14)

    def test_half(self):
        assert abs(cgamma(0.5) - math.sqrt(math.pi)) < 1e-14

    def test_one_plus_i_against_stirling_recurrence(self):
        assert rel(cgamma(1 + 1j), stirling_gamma(1 + 1j)) < 1e-12

    @pytest.mark.parametrize("z", [0, -1, -2, -7, complex(-3, 0)])
    def test_poles(self, z):
        with pytest.raises(PoleAtNonPositiveInteger):
            cgamma(z)
        with pytest.raises(PoleAtNonPositiveInteger):
            clngamma(z)

    def test_rgamma_zero_at_poles(self):
        assert rgamma(-3) == 0
        assert rel(rgamma(2.5 + 1j), 1 / mp_gamma(2.5 + 1j)) < 1e-13

    def test_lngamma_examples(self):
        assert abs(clngamma(1)) < 1e-15
        assert abs(clngamma(10) - math.log(362880)) < 1e-13
        assert abs(cmath.exp(clngamma(2 + 3j)) - cgamma(2 + 3j)) / abs(cgamma(2 + 3j)) < 1e-12

    def test_lngamma_real_on_positive_axis(self):
        for x in (0.3, 2.0, 17.5, 80.0):
            assert clngamma(x).imag == 0.0

    def test_lngamma_branch_is_continuous(self):
        # imaginary part must not jump by 2 pi along a vertical line
        prev = clngamma(0.5 + 0j).imag
        for j in range(1, 2000):
            cur = clngamma(0.5 + 0.05j * j).imag
            assert abs(cur - prev) < 0.5
            prev = cur

    @settings(max_examples=200, deadline=None)
    @given(st.floats(-20, 20), st.floats(-10, 10))
    def test_reflection(self, x, y):
        z = complex(x, y)
        if abs(z - round(x)) < 1e-3:
            return
        val = cgamma(z) * cgamma(1 - z) * cmath.sin(math.pi * z) / math.pi
        assert abs(val - 1) < 1e-11

    @settings(max_examples=200, deadline=None)
    @given(st.floats(-20, 20), st.floats(-10, 10))
    def test_recurrence(self, x, y):
        z = complex(x, y)
        if abs(z - round(x)) < 1e-3 or abs(z + 1 - round(x + 1)) < 1e-3:
            return
        assert rel(cgamma(z + 1), z * cgamma(z)) < 1e-12

    def test_against_mpmath(self):
        rng = random.Random(4)
        for _ in range(300):
            z = complex(rng.uniform(-40, 40), rng.uniform(-30, 30))
            if abs(z) > 50:
                continue
            assert rel(cgamma(z), mp_gamma(z)) < 1e-12


class TestKummerSeries:
    def test_zero_argument(self):
        r = kummer_1f1(2 + 1j, 3.3, 0)
        assert r.value == 1 and r.est_error == 0 and r.terms_used >= 1

    def test_exponential(self):
        for z in (0.3, -2 + 1j, 5j):
            assert rel(kummer_1f1(1, 1, z).value, cmath.exp(z)) < 1e-13

    def test_linear_polynomial(self):
        b, z = 2.5 - 0.5j, 1.7 + 0.2j
        assert rel(kummer_1f1(-1, b, z).value, 1 - z / b) < 1e-15

    def test_b_pole(self):
        with pytest.raises(BNonPositiveInteger):
            kummer_1f1(1.0, -3, 0.5)
        with pytest.raises(BNonPositiveInteger):
            hyp1f1(1.0, 0, 0.5)

    def test_no_convergence(self):
        with pytest.raises(NoConvergence):
            kummer_1f1(0.5, 1.5, 500.0, max_terms=50)

    def test_error_estimate_bounds_true_error(self):
        rng = random.Random(7)
        for _ in range(100):
            a = complex(rng.uniform(-5, 5), rng.uniform(-3, 3))
            b = complex(rng.uniform(-5, 5), rng.uniform(-3, 3))
            z = cmath.rect(rng.uniform(0, 25), rng.uniform(0, 2 * math.pi))
            r = kummer_1f1(a, b, z)
            assert abs(r.value - mp_hyp1f1(a, b, z)) <= 10 * r.est_error + 1e-15 * abs(r.value)


class TestHyp1f1:
    def test_against_mpmath(self):
        rng = random.Random(11)
        worst = 0.0
        for _ in range(300):
            a = complex(rng.uniform(-6, 6), rng.uniform(-3, 3))
            b = complex(rng.uniform(-8, 10), rng.uniform(-2, 2))
            z = cmath.rect(rng.uniform(0, 60), rng.uniform(-math.pi, math.pi))
            worst = max(worst, rel(hyp1f1(a, b, z).value, mp_hyp1f1(a, b, z)))
        assert worst < 1e-10

    def test_error_estimate_is_honest(self):
        rng = random.Random(1)
        for _ in range(300):
            a = complex(rng.uniform(-6, 6), rng.uniform(-5, 5))
            b = complex(rng.uniform(-8, 10), rng.uniform(-5, 5))
            z = cmath.rect(rng.uniform(0, 60), rng.uniform(-math.pi, math.pi))
            r = hyp1f1(a, b, z)
            assert abs(r.value - mp_hyp1f1(a, b, z)) <= 10 * r.est_error

    def test_imaginary_axis_negative_b(self):
        # the regime of psi2: b = -2L and z = 2kx close to the imaginary axis
        a, b = -3.75 + 0.5j, -7.5
        for z in (-0.01 + 5j, -0.01 + 12j, 0.01 + 25j, 0.01 - 15j):
            assert rel(hyp1f1(a, b, z).value, mp_hyp1f1(a, b, z)) < 1e-13

    def test_kummer_transformation_random(self):
        rng = random.Random(3)
        worst = 0.0
        for _ in range(300):
            a, b = rng.uniform(-5, 5), rng.uniform(-5, 5)
            if abs(b - round(b)) < 1e-3:
                continue
            z = cmath.rect(rng.uniform(0.1, 20), rng.uniform(0.01, math.pi - 0.01))
            lhs = hyp1f1(a, b, z).value
            rhs = cmath.exp(z) * hyp1f1(b - a, b, -z).value
            worst = max(worst, abs(lhs - rhs) / max(abs(lhs), abs(rhs)))
        assert worst < 1e-10

    def test_series_asymptotic_overlap(self):
        rng = random.Random(5)
        for _ in range(100):
            a = complex(rng.uniform(-4, 4), rng.uniform(-2, 2))
            b = complex(rng.uniform(-6, 8), rng.uniform(-2, 2))
            z = cmath.rect(rng.uniform(25, 40), rng.uniform(0.05, math.pi - 0.05))
            s = kummer_1f1(a, b, z)
            t = hyp1f1_asymptotic(a, b, z)
            assert abs(s.value - t.value) <= s.est_error + t.est_error + 1e-8 * abs(t.value)

    def test_asymptotic_rejects_lower_half_plane(self):
        with pytest.raises(ValueError):
            hyp1f1_asymptotic(1.0, 2.0, 40 - 5j)

    def test_switch_radius(self):
        assert SWITCH_RADIUS == 30


class TestHyp2f0:
    def test_zero_argument(self):
        r = hyp2f0_asymptotic(1.5, 2.5j, 0)
        assert r.value == 1 and r.est_error == 0

    def test_zero_parameter(self):
        r = hyp2f0_asymptotic(0, 3.3, 0.2)
        assert r.value == 1

    def test_small_argument_truncation(self):
        r = hyp2f0_asymptotic(1, 1, 0.01)
        assert r.est_error < 1e-15 and r.terms_used < 40

    def test_optimal_truncation_error(self):
        # 2F0(1, 1; -w) is the asymptotic series of the exponential-integral remainder
        w = 0.05
        exact = complex(mp_exp_integral_remainder(w))
        r = hyp2f0_asymptotic(1, 1, -w)
        assert abs(r.value - exact) <= 3 * r.est_error


def mp_exp_integral_remainder(w):
    import mpmath as mp

    x = 1 / mp.mpf(w)
    # x e^x E1(x) ~ sum (-1)^n n! / x^n
    return x * mp.exp(x) * mp.e1(x)
