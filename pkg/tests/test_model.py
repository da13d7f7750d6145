import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cauchymle.model import (
    PoleError,
    Sample,
    SampleError,
    SymmetricPolys,
    UpperHalfPoint,
    as_sample,
    build_h,
    cdf,
    density,
    density_complex_form,
    elementary_symmetric,
    equation_residuals,
    h_derivative_leibniz,
    log_likelihood,
    mobius,
    mobius_inverse,
    parse_exact,
)

upper = st.builds(
    complex,
    st.floats(-10, 10),
    st.floats(0.05, 10),
)
samples = st.lists(st.integers(-50, 50), min_size=3, max_size=7, unique=True)


class TestSample:
    def test_sorted_and_exact(self):
        s = as_sample(["0.06", "-1/3", 2])
        assert s.exact_values == (Fraction(-1, 3), Fraction(3, 50), Fraction(2))
        assert s.values == (-1 / 3, 0.06, 2.0)

    def test_float_goes_through_shortest_repr(self):
        assert parse_exact(0.06) == Fraction(3, 50)
        assert parse_exact(1e-7) == Fraction(1, 10**7)

    @pytest.mark.parametrize("bad", [[1, 2], [1, 1, 2], [1, 1, 1, 2, 2]])
    def test_rejects_small_or_degenerate(self, bad):
        with pytest.raises(SampleError):
            as_sample(bad)

    def test_rejects_non_finite(self):
        with pytest.raises(SampleError):
            as_sample([1.0, 2.0, float("nan")])
        with pytest.raises(SampleError):
            Sample((1.0, 2.0, math.inf))

    def test_rejects_garbage_string(self):
        with pytest.raises(SampleError):
            as_sample(["1", "2", "three"])

    def test_duplicates_flagged_not_rejected(self):
        s = as_sample([0, 0, 1, 2])
        assert s.has_duplicates and s.distinct_count == 3

    def test_affine_exact(self):
        s = as_sample([1, 2, 4]).affine(Fraction(1, 2), 3)
        assert s.exact_values == (Fraction(7, 2), Fraction(4), Fraction(5))


class TestUpperHalfPoint:
    def test_fields(self):
        p = UpperHalfPoint(1.5, 2.0)
        assert p.theta == 1.5 + 2j and p.theta_bar == 1.5 - 2j

    @pytest.mark.parametrize("sigma", [0.0, -1.0, math.nan, math.inf])
    def test_rejects_bad_sigma(self, sigma):
        with pytest.raises(ValueError):
            UpperHalfPoint(0.0, sigma)


class TestDensity:
    def test_values(self):
        assert density(0.0, 1j) == pytest.approx(1 / math.pi, abs=1e-15)
        assert density(1.0, 1j) == pytest.approx(1 / (2 * math.pi), abs=1e-15)
        assert density(3.0, 3 + 0.5j) == pytest.approx(1 / (0.5 * math.pi), rel=1e-15)

    @settings(max_examples=50, deadline=None)
    @given(st.floats(-100, 100), upper)
    def test_complex_form(self, x, theta):
        assert abs(density(x, theta) - density_complex_form(x, theta)) <= 1e-14 * max(1.0, density(x, theta))

    def test_integrates_to_one(self):
        sigma = 0.7
        # Substitution x = sigma tan(t) keeps the integrand smooth on a finite interval.
        t = np.linspace(-math.atan(1e6), math.atan(1e6), 200001)
        x = sigma * np.tan(t)
        f = density(x, 1j * sigma) * sigma / np.cos(t) ** 2
        body = np.trapezoid(f, t) if hasattr(np, "trapezoid") else np.trapz(f, t)
        tails = 2 * (0.5 - math.atan(1e6) / math.pi)
        assert body + tails == pytest.approx(1.0, abs=1e-6)

    def test_cdf_is_antiderivative(self):
        theta = -0.3 + 1.7j
        xs = np.linspace(-10, 10, 50)
        h = 1e-5
        fd = (cdf(xs + h, theta) - cdf(xs - h, theta)) / (2 * h)
        assert np.max(np.abs(fd - density(xs, theta))) < 1e-6


class TestLogLikelihood:
    def test_value(self):
        expected = 2 * math.log(1 / (2 * math.pi)) + math.log(1 / math.pi)
        assert log_likelihood([-1, 0, 1], 1j) == pytest.approx(expected, abs=1e-12)
        assert expected == pytest.approx(-4.82048, abs=1e-5)

    @settings(max_examples=30, deadline=None)
    @given(samples, upper, st.floats(-20, 20), st.floats(0.1, 10))
    def test_covariance(self, xs, theta, c, a):
        base = log_likelihood(xs, theta)
        shifted = log_likelihood([x + c for x in xs], theta + c)
        scaled = log_likelihood([a * x for x in xs], a * theta)
        assert shifted == pytest.approx(base, abs=1e-9)
        assert scaled == pytest.approx(base - len(xs) * math.log(a), abs=1e-9)


class TestCdf:
    def test_values(self):
        theta = 2 + 3j
        assert cdf(2.0, theta) == 0.5
        assert cdf(5.0, theta) == pytest.approx(0.75, abs=1e-15)
        assert cdf(-1e300, theta) == pytest.approx(0.0, abs=1e-15)


class TestMobius:
    def test_examples(self):
        assert mobius(1j, 0) == -1
        assert mobius(2 + 3j, 2 + 3j) == 0
        assert abs(abs(mobius(1j, 5)) - 1) < 1e-15
        assert abs(mobius_inverse(1j, -1)) < 1e-15
        assert mobius_inverse(2 + 3j, 0) == 2 + 3j

    def test_poles(self):
        with pytest.raises(PoleError):
            mobius(1 + 1j, 1 - 1j)
        with pytest.raises(PoleError):
            mobius_inverse(1 + 1j, 1)

    @settings(max_examples=50, deadline=None)
    @given(upper, st.builds(complex, st.floats(-50, 50), st.floats(-50, 50)))
    def test_round_trip(self, theta, z):
        if abs(z - theta.conjugate()) < 1e-3:
            return
        w = mobius(theta, z)
        assert abs(mobius_inverse(theta, w) - z) <= 1e-12 * max(1.0, abs(z), abs(theta)) / max(abs(1 - w), 1e-3)

    @settings(max_examples=50, deadline=None)
    @given(upper, st.floats(-1e4, 1e4))
    def test_real_line_to_circle(self, theta, x):
        assert abs(abs(mobius(theta, x)) - 1) < 1e-12

    @settings(max_examples=50, deadline=None)
    @given(upper, st.builds(complex, st.floats(-50, 50), st.floats(-50, 50)))
    def test_upper_half_plane_to_disc(self, theta, z):
        if abs(z.imag) < 1e-6 or abs(z - theta.conjugate()) < 1e-6:
            return
        assert (abs(mobius(theta, z)) < 1) == (z.imag > 0)


class TestH:
    def test_h_three_points(self):
        h, hf = build_h([-1, 0, 1])
        assert h.coeffs == (0, 1, 0, -1)
        assert np.allclose(hf.coeffs, [0, 1, 0, -1])

    def test_symmetric_values(self):
        _, s1, s2, s3 = SymmetricPolys.of([-3, -1, 2]).s
        assert (s1, s2, s3) == (-2, -5, 6)

    def test_symmetric_recurrence(self):
        assert elementary_symmetric([1, 2, 3]) == [1, 6, 11, 6]

    @settings(max_examples=30, deadline=None)
    @given(samples)
    def test_product_equals_symmetric_expansion(self, xs):
        h, _ = build_h(xs)
        assert h == SymmetricPolys.of(xs).h()

    @settings(max_examples=30, deadline=None)
    @given(samples)
    def test_leibniz_derivative(self, xs):
        h, _ = build_h(xs)
        assert h_derivative_leibniz(xs) == h.derivative()

    def test_float_only_sample_needs_exact_values(self):
        with pytest.raises(SampleError):
            build_h(Sample((1.0, 2.0, 3.0)))


class TestResiduals:
    def test_vanish_at_mle_and_not_away(self):
        theta = 1j / math.sqrt(3)
        res = equation_residuals([-1, 0, 1], theta)
        assert max(res.values()) < 1e-15
        off = equation_residuals([-1, 0, 1], theta + 0.1)
        assert off["eq24"] > 1e-3 and off["eq28"] > 1e-3 and off["eq29mu"] > 1e-3
