import math

import numpy as np
import pytest

from cauchymle import fit_iterative
from cauchymle.closedform import fit_n3, fit_n4
from cauchymle.diagnostics import (
    cdf_symmetry_residuals,
    construct_sample_with_position,
    half_circle_satisfied,
    relative_position,
)
from cauchymle.algebraic import fit_algebraic
from cauchymle.model import SampleError, cdf


class TestRelativePosition:
    def test_four_singular(self, four_singular):
        rep = relative_position(four_singular, fit_n4(four_singular))
        assert abs(rep.xi - (0.9913855 + 0.1215753j)) < 1e-7
        assert round(rep.relative_distance, 4) == 0.0012
        assert rep.half_circle_satisfied

    def test_six_wide(self, six_wide):
        theta = fit_algebraic(six_wide).chosen.theta
        rep = relative_position(six_wide, theta)
        assert abs(rep.xi.imag - 0.0001924) < 1e-7
        lo, hi = six_wide[0], six_wide[-1]
        assert rep.xi.real == pytest.approx((2 * theta.real - (hi + lo)) / (hi - lo), rel=1e-12)
        assert 0 < rep.relative_distance < 1

    def test_symmetric_is_imaginary(self):
        rep = relative_position([-1, 0, 1], fit_n3([-1, 0, 1]))
        assert abs(rep.xi - 1j / math.sqrt(3)) < 1e-15
        assert rep.relative_distance == pytest.approx(1 - 1 / math.sqrt(3))

    def test_no_cdf_residuals_beyond_four(self, seven):
        assert relative_position(seven, fit_iterative(seven)[0]).cdf_residuals == []

    def test_half_circle_flags_outside_points(self):
        assert not half_circle_satisfied([-1, 0, 1], 0.5 + 1j)
        assert half_circle_satisfied([-1, 0, 1], 0.5j)


class TestCdfSymmetry:
    def test_three_points(self):
        theta = fit_n3([-1, 0, 1]).theta
        F = cdf(np.array([-1.0, 0.0, 1.0]), theta)
        assert np.allclose(F, [1 / 6, 1 / 2, 5 / 6], atol=1e-15)
        assert abs(cdf_symmetry_residuals([-1, 0, 1], theta)[0]) < 1e-15

    def test_four_points(self):
        res = cdf_symmetry_residuals([-2, -1, 1, 2], math.sqrt(2) * 1j)
        assert max(abs(r) for r in res) < 1e-12

    def test_four_singular(self, four_singular):
        printed = cdf_symmetry_residuals(four_singular, -43.3525 + 611.8279j)
        assert max(abs(r) for r in printed) <= 1e-3
        fitted = cdf_symmetry_residuals(four_singular, fit_n4(four_singular))
        assert max(abs(r) for r in fitted) <= 1e-10

    def test_nonzero_away_from_mle(self):
        assert abs(cdf_symmetry_residuals([-1, 0, 1], 0.3 + 0.5j)[0]) > 1e-3

    def test_wrong_size(self, seven):
        with pytest.raises(SampleError):
            cdf_symmetry_residuals(seven, 1j)


class TestConstruction:
    @pytest.mark.parametrize("xi, n", [(0.9j, 4), (0.3 + 0.4j, 6)])
    def test_round_trip(self, xi, n):
        s = construct_sample_with_position(xi, n)
        assert s.n == n and s.values[0] == -1 and s.values[-1] == 1
        est, _ = fit_iterative(s, tol=1e-15)
        assert abs(relative_position(s, est).xi - xi) <= 1e-8

    def test_imaginary_xi_gives_symmetric_sample(self):
        s = construct_sample_with_position(0.6j, 6)
        v = np.array(s.values)
        assert np.allclose(v, -v[::-1], atol=1e-14)

    @pytest.mark.parametrize("xi, n", [(0.5, 4), (1.2j, 4), (0.5j, 5), (0.5j, 2)])
    def test_rejects(self, xi, n):
        with pytest.raises(ValueError):
            construct_sample_with_position(xi, n)
