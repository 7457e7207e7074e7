"""Unit tests for the Cauchy transform quadrature"""

import math

import numpy as np
import pytest
from numpy.polynomial.hermite_e import hermegauss

from src.errors import ConditioningError, NumericError
from src.covariance.models import ResolventSet
from src.covariance.resolvent import check_conditioning, resolvent_set

TEST_POINTS = [complex(re, im) for re in (-3.0, -1.5, 0.0, 1.5, 3.0) for im in (-1.5, -0.5, 0.5, 1.5)]


def _normal_expectation(func):
    x, w = hermegauss(200)
    return np.sum(w * func(x)) / math.sqrt(2.0 * math.pi)


class TestResolventSet:
    """G_n and derivatives at one point"""

    def test_scalar_case(self):
        """Test n=1 against a Gauss-Hermite oracle"""
        lam = 3j
        rs = resolvent_set(1, lam)

        assert isinstance(rs, ResolventSet)
        assert rs.G == pytest.approx(_normal_expectation(lambda x: 1.0 / (lam - x)), abs=1e-12)
        assert rs.G1 == pytest.approx(_normal_expectation(lambda x: -1.0 / (lam - x) ** 2), abs=1e-12)
        assert rs.G_tilde == rs.G - lam * rs.G1

    def test_conjugate_symmetry(self):
        """Test G_n at the conjugate point is the conjugate"""
        a = resolvent_set(8, 1 + 2j)
        b = resolvent_set(8, 1 - 2j)

        assert b.G == pytest.approx(a.G.conjugate(), abs=1e-14)
        assert b.G3 == pytest.approx(a.G3.conjugate(), abs=1e-12)

    def test_bounded_by_inverse_imaginary_part(self):
        """Test |G_n| <= 1/|Im lambda|"""
        for lam in TEST_POINTS:
            assert abs(resolvent_set(8, lam).G) <= 1.0 / abs(lam.imag)

    def test_unit_mass_at_infinity(self):
        """Test lambda G_n(lambda) tends to 1"""
        lam = 100j
        assert lam * resolvent_set(8, lam).G == pytest.approx(1.0, abs=1e-3)

    def test_real_parameter_outside_spectrum(self):
        """Real lambda beyond the margin uses the shortened box"""
        rs = resolvent_set(64, 3.0)
        assert rs.radius == pytest.approx(2.5)
        assert rs.G.real == pytest.approx((3.0 - math.sqrt(5.0)) / 2.0, abs=1e-4)
        assert rs.ode_residual <= 1e-7

    @pytest.mark.parametrize("n,lam", [(1, 3.0), (1, 2.6), (4, 2.6), (16, 2.6), (1, -3.0)])
    def test_real_parameter_rejected_when_mass_is_cut(self, n, lam):
        """Small n leaves too much of h_n beyond the shortened box"""
        with pytest.raises(ConditioningError, match="mass") as info:
            resolvent_set(n, lam)
        assert info.value.diagnostics["neglected_mass"] > 1e-10
        assert info.value.diagnostics["n"] == n

    @pytest.mark.parametrize("n", [4, 16])
    def test_ode_residual(self, n):
        """Test third-order ODE residual"""
        for lam in TEST_POINTS:
            assert resolvent_set(n, lam).ode_residual <= 1e-7

    @pytest.mark.parametrize("n", [4, 16])
    def test_nonlinear_identity(self, n):
        """Test nonlinear identity residual"""
        for lam in TEST_POINTS:
            assert resolvent_set(n, lam).nonlinear_residual <= 1e-7


class TestConditioning:
    """Guard against parameters near the spectrum"""

    @pytest.mark.parametrize("lam", [0.5 + 0.01j, 2.2, -1.0, 2.5 + 0.04j])
    def test_rejected(self, lam):
        """Test parameters near the real axis are rejected"""
        with pytest.raises(ConditioningError, match="real axis"):
            resolvent_set(4, lam)

    def test_is_numeric_error(self):
        """Test ConditioningError is a NumericError with diagnostics"""
        with pytest.raises(NumericError) as info:
            check_conditioning(0.01j)
        assert "lam" in info.value.diagnostics

    @pytest.mark.parametrize("lam", [0.06j, 2.6, -3.0 + 0.01j])
    def test_accepted(self, lam):
        """Test parameters off the axis or beyond the margin are accepted"""
        assert check_conditioning(lam) == complex(lam)
