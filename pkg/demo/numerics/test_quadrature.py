"""Unit tests for quadrature rules"""

import math

import numpy as np
import pytest

from src.numerics.quadrature import (
    arcsine_angles,
    arcsine_rule,
    box_radius,
    gauss_jacobi_sqrt,
    gauss_legendre,
    semicircle_rule,
    whole_line_rule,
)


class TestSemicircleRule:
    """Gauss-Chebyshev (second kind) moments of the semicircle law"""

    @pytest.fixture
    def rule(self):
        return semicircle_rule(64)

    def test_total_mass(self, rule):
        """Test semicircle rule has unit mass"""
        x, w = rule
        assert np.sum(w) == pytest.approx(1.0, abs=1e-14)

    @pytest.mark.parametrize("p,expected", [(2, 1.0), (4, 2.0), (6, 5.0), (8, 14.0)])
    def test_even_moments_are_catalan(self, rule, p, expected):
        """Test even semicircle moments are Catalan numbers"""
        x, w = rule
        assert np.sum(w * x ** p) == pytest.approx(expected, abs=1e-12)

    def test_odd_moments_vanish(self, rule):
        """Test odd semicircle moments vanish"""
        x, w = rule
        assert abs(np.sum(w * x ** 3)) < 1e-14

    def test_rule_is_read_only(self, rule):
        """Test cached rules are read-only"""
        x, _ = rule
        with pytest.raises(ValueError):
            x[0] = 0.0


class TestArcsineRule:
    """Gauss-Chebyshev (first kind) rule on [-2, 2]"""

    def test_moments_are_central_binomials(self):
        """Test arcsine moments are central binomials"""
        x, w = arcsine_rule(32)
        assert np.sum(w) == pytest.approx(1.0, abs=1e-14)
        assert np.sum(w * x ** 2) == pytest.approx(2.0, abs=1e-13)
        assert np.sum(w * x ** 4) == pytest.approx(6.0, abs=1e-12)

    def test_angles_match_nodes(self):
        """Test arcsine angles match the nodes"""
        x, _ = arcsine_rule(16)
        assert np.allclose(2.0 * np.cos(arcsine_angles(16)), x)


class TestOtherRules:
    """Gauss-Legendre, Gauss-Jacobi and the truncation box"""

    def test_gauss_legendre_maps_interval(self):
        """Test Gauss-Legendre maps to [a, b]"""
        x, w = gauss_legendre(20, -3.0, 5.0)
        assert np.sum(w) == pytest.approx(8.0)
        assert x.min() > -3.0 and x.max() < 5.0

    def test_gauss_jacobi_sqrt(self):
        """Test Gauss-Jacobi rule for the v^(1/2) weight"""
        v, w = gauss_jacobi_sqrt(16)
        assert np.sum(w) == pytest.approx(2.0 / 3.0, abs=1e-14)
        assert np.sum(w * v) == pytest.approx(2.0 / 5.0, abs=1e-14)
        assert np.sum(w * v ** 2) == pytest.approx(2.0 / 7.0, abs=1e-14)
        assert v.min() > 0.0 and v.max() < 1.0

    def test_box_radius(self):
        """Test truncation radius 2 + 8 n^(-1/2) floored at the base"""
        assert box_radius(1, base=4.0) == pytest.approx(10.0)
        assert box_radius(64, base=4.0) == pytest.approx(4.0)
        assert box_radius(16, base=4.0) == pytest.approx(4.0)
        assert box_radius(9, base=4.0) == pytest.approx(2.0 + 8.0 / 3.0)

    def test_whole_line_rule_integrates_gaussian(self):
        """Test whole-line rule integrates a Gaussian"""
        x, w = whole_line_rule(1, nodes=256)
        total = np.sum(w * np.exp(-x ** 2 / 2)) / math.sqrt(2 * math.pi)
        assert total == pytest.approx(1.0, abs=1e-13)
