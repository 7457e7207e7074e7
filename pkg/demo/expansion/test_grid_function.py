"""Unit tests for GridFunction"""

import numpy as np
import pytest

from src.errors import InputError
from src.expansion.grid_function import CHOP_TOL, GridFunction


class TestGridFunction:
    """Chebyshev interpolants on [-L, L]"""

    def test_interpolates_cosine(self):
        """Degree 64 resolves cos on [-2, 2] to rounding level"""
        grid = GridFunction.from_function(np.cos, degree=64)
        t = np.linspace(-2.0, 2.0, 41)
        scale = np.max(np.abs(grid.coeffs))

        assert np.allclose(grid(t), np.cos(t), atol=1e-14)
        assert grid.interpolation_residual(np.cos) <= 1e-10 * scale
        assert grid.tail <= CHOP_TOL * scale
        assert grid.half_width == 2.0

    def test_derivative_of_cosine(self):
        """Spectral derivatives of the chopped series"""
        grid = GridFunction.from_function(np.cos, degree=64)
        t = np.linspace(-1.9, 1.9, 17)

        assert np.allclose(grid.derivative(1)(t), -np.sin(t), atol=1e-11)
        assert np.allclose(grid.derivative(2)(t), -np.cos(t), atol=1e-9)

    def test_derivative_shifts_endpoint_values(self):
        """Differentiating shifts the cached endpoint derivatives down"""
        ends = {0: (1.0, 2.0), 1: (3.0, 4.0), 2: (5.0, 6.0)}
        grid = GridFunction.from_function(np.sin, degree=32, endpoint_derivatives=ends)

        assert grid.derivative(1).endpoint_derivatives == {0: (3.0, 4.0), 1: (5.0, 6.0)}
        assert grid.derivative(3).endpoint_derivatives == {}

    def test_wider_domain(self):
        """L > 2 covers points beyond the cut"""
        grid = GridFunction.from_function(lambda t: np.exp(-t * t), degree=96, half_width=3.0)

        assert grid.half_width == 3.0
        assert grid(2.7) == pytest.approx(np.exp(-2.7 ** 2), abs=1e-13)

    def test_narrow_domain_rejected(self):
        """The domain must contain [-2, 2]"""
        with pytest.raises(InputError, match="must contain"):
            GridFunction.from_function(np.cos, half_width=1.5)

    def test_non_finite_rejected(self):
        """Non-finite node values are an input error"""
        with pytest.raises(InputError):
            GridFunction.from_function(lambda t: np.where(t > 0, np.inf, 0.0), degree=7)

    def test_complex_values(self):
        """Complex-valued functions keep complex coefficients"""
        grid = GridFunction.from_function(lambda t: np.exp(1j * t), degree=48)

        assert grid.is_complex
        assert grid(0.5) == pytest.approx(np.exp(0.5j), abs=1e-14)

    def test_chop_drops_roundoff_tail(self):
        """A cubic keeps at most four coefficients after chopping"""
        grid = GridFunction.from_function(lambda t: t ** 3, degree=40)
        assert len(grid.chopped().coef) <= 4

    @pytest.mark.parametrize(
        "func,expected",
        [(lambda t: np.ones_like(t), 1.0), (lambda t: t * t, 1.0), (lambda t: t ** 4, 2.0)],
    )
    def test_semicircle_pairing(self, func, expected):
        """Pairing with the semicircle gives the Catalan moments"""
        grid = GridFunction.from_function(func, degree=16)
        assert grid.semicircle_pairing() == pytest.approx(expected, abs=1e-13)

    def test_max_abs(self):
        """Largest absolute value over the nodes"""
        grid = GridFunction.from_function(lambda t: t, degree=8)
        assert grid.max_abs() == pytest.approx(2.0)
