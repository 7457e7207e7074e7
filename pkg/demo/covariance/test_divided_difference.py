"""Unit tests for the divided difference transform"""

import math

import numpy as np
import pytest

from src.covariance.divided_difference import (
    DIAGONAL_TOL,
    INTEGRAL_TOL,
    divided_difference,
    divided_difference_grid,
)
from src.expansion.smooth_input import SmoothInput


def _cos_difference(x, y):
    """(cos x - cos y) / (x - y) without cancellation"""
    d = x - y
    return -math.sin(0.5 * (x + y)) * math.sin(0.5 * d) / (0.5 * d)


class TestDividedDifference:
    """Delta f(x, y)"""

    @pytest.mark.parametrize("x,y", [(0.3, -1.2), (2.0, 2.5), (-0.7, 0.7)])
    def test_square(self, x, y):
        """Delta x^2 = x + y"""
        assert divided_difference(SmoothInput.monomial(2), x, y) == pytest.approx(x + y)

    def test_diagonal_is_derivative(self):
        """On the diagonal the transform is f'"""
        assert divided_difference(SmoothInput.cosine(), 0.3, 0.3) == pytest.approx(-math.sin(0.3))

    def test_resolvent_product_identity(self):
        """Delta g_lambda = g_lambda(x) g_lambda(y)"""
        lam = 3j
        g = SmoothInput.resolvent(lam)
        x, y = 0.4, -1.1
        assert divided_difference(g, x, y) == pytest.approx(1.0 / ((lam - x) * (lam - y)), rel=1e-14)

    @pytest.mark.parametrize("g", [SmoothInput.monomial(2), SmoothInput.cosine()], ids=["square", "cos"])
    def test_continuous_across_switch(self, g):
        """Values on both sides of the diagonal switch agree to 1e-9"""
        x = 0.3
        below = divided_difference(g, x, x + 0.99 * DIAGONAL_TOL)
        above = divided_difference(g, x, x + 1.01 * DIAGONAL_TOL)
        assert abs(above - below) <= 1e-9

    @pytest.mark.parametrize("scale", [0.99, 1.01])
    def test_continuous_across_quotient_switch(self, scale):
        """The integral form and the quotient meet at INTEGRAL_TOL"""
        x = 0.3
        y = x + scale * INTEGRAL_TOL
        assert divided_difference(SmoothInput.cosine(), x, y) == pytest.approx(_cos_difference(x, y), abs=1e-11)

    @pytest.mark.parametrize("d", [1.01e-7, 1e-6, 1e-5, 1e-4])
    def test_near_diagonal_accuracy(self, d):
        """Close to the diagonal the value matches the cancellation-free form"""
        x = 0.3
        assert divided_difference(SmoothInput.cosine(), x, x + d) == pytest.approx(_cos_difference(x, x + d), abs=1e-13)

    def test_broadcasts(self):
        """Array arguments broadcast like numpy ufuncs"""
        x = np.linspace(-1, 1, 5)
        out = divided_difference(SmoothInput.monomial(2), x[:, None], x[None, :])

        assert out.shape == (5, 5)
        assert np.allclose(out, x[:, None] + x[None, :])


class TestDividedDifferenceGrid:
    """Tensor-grid form"""

    def test_matches_pointwise(self):
        """Grid values equal pointwise values and are symmetric"""
        g = SmoothInput.gaussian()
        xs = np.linspace(-2, 2, 9)
        grid = divided_difference_grid(g, xs, xs)

        assert np.allclose(np.diag(grid), g.derivative(1, xs))
        assert grid[2, 5] == pytest.approx(divided_difference(g, xs[2], xs[5]))
        assert np.allclose(grid, grid.T)

    def test_close_nodes_use_integral_form(self):
        """Nodes closer than INTEGRAL_TOL avoid the cancelling quotient"""
        xs = np.array([0.3])
        ys = np.array([0.3 + 2e-7, 0.3 + 5e-4])
        grid = divided_difference_grid(SmoothInput.cosine(), xs, ys)

        assert grid.shape == (1, 2)
        assert grid[0, 0] == pytest.approx(_cos_difference(0.3, ys[0]), abs=1e-13)
        assert grid[0, 1] == pytest.approx(_cos_difference(0.3, ys[1]), abs=1e-13)
