"""Unit tests for Hermite functions"""

import math

import numpy as np
import pytest

from src.errors import DomainError
from src.hermite.functions import HermiteEvaluator, hermite_phi, hermite_table


def _phi_direct(k, t):
    """Normalised Hermite function from numpy's physicists' Hermite series"""
    coeffs = np.zeros(k + 1)
    coeffs[k] = 1.0
    hk = np.polynomial.hermite.hermval(t, coeffs)
    norm = 1.0 / math.sqrt(2.0 ** k * math.factorial(k) * math.sqrt(math.pi))
    return norm * hk * math.exp(-t * t / 2.0)


class TestHermitePhi:
    """Test cases for hermite_phi"""

    def test_seed_value(self):
        """Test phi_0(0) = pi^(-1/4)"""
        assert hermite_phi(0, 0.0) == pytest.approx(0.7511255444649425, rel=1e-15)

    def test_odd_order_vanishes_at_origin(self):
        """Test odd orders vanish at the origin"""
        assert hermite_phi(1, 0.0) == 0.0

    def test_order_five_against_explicit_polynomial(self):
        """Test phi_5 against the explicit Hermite polynomial"""
        t = 1.3
        h5 = 32 * t ** 5 - 160 * t ** 3 + 120 * t
        expected = h5 * math.exp(-t * t / 2) / math.sqrt(2 ** 5 * 120 * math.sqrt(math.pi))
        assert hermite_phi(5, t) == pytest.approx(expected, rel=1e-13)

    @pytest.mark.parametrize("k", [2, 7, 15, 30])
    @pytest.mark.parametrize("t", [-3.1, -0.4, 0.9, 4.2])
    def test_matches_series_evaluation(self, k, t):
        """Test recurrence against direct series evaluation"""
        assert hermite_phi(k, t) == pytest.approx(_phi_direct(k, t), rel=1e-11, abs=1e-13)

    def test_array_input_keeps_shape(self):
        """Test array input keeps its shape"""
        t = np.linspace(-2, 2, 12).reshape(3, 4)
        values = hermite_phi(3, t)
        assert values.shape == (3, 4)
        assert np.allclose(values.ravel(), [hermite_phi(3, v) for v in t.ravel()])

    def test_finite_far_out(self):
        """Large |t| never overflows; the seed underflow is absorbed"""
        t = np.array([-50.0, -20.0, 20.0, 50.0])
        values = hermite_phi(200, t)
        assert np.all(np.isfinite(values))
        assert hermite_phi(200, 20.0) > 0.0

    def test_high_order_parity(self):
        """Test parity at high order"""
        assert hermite_phi(201, -3.7) == pytest.approx(-hermite_phi(201, 3.7), rel=1e-14)
        assert hermite_phi(200, -3.7) == pytest.approx(hermite_phi(200, 3.7), rel=1e-14)

    def test_non_finite_argument(self):
        """Test non-finite argument is rejected"""
        with pytest.raises(DomainError, match="finite"):
            hermite_phi(3, float("nan"))

    def test_order_out_of_range(self):
        """Test negative and oversized orders are rejected"""
        with pytest.raises(DomainError):
            hermite_phi(-1, 0.0)
        with pytest.raises(DomainError, match="exceeds"):
            hermite_phi(100_001, 0.0)


class TestHermiteTable:
    """Orthonormality and consistency of the full table"""

    def test_rows_match_single_evaluations(self):
        """Test table rows match single evaluations"""
        t = np.array([-1.5, 0.0, 2.5])
        table = hermite_table(9, t)
        assert table.shape == (10, 3)
        for k in range(10):
            assert np.allclose(table[k], hermite_phi(k, t), rtol=1e-15, atol=0)

    def test_gauss_hermite_orthonormality(self):
        """|<phi_j, phi_k> - delta_jk| <= 1e-10 for j, k <= 60"""
        nodes, weights = np.polynomial.hermite.hermgauss(90)
        table = hermite_table(60, nodes)
        gram = (table * (weights * np.exp(nodes ** 2))) @ table.T
        assert np.max(np.abs(gram - np.eye(61))) <= 1e-10


class TestHermiteEvaluator:
    """Test cases for HermiteEvaluator"""

    @pytest.fixture
    def evaluator(self):
        return HermiteEvaluator(12)

    def test_order(self, evaluator):
        """Test evaluator order"""
        assert evaluator.order_n == 12

    def test_ladder_values(self, evaluator):
        """Test ladder values phi_{n-2}..phi_{n+1}"""
        t = np.array([-0.8, 0.1, 3.3])
        lad = evaluator.ladder(t)
        table = hermite_table(13, t)
        assert np.allclose(lad.phi_nm2, table[10])
        assert np.allclose(lad.phi_nm1, table[11])
        assert np.allclose(lad.phi_n, table[12])
        assert np.allclose(lad.phi_np1, table[13])
        assert np.allclose(lad.sum_sq, np.sum(table[:12] ** 2, axis=0), rtol=1e-14)

    def test_ladder_survives_rescaling(self):
        """Sum of squares is recovered where the seed alone would underflow"""
        n = 400
        t = np.array([28.0, 30.0])
        lad = HermiteEvaluator(n).ladder(t)
        assert np.all(np.isfinite(lad.sum_sq))
        assert np.all(lad.sum_sq > 0.0)
        phi_last = hermite_phi(n - 1, t)
        assert np.all(lad.sum_sq >= phi_last ** 2)

    def test_invalid_size(self):
        """Test n=0 is rejected"""
        with pytest.raises(DomainError):
            HermiteEvaluator(0)
