"""Unit tests for the expansion coefficients and expand_expectation"""

import numpy as np
import pytest

from src.errors import CapabilityError, DomainError
from src.expansion.coefficients import (
    alpha_estimate,
    alpha_j,
    chebyshev_moment,
    exact_chebyshev_moment,
    expand_expectation,
)
from src.expansion.models import AlphaEstimate, ExpansionReport
from src.expansion.smooth_input import SmoothInput
from src.symbolic.tables import eta, evaluate


def _w(lam):
    return lam * np.sqrt(1 - 4 / lam ** 2)


BATTERY = {
    "x3": SmoothInput.monomial(3),
    "x4": SmoothInput.monomial(4),
    "gauss": SmoothInput.gaussian(),
    "cos": SmoothInput.cosine(),
    "resolvent": SmoothInput.resolvent(2 + 2j),
}


class TestAlphaDistribution:
    """Chebyshev distribution form"""

    def test_quartic(self):
        """Test alpha_1(x^4) = 1"""
        assert alpha_j(SmoothInput.monomial(4), 1) == pytest.approx(1.0, abs=1e-12)

    def test_quadratic_has_no_correction(self):
        """Test alpha_1(x^2) = 0"""
        assert alpha_j(SmoothInput.monomial(2), 1) == pytest.approx(0.0, abs=1e-12)

    def test_zeroth_is_semicircle_average(self):
        """Test alpha_0 is the semicircle average"""
        assert alpha_j(SmoothInput.monomial(4), 0) == pytest.approx(2.0, abs=1e-12)

    def test_resolvent_first_order(self):
        """Test alpha_1(g_lambda) = w^-5"""
        lam = 3j
        assert alpha_j(SmoothInput.resolvent(lam), 1) == pytest.approx(_w(lam) ** -5, rel=1e-10)

    def test_resolvent_second_order(self):
        """Test alpha_2(g_lambda) = 21 w^-9 + 105 w^-11"""
        lam = 2 + 2j
        w = _w(lam)
        expected = 21 * w ** -9 + 105 * w ** -11
        assert alpha_j(SmoothInput.resolvent(lam), 2) == pytest.approx(expected, rel=1e-10)

    @pytest.mark.parametrize("j", [1, 2, 3])
    def test_affine_annihilated(self, j):
        """Test affine inputs have no corrections"""
        assert abs(alpha_j(SmoothInput.polynomial([0.3, -1.2]), j)) <= 1e-10

    def test_capability_required(self):
        """Test order 3j - 1 derivatives are required"""
        g = SmoothInput.from_callable(np.sin, [np.cos, lambda x: -np.sin(x)], name="sin")

        assert abs(alpha_j(g, 1)) <= 1e-12
        with pytest.raises(CapabilityError):
            alpha_j(g, 2)

    def test_negative_index_rejected(self):
        """Test negative index is rejected"""
        with pytest.raises(DomainError):
            alpha_j(SmoothInput.cosine(), -1)

    def test_unknown_path_rejected(self):
        """Test unknown path is rejected"""
        with pytest.raises(ValueError, match="Unknown alpha path"):
            alpha_j(SmoothInput.cosine(), 1, path="series")


class TestStieltjesConsistency:
    """alpha_j(g_lambda) = eta_j(lambda)"""

    @pytest.mark.parametrize("lam", [3j, 2 + 2j, -1 + 0.5j])
    @pytest.mark.parametrize("j", [0, 1, 2, 3])
    def test_matches_symbolic_eta(self, lam, j):
        """Test alpha_j(g_lambda) equals eta_j(lambda)"""
        numeric = alpha_j(SmoothInput.resolvent(lam), j)
        exact = evaluate(eta(j), lam)
        assert abs(numeric - exact) <= 1e-8 * abs(exact)


class TestAlphaIterated:
    """Iterated-T path as an independent cross-check"""

    @pytest.mark.parametrize("name", list(BATTERY))
    @pytest.mark.parametrize("j", [1, 2])
    def test_paths_agree(self, name, j):
        """Test iterated and distribution paths agree to 1e-6"""
        g = BATTERY[name]
        primary = alpha_j(g, j)
        iterated = alpha_j(g, j, path="iterated")
        assert abs(iterated - primary) <= 1e-6 * (1 + abs(primary))

    def test_affine_annihilated(self):
        """Test iterated path annihilates affine inputs"""
        assert abs(alpha_j(SmoothInput.polynomial([0.3, -1.2]), 1, path="iterated")) <= 1e-8

    def test_estimate_reports_gap(self):
        """Test estimate reports the gap between the paths"""
        estimate = alpha_estimate(SmoothInput.monomial(4), 1)

        assert isinstance(estimate, AlphaEstimate)
        assert estimate.distribution == pytest.approx(1.0, abs=1e-12)
        assert estimate.gap is not None and estimate.gap < 1e-6

    def test_estimate_without_cross_check(self):
        """Test alpha_0 estimate skips the cross-check"""
        estimate = alpha_estimate(SmoothInput.cosine(), 0)
        assert estimate.iterated is None
        assert estimate.gap is None


class TestChebyshevMoments:
    """(1/pi) integral x^p T_k(x/2) / sqrt(4 - x^2) dx = binom(p, (p-k)/2)"""

    def test_exact_values(self):
        """Test exact Chebyshev moments"""
        assert exact_chebyshev_moment(4, 2) == 4
        assert exact_chebyshev_moment(6, 0) == 20
        assert exact_chebyshev_moment(5, 2) == 0
        assert exact_chebyshev_moment(2, 4) == 0

    def test_identity_grid(self):
        """Test numeric Chebyshev moments match the binomials"""
        for p in range(13):
            for k in range(7):
                assert chebyshev_moment(p, k) == pytest.approx(exact_chebyshev_moment(p, k), abs=1e-10)


class TestExpandExpectation:
    """Partial sums, remainders and rate diagnostics"""

    def test_quadratic_is_exact(self):
        """Test E tr x^2 expansion is exact"""
        report = expand_expectation(SmoothInput.monomial(2), n=7, k=1)

        assert isinstance(report, ExpansionReport)
        assert report.partial_sums[-1] == pytest.approx(1.0, abs=1e-12)
        assert report.exact == pytest.approx(1.0, abs=1e-12)
        assert abs(report.remainder) <= 1e-9
        assert report.rate is None

    @pytest.mark.parametrize("n", [1, 2, 4, 8])
    def test_quartic_is_exact_at_first_order(self, n):
        """Test E tr x^4 = 2 + n^-2"""
        report = expand_expectation(SmoothInput.monomial(4), n=n, k=1)
        assert report.exact == pytest.approx(2.0 + n ** -2, abs=1e-9)
        assert abs(report.remainder) <= 1e-9

    def test_resolvent_remainder_is_next_term(self):
        """Test order-0 remainder is close to the next term"""
        lam = 3j
        report = expand_expectation(SmoothInput.resolvent(lam), n=16, k=0)
        predicted = abs(evaluate(eta(1), lam)) / 256
        assert predicted / 2 <= abs(report.remainder) <= 2 * predicted

    @pytest.mark.parametrize("k", [0, 1, 2])
    @pytest.mark.parametrize(
        "g",
        [SmoothInput.gaussian(), SmoothInput.cosine(), SmoothInput.resolvent(3j).imag_part()],
        ids=["gauss", "cos", "im-resolvent"],
    )
    def test_remainder_rate(self, g, k):
        """Remainders decay at least like n^-(2k+2) up to fit slack"""
        report = expand_expectation(g, n=8, k=k, ladder=[8, 16, 32, 64])

        assert report.rate is not None
        assert report.rate.points_used >= 2
        assert report.slope <= -(2 * k + 1.5)

    def test_odd_input_vanishes(self):
        """Re 1/(3i - x) is odd, so every coefficient and mean is zero"""
        g = SmoothInput.resolvent(3j).real_part()
        x = np.linspace(-4.0, 4.0, 17)
        report = expand_expectation(g, n=8, k=2, ladder=[8, 16, 32, 64])

        assert np.allclose(g.value(x) + g.value(-x), 0.0, atol=1e-15)
        assert max(abs(a) for a in report.alphas) <= 1e-12
        assert abs(report.exact) <= 1e-12
        assert report.rate.slope is None
        assert report.rate.points_used == 0

    def test_negative_order_rejected(self):
        """Test negative order is rejected"""
        with pytest.raises(DomainError):
            expand_expectation(SmoothInput.cosine(), n=4, k=-1)
