"""Unit tests for S, T and the operator identity"""

import numpy as np
import pytest

from src.errors import CapabilityError
from src.expansion.operator import (
    TransferOperator,
    apply_T,
    operator_identity_gap,
    semicircle_average,
    solve_S,
)
from src.expansion.smooth_input import SmoothInput


@pytest.fixture
def interior():
    return np.linspace(-1.9, 1.9, 39)


class TestSemicircleAverage:
    """Semicircle moments"""

    @pytest.mark.parametrize("coeffs,expected", [([1.0], 1.0), ([0, 0, 1.0], 1.0), ([0, 0, 0, 0, 1.0], 2.0)])
    def test_catalan_moments(self, coeffs, expected):
        """Even moments are Catalan numbers"""
        assert semicircle_average(SmoothInput.polynomial(coeffs)) == pytest.approx(expected, abs=1e-12)

    def test_resolvent_is_stieltjes_transform(self):
        """Average of 1/(lambda - x) is (lambda - sqrt(lambda^2 - 4))/2"""
        lam = 3j
        w = lam * np.sqrt(1 - 4 / lam ** 2)
        value = semicircle_average(SmoothInput.resolvent(lam))
        assert value == pytest.approx((lam - w) / 2, abs=1e-13)


class TestSolveS:
    """Smooth solution of (t^2 - 4) f' + 3t f = g_c"""

    def test_constant_gives_zero(self, interior):
        """Constants are centered away"""
        f = solve_S(SmoothInput.polynomial([2.5]), degree=32)
        assert np.max(np.abs(f(interior))) < 1e-13

    def test_linear_input(self, interior):
        """S x = 1/3"""
        f = solve_S(SmoothInput.monomial(1), degree=32)
        assert np.allclose(f(interior), 1.0 / 3.0, atol=1e-13)

    def test_quadratic_endpoint_values(self):
        """S x^2 takes the values +-1/2 at +-2"""
        f = solve_S(SmoothInput.monomial(2), degree=32)

        assert f.endpoint_derivatives[0][1] == pytest.approx(0.5)
        assert f.endpoint_derivatives[0][0] == pytest.approx(-0.5)
        assert f(2.0) == pytest.approx(0.5, abs=1e-12)

    @pytest.mark.parametrize(
        "g", [SmoothInput.gaussian(), SmoothInput.cosine(), SmoothInput.monomial(2)], ids=["gauss", "cos", "square"]
    )
    def test_exact_endpoint_values_are_cached(self, g):
        """endpoint_derivatives holds g_c(+-2)/6 exactly; the interpolant agrees to interpolation accuracy"""
        f = solve_S(g)
        average = semicircle_average(g)
        left = -(g.value(-2.0) - average) / 6.0
        right = (g.value(2.0) - average) / 6.0

        assert f.endpoint_derivatives[0][0] == pytest.approx(left, rel=1e-15, abs=1e-16)
        assert f.endpoint_derivatives[0][1] == pytest.approx(right, rel=1e-15, abs=1e-16)
        assert f(-2.0) == pytest.approx(left, abs=1e-10)
        assert f(2.0) == pytest.approx(right, abs=1e-10)

    def test_quartic_closed_form(self, interior):
        """S x^4 = t^3/6 + t/2"""
        f = solve_S(SmoothInput.monomial(4), degree=32)
        assert np.allclose(f(interior), interior ** 3 / 6 + interior / 2, atol=1e-12)

    @pytest.mark.parametrize(
        "g",
        [SmoothInput.gaussian(), SmoothInput.cosine(), SmoothInput.resolvent(2 + 2j), SmoothInput.monomial(3)],
        ids=["gauss", "cos", "resolvent", "cube"],
    )
    def test_equation_residual(self, g):
        """Residual at Chebyshev nodes stays below 1e-8 |g_c|"""
        op = TransferOperator(g)
        t = np.cos(np.pi * (np.arange(100) + 0.5) / 100) * 2.0
        g_c = np.max(np.abs(op.centered(np.linspace(-2, 2, 401))))

        assert np.max(op.ode_residual(t)) <= 1e-8 * g_c

    def test_endpoint_formula_matches_interior_limit(self):
        """The l-form approaches the endpoint formula at +-2"""
        g = SmoothInput.gaussian()
        op = TransferOperator(g)
        ends = op.endpoint_derivatives()

        assert op.s_values(2.0 - 1e-9)[0] == pytest.approx(ends[0][1], abs=1e-8)
        assert op.s_values(-2.0 + 1e-9)[0] == pytest.approx(ends[0][0], abs=1e-8)
        assert ends[0][1] == pytest.approx((g(2.0) - op.average) / 6.0)

    def test_reflection_symmetry(self):
        """Even g gives odd Sg"""
        op = TransferOperator(SmoothInput.gaussian())
        t = np.array([0.3, 1.2, 1.8, 2.5])
        assert np.allclose(op.s_values(-t), -op.s_values(t), atol=1e-12)

    def test_needs_one_derivative(self):
        """S requires g'"""
        g = SmoothInput.from_callable(np.sin, name="sin")
        with pytest.raises(CapabilityError):
            solve_S(g)


class TestApplyT:
    """Tg = (Sg)'''"""

    def test_constant_gives_zero(self):
        """T annihilates constants"""
        tg = apply_T(SmoothInput.polynomial([4.0]), degree=32)
        assert tg.max_abs() < 1e-6

    def test_quartic_gives_one(self):
        """T x^4 = 1"""
        tg = apply_T(SmoothInput.monomial(4), degree=32)
        t = np.linspace(-2.0, 2.0, 81)

        assert np.allclose(tg(t), 1.0, atol=1e-6)
        assert tg.semicircle_pairing() == pytest.approx(1.0, abs=1e-7)

    def test_quartic_is_flat_through_the_endpoints(self):
        """T x^4 stays at 1 to rounding level across +-2 and beyond"""
        op = TransferOperator(SmoothInput.monomial(4))
        t = np.concatenate([np.linspace(-2.5, -1.5, 41), np.linspace(1.5, 2.5, 41)])

        assert op.integral_form
        assert np.max(np.abs(op.t_values(t) - 1.0)) <= 1e-12

    def test_wide_quartic_grid_is_constant(self):
        """The interpolant of T x^4 on [-2.5, 2.5] has no visible non-constant modes"""
        tg = apply_T(SmoothInput.monomial(4), half_width=2.5)
        t = np.linspace(-2.5, 2.5, 101)

        assert np.max(np.abs(tg(t) - 1.0)) <= 1e-12
        assert tg.series.coef[0] == pytest.approx(1.0, abs=1e-12)
        assert np.max(np.abs(tg.series.coef[1:]), initial=0.0) <= 1e-12

    @pytest.mark.parametrize(
        "g",
        [SmoothInput.gaussian(), SmoothInput.cosine(), SmoothInput.resolvent(2 + 2j)],
        ids=["gauss", "cos", "resolvent"],
    )
    def test_integral_form_matches_recursion(self, g):
        """Where both apply, the differentiated l-form equals the recursion"""
        op = TransferOperator(g)
        t = np.array([-1.6, -1.3, 1.1, 1.4, 1.7])

        assert np.allclose(op.t_values(t), op.derivatives(t)[3], rtol=0.0, atol=1e-10)

    def test_resolvent_pairing(self):
        """alpha_1 of g_lambda is w^-5"""
        lam = 3j
        w = lam * np.sqrt(1 - 4 / lam ** 2)
        tg = apply_T(SmoothInput.resolvent(lam))
        assert tg.semicircle_pairing() == pytest.approx(w ** -5, rel=1e-7)

    def test_band_agrees_with_recursion(self):
        """The spectral band fallback matches the recursion just outside it"""
        op = TransferOperator(SmoothInput.gaussian())
        t = np.array([1.93, 2.07])
        recursion = op.derivatives(t)[3]
        band = op._band_series(1)(t)
        assert np.allclose(band, recursion, atol=1e-6)

    def test_two_derivative_input_uses_band(self):
        """Inputs with only g'' fall back to the recursion and the spectral band"""
        g = SmoothInput.from_callable(np.cos, [lambda x: -np.sin(x), lambda x: -np.cos(x)], name="cos2")
        op = TransferOperator(g)
        t = np.array([-2.01, -1.5, 0.2, 1.7, 2.02])

        assert not op.integral_form
        assert np.allclose(op.t_values(t), TransferOperator(SmoothInput.cosine()).t_values(t), atol=1e-6)

    def test_endpoint_limit_reported(self):
        """Tg at +-2 matches the exact endpoint limit"""
        tg = apply_T(SmoothInput.gaussian())
        left, right = tg.endpoint_derivatives[0]

        assert tg(2.0) == pytest.approx(right, abs=1e-6)
        assert tg(-2.0) == pytest.approx(left, abs=1e-6)

    def test_needs_two_derivatives(self):
        """T requires g''"""
        g = SmoothInput.from_callable(np.sin, [np.cos], name="sin")
        with pytest.raises(CapabilityError, match="2 needed"):
            apply_T(g)


class TestOperatorIdentity:
    """E tr_n g = semicircle average + n^-2 E tr_n Tg"""

    @pytest.mark.parametrize("n", [4, 16])
    @pytest.mark.parametrize(
        "g",
        [
            SmoothInput.monomial(4),
            SmoothInput.gaussian(),
            SmoothInput.cosine(),
            SmoothInput.resolvent(2 + 2j),
        ],
        ids=["x4", "gauss", "cos", "resolvent"],
    )
    def test_identity_holds(self, g, n):
        """The identity gap vanishes to quadrature accuracy"""
        assert abs(operator_identity_gap(g, n)) <= 1e-8
