"""
The solution operator S and the transfer operator T = (S .)'''

For g in C^inf, Sg is the unique smooth solution f of
    (t^2 - 4) f'(t) + 3t f(t) = g(t) - (1/2pi) integral g(s) sqrt(4 - s^2) ds,
and E{tr_n g(X_n)} = (1/2pi) integral g sqrt(4 - t^2) dt + n^-2 E{tr_n Tg(X_n)}.

Values of Sg come from two integral representations of the same solution:
    |t| <= 1: f(t) = (4 - t^2)^(-3/2) integral_0^{arccos(t/2)} 4 sin^2(u) g_c(2 cos u) du
    t > 1:    f(t) = integral_0^1 v^(1/2) g_c(sqrt(4 + vy)) / (2 sqrt(4 + vy)) dv,  y = t^2 - 4
and t < -1 by reflection. The second form has no singularity at t = 2 and
stays valid for t > 2.

Writing the second form as f(t) = F(t^2 - 4), F(y) = integral_0^1 v^(1/2) G(4 + vy) dv
with G(u) = g_c(sqrt u) / (2 sqrt u), derivatives pass under the integral:
    F^(m)(y) = integral_0^1 v^(1/2 + m) G^(m)(4 + vy) dv,
    f'''(t) = 12 t F''(y) + 8 t^3 F'''(y).
"""

import logging
from functools import lru_cache
from typing import Dict, Tuple

import numpy as np
from numpy.polynomial import Chebyshev

from config.settings import get_settings

from ..errors import InputError, NumericError
from ..hermite.density import density_on_rule
from ..numerics.quadrature import gauss_jacobi_sqrt, gauss_legendre, semicircle_rule
from .grid_function import GridFunction
from .smooth_input import SmoothInput

logger = logging.getLogger(__name__)

# degree of the local interpolant used inside the endpoint band
BAND_DEGREE = 24


@lru_cache(maxsize=None)
def _u_derivative_terms(m: int) -> Dict[Tuple[int, int], float]:
    """
    d^m/du^m [g_c(s) / (2s)] with s = sqrt(u), as {(p, i): c} for sum c s^p g^(i)(s)

    g^(0) stands for g_c. Uses d/du = (1/(2s)) d/ds.
    """
    terms: Dict[Tuple[int, int], float] = {(-1, 0): 0.5}
    for _ in range(m):
        nxt: Dict[Tuple[int, int], float] = {}
        for (p, i), c in terms.items():
            if p:
                nxt[(p - 2, i)] = nxt.get((p - 2, i), 0.0) + c * p / 2.0
            nxt[(p - 1, i + 1)] = nxt.get((p - 1, i + 1), 0.0) + c / 2.0
        terms = nxt
    return terms


def semicircle_average(g: SmoothInput, nodes: int = None):
    """
    (1/2pi) integral_{-2}^{2} g(s) sqrt(4 - s^2) ds

    Gauss-Chebyshev (second kind); exact for polynomials of degree < 2*nodes.
    """
    x, w = semicircle_rule(nodes or get_settings().semicircle_nodes)
    vals = np.asarray(g.value(x))
    if not np.all(np.isfinite(vals)):
        raise InputError(f"{g.name} is not finite on [-2, 2]")
    result = np.sum(w * vals)
    return complex(result) if np.iscomplexobj(result) else float(result)


class TransferOperator:
    """
    Pointwise evaluation of Sg and Tg for one input g

    For |t| <= 1, (Sg)', (Sg)'', (Sg)''' come from the differentiated equation
        (t^2 - 4) f^(k+1) + (2k+3) t f^(k) + k(k+2) f^(k-1) = g^(k)
    solved for f^(k+1), where |t^2 - 4| >= 3. For |t| > 1, Tg is the l-form
    differentiated under the integral, which needs g'''. Inputs with only two
    derivatives fall back to the recursion everywhere except within
    endpoint_band of t = +-2, where f is interpolated locally from its
    integral form and differentiated spectrally.
    """

    def __init__(self, g: SmoothInput, inner_nodes: int = None, endpoint_band: float = None):
        """
        Initialize operator for g

        Args:
            g: Input function
            inner_nodes: Nodes of the inner integrals (GUE_EXPAND_INNER_NODES)
            endpoint_band: Half-width delta of the band around +-2 (GUE_EXPAND_ENDPOINT_BAND)
        """
        settings = get_settings()
        self.g = g
        self.inner_nodes = inner_nodes or settings.inner_nodes
        self.endpoint_band = endpoint_band if endpoint_band is not None else settings.endpoint_band
        self.average = semicircle_average(g)
        self._band: Dict[int, Chebyshev] = {}

    def centered(self, x):
        return self.g.value(x) - self.average

    # Sg

    def s_values(self, t) -> np.ndarray:
        """f = Sg at the points t (any real t)"""
        t = np.atleast_1d(np.asarray(t, dtype=float))
        out = np.zeros(t.shape, dtype=complex if np.iscomplexobj(self.average) or self.g.is_complex() else float)

        inner = np.abs(t) <= 1.0
        if np.any(inner):
            out[inner] = self._theta_form(t[inner])
        right = t > 1.0
        if np.any(right):
            out[right] = self._l_form(t[right], 1.0)
        left = t < -1.0
        if np.any(left):
            out[left] = -self._l_form(-t[left], -1.0)

        if not np.all(np.isfinite(out)):
            logger.error(f"Non-finite S{self.g.name} values")
            raise NumericError(f"S{self.g.name} is not finite", {"g": self.g.name})
        return out

    def _theta_form(self, t: np.ndarray) -> np.ndarray:
        u, w = gauss_legendre(self.inner_nodes, 0.0, 1.0)
        upper = np.arccos(t / 2.0)
        theta = np.outer(upper, u)
        integrand = 4.0 * np.sin(theta) ** 2 * self.centered(2.0 * np.cos(theta))
        return upper * (integrand @ w) / (4.0 - t * t) ** 1.5

    def _l_form(self, t: np.ndarray, side: float) -> np.ndarray:
        v, w = gauss_jacobi_sqrt(self.inner_nodes)
        y = t * t - 4.0
        s = np.sqrt(4.0 + np.outer(y, v))
        integrand = self.centered(side * s) / (2.0 * s)
        return integrand @ w

    def endpoint_derivatives(self, kmax: int = 3) -> Dict[int, Tuple[complex, complex]]:
        """
        Exact f^(k)(-2), f^(k)(2) for k <= kmax

        At t = +-2 the differentiated equation gives
            f^(k)(+-2) = [g_c^(k)(+-2) - k(k+2) f^(k-1)(+-2)] / (+-2 (2k+3)).
        Orders beyond the derivative capability of g are omitted.
        """
        kmax = min(kmax, self.g.max_order) if not self.g.sampled else kmax
        ends = np.array([-2.0, 2.0])
        result: Dict[int, Tuple[complex, complex]] = {}
        prev = np.zeros(2)
        for k in range(kmax + 1):
            gk = self.centered(ends) if k == 0 else self.g.derivative(k, ends)
            cur = (gk - k * (k + 2) * prev) / (ends * (2 * k + 3))
            result[k] = (cur[0], cur[1])
            prev = cur
        return result

    # Tg

    @property
    def integral_form(self) -> bool:
        """True when Tg for |t| > 1 comes from the differentiated l-form"""
        return self.g.sampled or self.g.max_order >= 3

    def _l_derivative(self, tau: np.ndarray, side: float, m: int) -> np.ndarray:
        """F^(m)(tau^2 - 4) for the input x -> g(side * x), tau >= 1"""
        v, w = gauss_jacobi_sqrt(self.inner_nodes)
        s = np.sqrt(4.0 + np.outer(tau * tau - 4.0, v))
        total = 0.0
        for (p, i), c in _u_derivative_terms(m).items():
            gi = self.centered(side * s) if i == 0 else side ** i * self.g.derivative(i, side * s)
            total = total + c * s ** p * gi
        return (total * v ** m) @ w

    def _l_third_derivative(self, tau: np.ndarray, side: float) -> np.ndarray:
        f2 = self._l_derivative(tau, side, 2)
        f3 = self._l_derivative(tau, side, 3)
        return 12.0 * tau * f2 + 8.0 * tau ** 3 * f3

    def _band_series(self, side: int) -> Chebyshev:
        if side not in self._band:
            c, h = 2.0 * side, 2.0 * self.endpoint_band
            self._band[side] = Chebyshev.interpolate(
                self.s_values, BAND_DEGREE, domain=[c - h, c + h]
            ).deriv(3)
        return self._band[side]

    def derivatives(self, t) -> Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        """(f, f', f'', f''') at points away from +-2 via the differentiated equation"""
        self.g.require_order(2)
        t = np.atleast_1d(np.asarray(t, dtype=float))
        d = t * t - 4.0
        f = self.s_values(t)
        f1 = (self.centered(t) - 3.0 * t * f) / d
        f2 = (self.g.derivative(1, t) - 5.0 * t * f1 - 3.0 * f) / d
        f3 = (self.g.derivative(2, t) - 7.0 * t * f2 - 8.0 * f1) / d
        return f, f1, f2, f3

    def t_values(self, t) -> np.ndarray:
        """Tg = (Sg)''' at the points t"""
        t = np.atleast_1d(np.asarray(t, dtype=float))
        out = np.zeros(t.shape, dtype=complex if self.g.is_complex() else float)
        if self.integral_form:
            right, left = t > 1.0, t < -1.0
            interior = ~(right | left)
            if np.any(interior):
                out[interior] = self.derivatives(t[interior])[3]
            # f(t) = -F_(-t) on the left, so f''' = F_'''(-t)
            if np.any(right):
                out[right] = self._l_third_derivative(t[right], 1.0)
            if np.any(left):
                out[left] = self._l_third_derivative(-t[left], -1.0)
            return out

        near_right = np.abs(t - 2.0) < self.endpoint_band
        near_left = np.abs(t + 2.0) < self.endpoint_band
        interior = ~(near_left | near_right)
        if np.any(interior):
            out[interior] = self.derivatives(t[interior])[3]
        if np.any(near_right):
            out[near_right] = self._band_series(1)(t[near_right])
        if np.any(near_left):
            out[near_left] = self._band_series(-1)(t[near_left])
        return out

    def ode_residual(self, t) -> np.ndarray:
        """|(t^2 - 4) f' + 3t f - g_c| with f' from the interpolant of Sg"""
        t = np.atleast_1d(np.asarray(t, dtype=float))
        grid = GridFunction.from_function(self.s_values)
        f = grid(t)
        f1 = grid.derivative(1)(t)
        return np.abs((t * t - 4.0) * f1 + 3.0 * t * f - self.centered(t))


def solve_S(g: SmoothInput, degree: int = None, half_width: float = 2.0) -> GridFunction:
    """
    Solve (t^2 - 4) f' + 3t f = g_c for the smooth solution f = Sg

    Args:
        g: Input with at least one derivative (or sampled)
        degree: Chebyshev degree of the result
        half_width: Domain [-L, L] of the result, L >= 2

    Returns:
        GridFunction of Sg. The interpolant has no node at t = +-2 and matches
        f(+-2) only to interpolation accuracy; the exact endpoint values
        f(+-2) = +-g_c(+-2)/6 and higher endpoint derivatives are held in
        endpoint_derivatives.
    """
    op = TransferOperator(g)
    if not g.sampled:
        g.require_order(1)
    ends = op.endpoint_derivatives(kmax=3 if (g.sampled or g.max_order >= 3) else g.max_order)
    return GridFunction.from_function(op.s_values, degree=degree, half_width=half_width, endpoint_derivatives=ends)


def apply_T(g: SmoothInput, degree: int = None, half_width: float = 2.0) -> GridFunction:
    """
    Tg = (Sg)''' as a GridFunction on [-L, L]

    Raises:
        CapabilityError: If g has fewer than 2 accessible derivatives
    """
    g.require_order(2)
    op = TransferOperator(g)
    ends = op.endpoint_derivatives(kmax=3 if (g.sampled or g.max_order >= 3) else 2)
    shifted = {0: ends[3]} if 3 in ends else {}
    grid = GridFunction.from_function(op.t_values, degree=degree, half_width=half_width, endpoint_derivatives=shifted)
    logger.debug(f"T{g.name}: tail |c_N| = {grid.tail:.2e}")
    return grid


def operator_identity_gap(g: SmoothInput, n: int, nodes: int = None):
    """
    integral g h_n - (1/2pi) integral g sqrt(4 - t^2) - n^-2 integral (Tg) h_n

    Zero for every n; the integrals against h_n use the whole-line rule.
    """
    op = TransferOperator(g)
    x, w, dens = density_on_rule(n, nodes=nodes)
    exact = np.sum(w * g.value(x) * dens.h)
    t_part = np.sum(w * op.t_values(x) * dens.h)
    gap = exact - op.average - t_part / float(n) ** 2
    return complex(gap) if np.iscomplexobj(gap) else float(gap)
