"""
Trace covariances and the two-dimensional Cauchy transform

    Cov{Tr_n f(X_n), Tr_n g(X_n)} = integral Delta f(x,y) Delta g(x,y) rho_n(x,y) dx dy

G_n(lambda, mu) = Cov{Tr (lambda - X_n)^-1, Tr (mu - X_n)^-1} has a closed
form in G_n and its derivatives, and the expansion
    G_n(lambda, mu) = 1/(2(lambda - mu)^2) sum_l Gamma_l(lambda, mu) n^-2l
    G_n(lambda, lambda) = 1/4 sum_l Upsilon_l(lambda) n^-2l.
"""

import logging
from typing import Callable, List, Sequence

import numpy as np

from config.settings import get_settings

from ..errors import DomainError
from ..expansion.smooth_input import SmoothInput
from ..hermite.density import density_on_rule
from ..hermite.kernel import kernel_field, limit_kernel_integral
from ..numerics.quadrature import box_radius, resolved_nodes
from ..numerics.rate_fit import RateEstimator
from ..symbolic.bivariate import gamma_l, upsilon_l
from .divided_difference import divided_difference, divided_difference_grid
from .models import Cov2Report, CovarianceEstimate
from .resolvent import resolvent_set

logger = logging.getLogger(__name__)


def _scalar(value):
    return complex(value) if np.iscomplexobj(value) else float(value)


def cov_trace(
    f: SmoothInput,
    g: SmoothInput,
    n: int,
    nodes: int = None,
    radius: float = None,
):
    """
    Cov{Tr_n f(X_n), Tr_n g(X_n)} by tensor quadrature against rho_n

    Args:
        f, g: Differentiable inputs
        n: Matrix size
        nodes: Nodes per axis (GUE_EXPAND_TENSOR_NODES)
        radius: Truncation box half-width

    Returns:
        Covariance, float or complex
    """
    field = kernel_field(n, nodes=nodes, radius=radius)
    df = divided_difference_grid(f, field.grid_x, field.grid_y)
    dg = df if g is f else divided_difference_grid(g, field.grid_x, field.grid_y)
    value = field.integrate(df * dg)
    logger.debug(f"Cov(Tr {f.name}, Tr {g.name}) at n={n}: {value}")
    return value


def cov_estimate(f: SmoothInput, g: SmoothInput, n: int = None) -> CovarianceEstimate:
    """cov_trace (or limit_covariance when n is None) wrapped with its inputs"""
    if n is None:
        nodes = get_settings().chebyshev_moment_nodes // 4
        return CovarianceEstimate(f=f.name, g=g.name, n=None, value=limit_covariance(f, g, nodes), nodes=nodes)
    radius = box_radius(n)
    nodes = resolved_nodes(n, get_settings().tensor_nodes, radius)
    value = cov_trace(f, g, n, nodes=nodes, radius=radius)
    return CovarianceEstimate(f=f.name, g=g.name, n=n, value=value, nodes=nodes, radius=radius)


def limit_covariance(f: SmoothInput, g: SmoothInput, nodes: int = None):
    """integral Delta f Delta g rho over (-2, 2)^2, the n -> infinity covariance"""
    return limit_kernel_integral(
        lambda X, Y: divided_difference(f, X, Y) * divided_difference(g, X, Y),
        nodes=nodes,
    )


def variance_clt_limit(f: SmoothInput, nodes: int = None):
    """Limit variance sigma^2(f) = integral (Delta f)^2 rho"""
    return limit_covariance(f, f, nodes=nodes)


def kernel_characteristic(n: int, z: float, w: float, nodes: int = None):
    """integral e^(izx + iwy) rho_n(x, y) dx dy"""
    field = kernel_field(n, nodes=nodes)
    phase = np.exp(1j * z * field.grid_x)[:, None] * np.exp(1j * w * field.grid_y)[None, :]
    return complex(field.integrate(phase))


def limit_characteristic(z: float, w: float, nodes: int = None):
    """integral e^(izx + iwy) rho(x, y) dx dy"""
    return complex(limit_kernel_integral(lambda X, Y: np.exp(1j * (z * X + w * Y)), nodes=nodes))


def partial_integration_gap(
    f: Callable[[np.ndarray, np.ndarray], np.ndarray],
    f_xy: Callable[[np.ndarray, np.ndarray], np.ndarray],
    n: int,
    nodes: int = None,
):
    """
    integral f h_n' (x) h_n' - integral (d^2 f / dx dy) h_n (x) h_n

    Zero for smooth f decaying at infinity.
    """
    x, w, dens = density_on_rule(n, nodes=nodes)
    X, Y = np.meshgrid(x, x, indexing="ij")
    a = w * dens.h1
    b = w * dens.h
    direct = a @ np.asarray(f(X, Y)) @ a
    moved = b @ np.asarray(f_xy(X, Y)) @ b
    return _scalar(direct - moved)


def _is_diagonal(lam: complex, mu: complex) -> bool:
    return abs(lam - mu) < get_settings().diagonal_switch


def g2_exact(n: int, lam: complex, mu: complex, nodes: int = None) -> complex:
    """
    G_n(lambda, mu) from G_n and its derivatives

    Off the diagonal
        -1/(2(lambda-mu)^2) [G~(lambda)G~(mu) - (2G'(lambda)-1)(2G'(mu)-1) + 1 - n^-2 G''(lambda)G''(mu)]
    and for |lambda - mu| < GUE_EXPAND_DIAGONAL_SWITCH
        1/4 (lambda^2 - 4) G''(lambda)^2 - 1/(4n^2) G'''(lambda)^2.

    Raises:
        ConditioningError: If lambda or mu is too close to the spectrum
    """
    lam, mu = complex(lam), complex(mu)
    a = resolvent_set(n, lam, nodes=nodes)
    if _is_diagonal(lam, mu):
        return 0.25 * (lam * lam - 4) * a.G2 ** 2 - a.G3 ** 2 / (4 * n * n)
    b = resolvent_set(n, mu, nodes=nodes)
    bracket = (
        a.G_tilde * b.G_tilde
        - (2 * a.G1 - 1) * (2 * b.G1 - 1)
        + 1
        - a.G2 * b.G2 / (n * n)
    )
    return -bracket / (2 * (lam - mu) ** 2)


def _expansion_terms(lam: complex, mu: complex, k: int, diagonal: bool) -> List[complex]:
    if diagonal:
        return [0.25 * complex(upsilon_l(l).evaluate(lam)) for l in range(k + 1)]
    scale = 1.0 / (2 * (lam - mu) ** 2)
    return [scale * complex(gamma_l(l).evaluate(lam, mu)) for l in range(k + 1)]


def _partials(terms: Sequence[complex], n: int) -> List[complex]:
    out, total = [], 0j
    for l, term in enumerate(terms):
        total += term * float(n) ** (-2 * l)
        out.append(total)
    return out


def g2_expansion(
    n: int,
    lam: complex,
    mu: complex,
    k: int,
    ladder: Sequence[int] = None,
) -> Cov2Report:
    """
    Order-k expansion of G_n(lambda, mu) with remainder diagnostics

    Args:
        n: Matrix size of the reported remainder
        lam, mu: Spectral parameters
        k: Truncation order
        ladder: Matrix sizes for the rate fit (None to skip)

    Returns:
        Cov2Report
    """
    if k < 0:
        raise DomainError(f"Truncation order must be non-negative, got {k}")
    lam, mu = complex(lam), complex(mu)
    diagonal = _is_diagonal(lam, mu)
    terms = _expansion_terms(lam, mu, k, diagonal)

    partials = _partials(terms, n)
    exact = g2_exact(n, lam, mu)
    ladder = list(ladder or [])
    remainders = [g2_exact(m, lam, mu) - _partials(terms, m)[-1] for m in ladder]
    rate = RateEstimator().fit(ladder, remainders) if ladder else None
    if rate is not None:
        logger.info(f"G_n({lam}, {mu}) order {k}: remainder slope {rate.slope}")

    return Cov2Report(
        n=n,
        lam=lam,
        mu=mu,
        k=k,
        diagonal=diagonal,
        exact=exact,
        expansion_partials=partials,
        remainder=exact - partials[-1],
        ladder=ladder,
        ladder_remainders=remainders,
        rate=rate,
    )


def leading_term_literature(lam: complex, mu: complex, a: float = 2.0) -> complex:
    """
    Leading coefficient of G_n(lambda, mu) for a Wigner matrix of variance a^2/4

        1/(2(lambda-mu)^2) [(lambda mu - a^2) / ((lambda^2-a^2)^(1/2) (mu^2-a^2)^(1/2)) - 1]
    with (z^2 - a^2)^(1/2) = z sqrt(1 - a^2/z^2).
    """
    lam, mu = complex(lam), complex(mu)
    root_l = lam * np.sqrt(1 - a * a / (lam * lam))
    root_m = mu * np.sqrt(1 - a * a / (mu * mu))
    return complex(((lam * mu - a * a) / (root_l * root_m) - 1) / (2 * (lam - mu) ** 2))
