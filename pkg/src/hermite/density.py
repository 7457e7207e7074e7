"""
Spectral density h_n of GUE(n, 1/n) and its derivatives

h_n(x) = (2n)^(-1/2) sum_{k=0}^{n-1} phi_k(sqrt(n/2) x)^2

The sum starts at k = 0; this is the normalisation for which h_n is a
probability density (n = 1 gives the standard normal density).
"""

import logging
import math
from functools import lru_cache
from typing import Callable

import numpy as np

from config.settings import get_settings

from ..errors import DomainError, NumericError
from ..numerics.quadrature import box_radius, gauss_legendre, resolved_nodes
from .functions import HermiteEvaluator, ArrayLike
from .models import DensityArrays, DensityBundle

logger = logging.getLogger(__name__)

MAX_SIZE = 10_000


def _check_size(n: int) -> None:
    if n < 1 or int(n) != n:
        raise DomainError(f"Matrix size must be a positive integer, got {n}")
    if n > MAX_SIZE:
        raise DomainError(f"Matrix size {n} exceeds supported maximum {MAX_SIZE}")


def density_arrays(n: int, x: ArrayLike) -> DensityArrays:
    """
    Evaluate h_n and derivatives on an array of points

    With beta(t) = sum_{k<n} phi_k(t)^2 and t = sqrt(n/2) x:
        beta'   = -sqrt(2n) phi_n phi_{n-1}
        beta''  = 2n (phi_n^2 - phi_{n-1}^2)
        beta''' = 4n (phi_n phi_n' - phi_{n-1} phi_{n-1}')
    with phi_k' = sqrt(k/2) phi_{k-1} - sqrt((k+1)/2) phi_{k+1}.
    The third derivative used downstream (h3) is solved from
    n^-2 h''' + (4 - x^2) h' + x h = 0; h3_direct is kept for checks.
    """
    _check_size(n)
    pts = np.atleast_1d(np.asarray(x, dtype=float))
    s = math.sqrt(n / 2.0)
    lad = HermiteEvaluator(n).ladder(s * pts)

    dphi_n = math.sqrt(n / 2.0) * lad.phi_nm1 - math.sqrt((n + 1) / 2.0) * lad.phi_np1
    dphi_nm1 = math.sqrt((n - 1) / 2.0) * lad.phi_nm2 - math.sqrt(n / 2.0) * lad.phi_n

    beta1 = -math.sqrt(2.0 * n) * lad.phi_n * lad.phi_nm1
    beta2 = 2.0 * n * (lad.phi_n ** 2 - lad.phi_nm1 ** 2)
    beta3 = 4.0 * n * (lad.phi_n * dphi_n - lad.phi_nm1 * dphi_nm1)

    c = 1.0 / math.sqrt(2.0 * n)
    h = c * lad.sum_sq
    h1 = c * s * beta1
    h2 = c * s * s * beta2
    h3_direct = c * s ** 3 * beta3
    h3 = -float(n) ** 2 * ((4.0 - pts ** 2) * h1 + pts * h)

    return DensityArrays(n=n, x=pts, h=h, h1=h1, h2=h2, h3=h3, h3_direct=h3_direct)


def density_bundle(n: int, x: float) -> DensityBundle:
    """
    Density bundle of GUE(n, 1/n) at a single point

    Args:
        n: Matrix size, 1 <= n <= 10000
        x: Evaluation point

    Returns:
        DensityBundle with h, h', h'', h''' (ODE), h''' (direct), h_tilde

    Raises:
        DomainError: If n is out of range
    """
    return density_arrays(n, float(x)).bundle(0)


@lru_cache(maxsize=32)
def _density_on_rule(n: int, nodes: int, radius: float) -> DensityArrays:
    x, _ = gauss_legendre(nodes, -radius, radius)
    return density_arrays(n, np.array(x))


def density_on_rule(n: int, nodes: int = None, radius: float = None):
    """
    Quadrature nodes, weights and density arrays on the truncation box

    Cached per (n, nodes, radius); the returned arrays must not be modified.
    """
    _check_size(n)
    nodes = nodes or get_settings().quadrature_nodes
    radius = float(radius if radius is not None else box_radius(n))
    nodes = resolved_nodes(n, nodes, radius)
    x, w = gauss_legendre(nodes, -radius, radius)
    return x, w, _density_on_rule(n, nodes, radius)


def whole_line_integral(
    g: Callable[[np.ndarray], np.ndarray],
    n: int,
    nodes: int = None,
    radius: float = None,
):
    """
    integral g(t) h_n(t) dt over the whole line (truncation box quadrature)

    Args:
        g: Vectorised function; may return complex values
        n: Matrix size

    Returns:
        The integral as float or complex
    """
    x, w, dens = density_on_rule(n, nodes=nodes, radius=radius)
    vals = np.asarray(g(x))
    result = np.sum(w * vals * dens.h)
    if not np.isfinite(result):
        raise NumericError(f"Non-finite integral against h_{n}", {"n": n})
    return complex(result) if np.iscomplexobj(result) else float(result)
