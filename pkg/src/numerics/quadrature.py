"""
Quadrature rules used across the package

All rules return read-only (nodes, weights) arrays so that cached rules can be
shared between threads.
"""

import logging
import math
from functools import lru_cache
from typing import Tuple

import numpy as np
from scipy.special import roots_chebyu, roots_jacobi

from config.settings import get_settings

logger = logging.getLogger(__name__)


def _frozen(*arrays: np.ndarray) -> Tuple[np.ndarray, ...]:
    for a in arrays:
        a.flags.writeable = False
    return arrays


@lru_cache(maxsize=64)
def gauss_legendre(nodes: int, a: float = -1.0, b: float = 1.0) -> Tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre rule mapped to [a, b]"""
    u, w = np.polynomial.legendre.leggauss(nodes)
    half = 0.5 * (b - a)
    return _frozen(half * u + 0.5 * (a + b), half * w)


@lru_cache(maxsize=16)
def gauss_jacobi_sqrt(nodes: int) -> Tuple[np.ndarray, np.ndarray]:
    """
    Rule for integral_0^1 v^(1/2) F(v) dv

    Gauss-Jacobi with weight (1+x)^(1/2) on [-1, 1], pulled back by
    v = (1+x)/2.
    """
    x, w = roots_jacobi(nodes, 0.0, 0.5)
    return _frozen(0.5 * (1.0 + x), w * 0.5 ** 1.5)


@lru_cache(maxsize=16)
def semicircle_rule(nodes: int) -> Tuple[np.ndarray, np.ndarray]:
    """
    Gauss-Chebyshev (second kind) rule for the semicircle law

    sum(w * f(x)) = (1/2pi) integral_{-2}^{2} f(s) sqrt(4 - s^2) ds,
    exact for polynomials of degree < 2*nodes.
    """
    u, w = roots_chebyu(nodes)
    return _frozen(2.0 * u, (2.0 / math.pi) * w)


@lru_cache(maxsize=16)
def arcsine_rule(nodes: int) -> Tuple[np.ndarray, np.ndarray]:
    """
    Gauss-Chebyshev (first kind) rule for the arcsine weight on [-2, 2]

    sum(w * f(x)) = (1/pi) integral_{-2}^{2} f(x) / sqrt(4 - x^2) dx.
    Nodes are returned with their angles theta (x = 2 cos theta) so that
    T_k(x/2) = cos(k theta) can be formed without cancellation.
    """
    theta = (2.0 * np.arange(1, nodes + 1) - 1.0) * math.pi / (2.0 * nodes)
    x = 2.0 * np.cos(theta)
    w = np.full(nodes, 1.0 / nodes)
    return _frozen(x, w)


def arcsine_angles(nodes: int) -> np.ndarray:
    """Angles theta_i matching the nodes of arcsine_rule"""
    return (2.0 * np.arange(1, nodes + 1) - 1.0) * math.pi / (2.0 * nodes)


def box_radius(n: int, base: float = None) -> float:
    """
    Truncation radius for integrals against h_n and rho_n

    h_n is concentrated on [-2, 2] with tails decaying like
    exp(-c n (|x| - 2)^(3/2)); small n need a wider box (n = 1 is a
    standard normal).
    """
    if base is None:
        base = get_settings().box_radius
    return max(base, 2.0 + 8.0 / math.sqrt(n))


def resolved_nodes(n: int, nodes: int, radius: float) -> int:
    """
    Node count that resolves the oscillations of h_n and rho_n on [-R, R]

    Products of Hermite functions near order n oscillate with wavenumber
    up to 2n in x, so the rule needs roughly n*R nodes plus a margin.
    """
    needed = int(n * radius + 6.0 * (2.0 * n * radius) ** (1.0 / 3.0)) + 16
    if needed > nodes:
        logger.debug(f"Raising node count from {nodes} to {needed} for n={n}")
    return max(int(nodes), needed)


def whole_line_rule(n: int, nodes: int = None, radius: float = None) -> Tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre rule on the truncation box of h_n"""
    settings = get_settings()
    nodes = nodes or settings.quadrature_nodes
    radius = radius if radius is not None else box_radius(n)
    return gauss_legendre(resolved_nodes(n, nodes, radius), -radius, radius)
