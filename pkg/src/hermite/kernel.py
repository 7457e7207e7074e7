"""
Christoffel-Darboux kernel and the covariance kernel rho_n

rho_n(x, y) is the kernel for which
Cov{Tr f(X_n), Tr g(X_n)} = integral (Delta f)(Delta g) rho_n dx dy.
Two algebraic forms are available: the squared Christoffel-Darboux
numerator in Hermite functions and the form built from h_n and its
first two derivatives.
"""

import logging
import math
from typing import Callable, Literal

import numpy as np

from config.settings import get_settings

from ..errors import DomainError
from ..numerics.quadrature import arcsine_rule, box_radius, gauss_legendre, resolved_nodes
from .density import _check_size, density_arrays
from .functions import HermiteEvaluator, hermite_table
from .models import KernelField

logger = logging.getLogger(__name__)

KernelPath = Literal["hermite", "density"]
CdForm = Literal["auto", "sum", "quotient"]


def cd_kernel(n: int, x: float, y: float, form: CdForm = "auto") -> float:
    """
    Christoffel-Darboux kernel psi_n(x, y) = sum_{j<n} phi_j(x) phi_j(y)

    Args:
        n: Number of terms
        x, y: Points
        form: "sum", "quotient" or "auto" (quotient unless |x - y| is below
              the diagonal switch, GUE_EXPAND_DIAGONAL_SWITCH)

    Returns:
        psi_n(x, y)
    """
    _check_size(n)
    if form == "auto":
        form = "sum" if abs(x - y) <= get_settings().diagonal_switch else "quotient"

    if form == "sum":
        table = hermite_table(n - 1, np.array([x, y], dtype=float))
        return float(np.dot(table[:, 0], table[:, 1]))

    if form == "quotient":
        if x == y:
            raise DomainError("Quotient form of the Christoffel-Darboux kernel needs x != y")
        lx = HermiteEvaluator(n).ladder(np.array([x, y], dtype=float))
        num = lx.phi_n[0] * lx.phi_nm1[1] - lx.phi_nm1[0] * lx.phi_n[1]
        return float(math.sqrt(n / 2.0) * num / (x - y))

    raise ValueError(f"Unknown Christoffel-Darboux form: {form}")


def rho_n_grid(
    n: int, xs: np.ndarray, ys: np.ndarray, path: KernelPath = "hermite"
) -> np.ndarray:
    """
    rho_n on the tensor grid xs x ys, shape (len(xs), len(ys))

    hermite: (n/4) [phi_n(sx) phi_{n-1}(sy) - phi_{n-1}(sx) phi_n(sy)]^2
    density: (1/4) [h~(x) h~(y) - 4 h'(x) h'(y) - n^-2 h''(x) h''(y)]
    with s = sqrt(n/2).
    """
    _check_size(n)
    xs = np.atleast_1d(np.asarray(xs, dtype=float))
    ys = np.atleast_1d(np.asarray(ys, dtype=float))

    if path == "hermite":
        s = math.sqrt(n / 2.0)
        evaluator = HermiteEvaluator(n)
        lx = evaluator.ladder(s * xs)
        ly = evaluator.ladder(s * ys)
        det = np.outer(lx.phi_n, ly.phi_nm1) - np.outer(lx.phi_nm1, ly.phi_n)
        return 0.25 * n * det * det

    if path == "density":
        dx = density_arrays(n, xs)
        dy = density_arrays(n, ys)
        return 0.25 * (
            np.outer(dx.h_tilde, dy.h_tilde)
            - 4.0 * np.outer(dx.h1, dy.h1)
            - np.outer(dx.h2, dy.h2) / float(n) ** 2
        )

    raise ValueError(f"Unknown kernel path: {path}")


def rho_n(n: int, x: float, y: float, path: KernelPath = "hermite") -> float:
    """Covariance kernel rho_n(x, y) at a single point"""
    return float(rho_n_grid(n, np.array([x]), np.array([y]), path=path)[0, 0])


def rho_limit(x, y):
    """
    Limit kernel (1/4pi^2) (4 - xy) / (sqrt(4 - x^2) sqrt(4 - y^2))

    Returns 0 outside (-2, 2)^2 and +inf where |x| = 2 or |y| = 2 (the
    singularity is integrable). Broadcasts over array arguments.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    x, y = np.broadcast_arrays(x, y)
    inside = (np.abs(x) < 2.0) & (np.abs(y) < 2.0)
    edge = ((np.abs(x) == 2.0) & (np.abs(y) <= 2.0)) | ((np.abs(y) == 2.0) & (np.abs(x) <= 2.0))
    with np.errstate(invalid="ignore", divide="ignore"):
        val = (4.0 - x * y) / (4.0 * math.pi ** 2 * np.sqrt(4.0 - x * x) * np.sqrt(4.0 - y * y))
    out = np.where(inside, val, 0.0)
    out = np.where(edge, np.inf, out)
    return float(out) if out.ndim == 0 else out


def kernel_field(
    n: int,
    nodes: int = None,
    radius: float = None,
    path: KernelPath = "hermite",
) -> KernelField:
    """
    Evaluate rho_n on a tensor Gauss-Legendre grid over [-R, R]^2

    Args:
        n: Matrix size
        nodes: Nodes per axis (defaults to GUE_EXPAND_TENSOR_NODES)
        radius: Box half-width R (defaults to the truncation policy)
        path: Kernel form

    Returns:
        KernelField
    """
    _check_size(n)
    nodes = nodes or get_settings().tensor_nodes
    radius = radius if radius is not None else box_radius(n)
    nodes = resolved_nodes(n, nodes, radius)
    x, w = gauss_legendre(nodes, -radius, radius)
    values = rho_n_grid(n, x, x, path=path)
    values.flags.writeable = False
    logger.debug(f"Kernel field n={n} on [-{radius}, {radius}]^2 with {nodes}^2 nodes")
    return KernelField(n=n, grid_x=x, grid_y=x, weights_x=w, weights_y=w, values=values)


def kernel_integral(
    F: Callable[[np.ndarray, np.ndarray], np.ndarray],
    n: int,
    nodes: int = None,
    radius: float = None,
):
    """integral F(x, y) rho_n(x, y) dx dy with F broadcast over the tensor grid"""
    field = kernel_field(n, nodes=nodes, radius=radius)
    X, Y = np.meshgrid(field.grid_x, field.grid_y, indexing="ij")
    return field.integrate(np.asarray(F(X, Y)))


def kernel_moment(n: int, a: int, b: int, nodes: int = None) -> float:
    """integral x^a y^b rho_n(x, y) dx dy"""
    return float(kernel_integral(lambda X, Y: X ** a * Y ** b, n, nodes=nodes))


def limit_kernel_integral(F: Callable[[np.ndarray, np.ndarray], np.ndarray], nodes: int = None):
    """
    integral F(x, y) rho(x, y) dx dy for the limit kernel

    With the arcsine rule on each axis the singular factors are absorbed
    into the weights, leaving (1/4) sum_ij w_i w_j F(x_i, y_j) (4 - x_i y_j).
    """
    nodes = nodes or get_settings().chebyshev_moment_nodes // 4
    x, w = arcsine_rule(nodes)
    X, Y = np.meshgrid(x, x, indexing="ij")
    vals = np.asarray(F(X, Y)) * (4.0 - X * Y)
    result = 0.25 * (w @ vals @ w)
    return complex(result) if np.iscomplexobj(result) else float(result)


def limit_kernel_moment(a: int, b: int, nodes: int = None) -> float:
    """integral x^a y^b rho(x, y) dx dy"""
    return float(limit_kernel_integral(lambda X, Y: X ** a * Y ** b, nodes=nodes))
