"""
Divided difference transform

Delta f(x, y) = (f(x) - f(y)) / (x - y), extended by f'(x) on the diagonal.
"""

import numpy as np

from ..expansion.smooth_input import SmoothInput
from ..numerics.quadrature import gauss_legendre

# below this |x - y| the value is f' at the midpoint
DIAGONAL_TOL = 1e-7
# below this |x - y| the quotient loses more than eps |f| / |x - y| and the
# integral form integral_0^1 f'(y + s(x - y)) ds is used instead
INTEGRAL_TOL = 1e-3
INTEGRAL_NODES = 8


def _near_diagonal(f: SmoothInput, x: np.ndarray, y: np.ndarray, quotient: np.ndarray) -> np.ndarray:
    """Replace quotient entries with |x - y| <= INTEGRAL_TOL by the integral or derivative form"""
    near = np.abs(x - y) <= INTEGRAL_TOL
    if not np.any(near):
        return quotient
    f.require_order(1)
    xs, ys = x[near], y[near]
    s, w = gauss_legendre(INTEGRAL_NODES, 0.0, 1.0)
    vals = np.asarray(f.derivative(1, ys[:, None] + np.outer(xs - ys, s))) @ w
    diagonal = np.abs(xs - ys) <= DIAGONAL_TOL
    if np.any(diagonal):
        vals = np.where(diagonal, f.derivative(1, 0.5 * (xs + ys)), vals)
    out = quotient.astype(np.result_type(quotient, vals))
    out[near] = vals
    return out


def divided_difference(f: SmoothInput, x, y):
    """
    Delta f at (x, y), broadcasting over array arguments

    Three regimes in |x - y|: the quotient above INTEGRAL_TOL, an
    INTEGRAL_NODES-point Gauss-Legendre rule for the integral form down to
    DIAGONAL_TOL, and f' at the midpoint below it.
    """
    x, y = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(y, dtype=float))
    shape = x.shape
    x, y = x.ravel(), y.ravel()
    d = x - y
    with np.errstate(invalid="ignore", divide="ignore"):
        quotient = (np.asarray(f.value(x)) - np.asarray(f.value(y))) / np.where(d == 0.0, 1.0, d)
    out = _near_diagonal(f, x, y, quotient).reshape(shape)
    return out[()] if out.ndim == 0 else out


def divided_difference_grid(f: SmoothInput, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    """Delta f on the tensor grid xs x ys (values of f computed once per axis)"""
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    fx = np.asarray(f.value(xs))
    fy = np.asarray(f.value(ys))
    d = xs[:, None] - ys[None, :]
    with np.errstate(invalid="ignore", divide="ignore"):
        out = (fx[:, None] - fy[None, :]) / np.where(d == 0.0, 1.0, d)
    X, Y = np.broadcast_arrays(xs[:, None], ys[None, :])
    return _near_diagonal(f, X.ravel(), Y.ravel(), out.ravel()).reshape(out.shape)
