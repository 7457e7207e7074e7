"""
Hermite functions by the normalised three-term recurrence

phi_{k+1}(t) = sqrt(2/(k+1)) t phi_k(t) - sqrt(k/(k+1)) phi_{k-1}(t),
phi_0(t) = pi^(-1/4) exp(-t^2/2).

The recurrence runs on mantissas with a per-point log-scale, so the seed
exp(-t^2/2) never underflows while phi_k itself is still representable.
Values that are genuinely below the double range come back as 0.
"""

import logging
import math
from dataclasses import dataclass
from typing import Iterator, Tuple, Union

import numpy as np

from ..errors import DomainError

logger = logging.getLogger(__name__)

MAX_ORDER = 100_000
PI_QUARTER = math.pi ** -0.25

# mantissas are renormalised once they leave [1/_BIG, _BIG]
_BIG = 1e100
_LOG_BIG = math.log(_BIG)

ArrayLike = Union[float, np.ndarray]


def _as_points(t: ArrayLike) -> np.ndarray:
    pts = np.atleast_1d(np.asarray(t, dtype=float))
    if not np.all(np.isfinite(pts)):
        raise DomainError("Hermite functions need finite arguments")
    return pts


def _check_order(k: int) -> None:
    if k < 0 or int(k) != k:
        raise DomainError(f"Hermite order must be a non-negative integer, got {k}")
    if k > MAX_ORDER:
        raise DomainError(f"Hermite order {k} exceeds supported maximum {MAX_ORDER}")


def _materialise(mantissa: np.ndarray, logscale: np.ndarray) -> np.ndarray:
    with np.errstate(divide="ignore", under="ignore"):
        mag = np.exp(np.log(np.abs(mantissa)) + logscale)
    return np.where(mantissa == 0.0, 0.0, np.sign(mantissa) * mag)


def _sweep(t: np.ndarray, kmax: int) -> Iterator[Tuple[int, np.ndarray, np.ndarray, float]]:
    """
    Yield (k, mantissa_k, logscale, rescale) for k = 0..kmax

    rescale is the factor by which all earlier mantissas were divided at
    this step (1.0 when no renormalisation happened).
    """
    logscale = -0.5 * t * t
    prev = np.zeros_like(t)
    cur = np.full_like(t, PI_QUARTER)
    yield 0, cur, logscale, np.ones_like(t)
    for k in range(kmax):
        nxt = math.sqrt(2.0 / (k + 1)) * t * cur - math.sqrt(k / (k + 1)) * prev
        prev, cur = cur, nxt
        big = np.abs(cur) > _BIG
        factor = np.ones_like(t)
        if np.any(big):
            factor = np.where(big, 1.0 / _BIG, 1.0)
            prev = prev * factor
            cur = cur * factor
            logscale = logscale + np.where(big, _LOG_BIG, 0.0)
        yield k + 1, cur, logscale, factor


def hermite_phi(k: int, t: ArrayLike) -> ArrayLike:
    """
    Evaluate the k-th Hermite function

    Args:
        k: Order, 0 <= k <= 100000
        t: Point or array of points (finite)

    Returns:
        phi_k(t) with the shape of t

    Raises:
        DomainError: If k is out of range or t is not finite
    """
    _check_order(k)
    pts = _as_points(t)
    value = None
    for order, mantissa, logscale, _ in _sweep(pts, k):
        if order == k:
            value = _materialise(mantissa, logscale)
    return float(value[0]) if np.ndim(t) == 0 else value.reshape(np.shape(t))


def hermite_table(n: int, t: ArrayLike) -> np.ndarray:
    """All of phi_0..phi_n at the given points, shape (n+1, len(t))"""
    _check_order(n)
    pts = _as_points(t)
    table = np.empty((n + 1, pts.size))
    for order, mantissa, logscale, _ in _sweep(pts, n):
        table[order] = _materialise(mantissa, logscale)
    return table


@dataclass(frozen=True)
class HermiteLadder:
    """phi_{n-2}..phi_{n+1} and sum_{k<n} phi_k^2 at a set of points"""

    t: np.ndarray
    phi_nm2: np.ndarray
    phi_nm1: np.ndarray
    phi_n: np.ndarray
    phi_np1: np.ndarray
    sum_sq: np.ndarray


class HermiteEvaluator:
    """
    Evaluates the Hermite functions around order n in one sweep

    Immutable after construction; instances can be shared across threads.
    """

    def __init__(self, order_n: int):
        """
        Initialize evaluator

        Args:
            order_n: Matrix size n (the sweep runs to phi_{n+1})
        """
        if order_n < 1 or int(order_n) != order_n:
            raise DomainError(f"Matrix size must be a positive integer, got {order_n}")
        _check_order(order_n + 1)
        self._n = int(order_n)

    @property
    def order_n(self) -> int:
        return self._n

    def ladder(self, t: ArrayLike) -> HermiteLadder:
        """Run the recurrence to n+1 and collect the values around n"""
        n = self._n
        pts = _as_points(t)
        keep = {}
        sum_sq = np.zeros_like(pts)
        for order, mantissa, logscale, factor in _sweep(pts, n + 1):
            # keep the partial sum on the current mantissa scale
            sum_sq = sum_sq * factor * factor
            if order < n:
                sum_sq = sum_sq + mantissa * mantissa
            if order == n - 1:
                sum_logscale = logscale.copy()
                sum_mantissa = sum_sq.copy()
            if order >= n - 2:
                keep[order] = _materialise(mantissa, logscale)

        with np.errstate(divide="ignore", under="ignore"):
            total = np.exp(np.log(sum_mantissa) + 2.0 * sum_logscale)
        total = np.where(sum_mantissa == 0.0, 0.0, total)

        zeros = np.zeros_like(pts)
        return HermiteLadder(
            t=pts,
            phi_nm2=keep.get(n - 2, zeros),
            phi_nm1=keep[n - 1],
            phi_n=keep[n],
            phi_np1=keep[n + 1],
            sum_sq=total,
        )
