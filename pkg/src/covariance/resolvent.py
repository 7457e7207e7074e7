"""
Cauchy transform G_n of the GUE(n, 1/n) spectral density

G_n^(k)(lambda) = integral (-1)^k k! / (lambda - t)^(k+1) h_n(t) dt,
computed by Gauss-Legendre quadrature on the truncation box.
"""

import logging
import math

import numpy as np

from config.settings import get_settings

from ..errors import ConditioningError
from ..hermite.density import density_on_rule
from ..numerics.quadrature import box_radius
from .models import ResolventSet

logger = logging.getLogger(__name__)

# nodes per unit of (box radius / distance to the box)
POLE_RESOLUTION = 20

# largest mass of h_n allowed outside a box cut short by a real lambda
MASS_TOLERANCE = 1e-10


def check_conditioning(lam: complex) -> complex:
    """
    Reject lambda too close to the real axis

    Raises:
        ConditioningError: If |Im lambda| < GUE_EXPAND_MIN_IMAG and
                           |Re lambda| <= GUE_EXPAND_REAL_AXIS_MARGIN
    """
    settings = get_settings()
    lam = complex(lam)
    if abs(lam.imag) < settings.min_imag and abs(lam.real) <= settings.real_axis_margin:
        logger.error(f"Spectral parameter {lam} too close to the spectrum")
        raise ConditioningError(
            f"lambda={lam} is within {settings.min_imag} of the real axis "
            f"and |Re lambda| <= {settings.real_axis_margin}",
            {"lam": str(lam), "min_imag": settings.min_imag},
        )
    return lam


def _rule_for(n: int, lam: complex, nodes: int = None):
    """Box radius and node count adapted to the distance from lambda to the box"""
    settings = get_settings()
    radius = box_radius(n)
    if abs(lam.imag) < settings.min_imag:
        # real-axis continuation: integrate over the part of the box left of the pole
        radius = min(radius, (abs(lam.real) + 2.0) / 2.0)
    excess = max(abs(lam.real) - radius, 0.0)
    distance = math.hypot(excess, lam.imag)
    base = nodes or settings.quadrature_nodes
    return radius, max(base, int(POLE_RESOLUTION * radius / distance))


def resolvent_set(n: int, lam: complex, nodes: int = None) -> ResolventSet:
    """
    G_n(lambda), its first three derivatives and G~_n(lambda)

    Args:
        n: Matrix size
        lam: Spectral parameter off the real axis, or real with |lambda| > margin
        nodes: Minimum quadrature nodes

    Returns:
        ResolventSet

    Raises:
        ConditioningError: If lambda is too close to the spectrum, or if lambda
                           is real and h_n has more than MASS_TOLERANCE of its
                           mass beyond the shortened box
    """
    lam = check_conditioning(lam)
    radius, count = _rule_for(n, lam, nodes)
    x, w, dens = density_on_rule(n, nodes=count, radius=radius)

    r = 1.0 / (lam - x)
    wh = w * dens.h
    if radius < box_radius(n):
        neglected = abs(1.0 - float(np.sum(wh)))
        if neglected > MASS_TOLERANCE:
            logger.error(f"h_{n} has mass {neglected:.2e} outside [-{radius:g}, {radius:g}]")
            raise ConditioningError(
                f"lambda={lam} is real and h_{n} has mass {neglected:.2e} beyond the pole-free box; "
                f"increase n or move lambda off the real axis",
                {"lam": str(lam), "n": n, "radius": radius, "neglected_mass": neglected},
            )

    G = complex(np.sum(wh * r))
    G1 = complex(-np.sum(wh * r ** 2))
    G2 = complex(2.0 * np.sum(wh * r ** 3))
    G3 = complex(-6.0 * np.sum(wh * r ** 4))

    logger.debug(f"G_{n}({lam}) = {G:.6g} with {len(x)} nodes on [-{radius:g}, {radius:g}]")
    return ResolventSet(
        n=n,
        lam=lam,
        G=G,
        G1=G1,
        G2=G2,
        G3=G3,
        G_tilde=G - lam * G1,
        nodes=len(x),
        radius=radius,
    )
