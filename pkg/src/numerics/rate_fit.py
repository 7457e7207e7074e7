"""
Log-log rate estimation for asymptotic remainders

Fits log|remainder| = slope * log(n) + intercept over a ladder of matrix
sizes. A remainder of order n^(-2k-2) shows up as a slope close to -2k-2.
"""

import logging
from typing import List, Optional, Sequence

import numpy as np
from pydantic import BaseModel, Field

from config.settings import get_settings

logger = logging.getLogger(__name__)


class RateFit(BaseModel):
    """Result of a log-log rate fit"""

    slope: Optional[float] = Field(None, description="Fitted exponent of n")
    intercept: Optional[float] = None
    r2: Optional[float] = None
    points_used: int = 0
    excluded: List[int] = Field(
        default_factory=list,
        description="Ladder sizes dropped because their remainder is below the noise floor",
    )


class RateEstimator:
    """
    Fits the decay exponent of remainders over an n-ladder

    Points whose remainder falls below the noise floor carry no information
    about the rate and are excluded; the fit needs at least two survivors.
    """

    def __init__(self, noise_floor: float = None):
        """
        Initialize rate estimator

        Args:
            noise_floor: Remainders at or below this magnitude are ignored
                        (defaults to GUE_EXPAND_NOISE_FLOOR)
        """
        self.noise_floor = (
            noise_floor if noise_floor is not None else get_settings().noise_floor
        )
        self._check_dependencies()

    def _check_dependencies(self):
        """Check if required libraries are available"""
        try:
            from sklearn.linear_model import LinearRegression
            self.sklearn_available = True
        except ImportError:
            logger.warning(
                "scikit-learn not installed. "
                "Install with: pip install scikit-learn"
            )
            self.sklearn_available = False

    def fit(self, ladder: Sequence[int], remainders: Sequence[complex]) -> RateFit:
        """
        Fit the log-log slope of |remainder| against n

        Args:
            ladder: Matrix sizes, e.g. [8, 16, 32, 64]
            remainders: Remainder at each ladder size (real or complex)

        Returns:
            RateFit: slope is None when fewer than two points survive
        """
        if len(ladder) != len(remainders):
            raise ValueError("ladder and remainders must have equal length")

        ns, mags, excluded = [], [], []
        for n, r in zip(ladder, remainders):
            mag = abs(r)
            if not np.isfinite(mag) or mag <= self.noise_floor:
                excluded.append(int(n))
                continue
            ns.append(float(n))
            mags.append(mag)

        if excluded:
            logger.warning(f"Remainders below noise floor at n={excluded}")

        if len(ns) < 2:
            return RateFit(points_used=len(ns), excluded=excluded)

        X = np.log(np.array(ns)).reshape(-1, 1)
        y = np.log(np.array(mags))
        slope, intercept, r2 = self._fit_linear_model(X, y)

        logger.info(f"Rate fit over n={[int(n) for n in ns]}: slope={slope:.3f}")

        return RateFit(
            slope=slope,
            intercept=intercept,
            r2=r2,
            points_used=len(ns),
            excluded=excluded,
        )

    def _fit_linear_model(self, X: np.ndarray, y: np.ndarray):
        """
        Fit linear regression model

        Args:
            X: log n, shape (n_samples, 1)
            y: log |remainder|, shape (n_samples,)

        Returns:
            Tuple of (slope, intercept, r2)
        """
        if self.sklearn_available:
            from sklearn.linear_model import LinearRegression

            model = LinearRegression()
            model.fit(X, y)

            slope = float(model.coef_[0])
            intercept = float(model.intercept_)
            r2 = float(model.score(X, y)) if len(y) > 2 else 1.0

        else:
            # Fallback: manual least squares
            X_flat = X.flatten()
            slope = float(np.cov(X_flat, y, bias=True)[0, 1] / np.var(X_flat))
            intercept = float(np.mean(y) - slope * np.mean(X_flat))
            resid = y - (slope * X_flat + intercept)
            ss_tot = float(np.sum((y - np.mean(y)) ** 2))
            r2 = 1.0 - float(np.sum(resid ** 2)) / ss_tot if ss_tot > 0 else 1.0

        return slope, intercept, r2
