"""
GUE(n, sigma^2) sampler

Diagonal entries are real N(0, sigma^2); above the diagonal the real and
imaginary parts are independent N(0, sigma^2 / 2); the matrix is Hermitian.
"""

import logging
from typing import Optional

import numpy as np

from ..errors import DomainError, NumericError

logger = logging.getLogger(__name__)

MAX_SAMPLE_SIZE = 2000

# eigenpair residual bound relative to ||H||
RESIDUAL_TOL = 1e-9


class GueSampler:
    """
    Seeded sampler of GUE(n, sigma^2) matrices and spectra

    The stream of draws depends only on the seed; spectra come from LAPACK
    through numpy.linalg.
    """

    def __init__(self, n: int, sigma2: Optional[float] = None, seed: int = 0):
        """
        Initialize sampler

        Args:
            n: Matrix size, 1 <= n <= 2000
            sigma2: Entry variance (defaults to 1/n)
            seed: Seed of the generator (non-negative 64-bit integer)
        """
        if not 1 <= n <= MAX_SAMPLE_SIZE:
            raise DomainError(f"Sampler size must be in [1, {MAX_SAMPLE_SIZE}], got {n}")
        sigma2 = 1.0 / n if sigma2 is None else float(sigma2)
        if not sigma2 > 0:
            raise DomainError(f"Entry variance must be positive, got {sigma2}")
        if seed < 0:
            raise DomainError(f"Seed must be non-negative, got {seed}")
        self.n = n
        self.sigma2 = sigma2
        self.seed = int(seed)
        self.rng = np.random.default_rng(self.seed)

    def __repr__(self) -> str:
        return f"GueSampler(n={self.n}, sigma2={self.sigma2:g}, seed={self.seed})"

    def sample_matrices(self, count: int, rng: np.random.Generator = None) -> np.ndarray:
        """count independent matrices, shape (count, n, n)"""
        rng = rng or self.rng
        n, s = self.n, np.sqrt(self.sigma2)
        a = rng.standard_normal((count, n, n)) + 1j * rng.standard_normal((count, n, n))
        a *= s
        h = 0.5 * (a + np.conj(np.swapaxes(a, 1, 2)))
        # the diagonal keeps the full variance sigma^2
        idx = np.arange(n)
        h[:, idx, idx] = s * rng.standard_normal((count, n))
        return h

    def sample_matrix(self, rng: np.random.Generator = None) -> np.ndarray:
        return self.sample_matrices(1, rng)[0]

    def sample_spectra(self, count: int, rng: np.random.Generator = None) -> np.ndarray:
        """
        Ascending eigenvalues of count draws, shape (count, n)

        Raises:
            NumericError: If the eigensolver does not converge
        """
        h = self.sample_matrices(count, rng)
        try:
            return np.linalg.eigvalsh(h)
        except np.linalg.LinAlgError as e:
            logger.error(f"Eigensolver failed for {self}: {e}")
            raise NumericError(f"Eigensolver did not converge: {e}", {"n": self.n, "seed": self.seed})

    def sample_spectrum(self, rng: np.random.Generator = None, check: bool = True) -> np.ndarray:
        """
        Ascending eigenvalues of one draw

        Args:
            rng: Generator (defaults to the sampler stream)
            check: Verify ||H v - lambda v|| <= 1e-9 ||H|| for every pair

        Raises:
            NumericError: If the eigensolver fails or a residual is too large
        """
        h = self.sample_matrix(rng)
        try:
            values, vectors = np.linalg.eigh(h)
        except np.linalg.LinAlgError as e:
            logger.error(f"Eigensolver failed for {self}: {e}")
            raise NumericError(f"Eigensolver did not converge: {e}", {"n": self.n, "seed": self.seed})
        if check:
            residual = float(np.max(np.linalg.norm(h @ vectors - vectors * values, axis=0)))
            scale = float(np.linalg.norm(h, 2))
            if residual > RESIDUAL_TOL * max(scale, 1e-300):
                logger.error(f"Eigenpair residual {residual:.2e} exceeds tolerance")
                raise NumericError(
                    "Eigenpair residual above tolerance",
                    {"residual": residual, "norm": scale, "n": self.n},
                )
        return values
