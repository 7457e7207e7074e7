"""Monte Carlo GUE sampling and empirical linear statistics"""

from .sampler import GueSampler
from .statistics import block_layout, empirical_statistics
from .models import EmpiricalStatistics

__all__ = [
    "GueSampler",
    "block_layout",
    "empirical_statistics",
    "EmpiricalStatistics",
]
