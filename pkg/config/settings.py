"""
Application settings and environment configuration
"""
import os
from typing import Optional

from dotenv import load_dotenv


class Settings:
    """Numerical and runtime settings"""

    def __init__(self):
        load_dotenv()

        # Whole-line quadrature against h_n
        self.quadrature_nodes = int(os.getenv("GUE_EXPAND_QUADRATURE_NODES", "512"))
        self.box_radius = float(os.getenv("GUE_EXPAND_BOX_RADIUS", "4.0"))
        self.tensor_nodes = int(os.getenv("GUE_EXPAND_TENSOR_NODES", "256"))

        # Spectral representation of S and T
        self.chebyshev_degree = int(os.getenv("GUE_EXPAND_CHEBYSHEV_DEGREE", "256"))
        self.inner_nodes = int(os.getenv("GUE_EXPAND_INNER_NODES", "128"))
        self.endpoint_band = float(os.getenv("GUE_EXPAND_ENDPOINT_BAND", "0.05"))
        self.semicircle_nodes = int(os.getenv("GUE_EXPAND_SEMICIRCLE_NODES", "512"))
        self.chebyshev_moment_nodes = int(
            os.getenv("GUE_EXPAND_CHEBYSHEV_MOMENT_NODES", "2048")
        )

        # Cauchy transforms
        self.diagonal_switch = float(os.getenv("GUE_EXPAND_DIAGONAL_SWITCH", "1e-6"))
        self.min_imag = float(os.getenv("GUE_EXPAND_MIN_IMAG", "0.05"))
        self.real_axis_margin = float(os.getenv("GUE_EXPAND_REAL_AXIS_MARGIN", "2.5"))

        # Remainder diagnostics
        self.noise_floor = float(os.getenv("GUE_EXPAND_NOISE_FLOOR", "5e-14"))
        self.default_ladder = [
            int(v) for v in os.getenv("GUE_EXPAND_LADDER", "8,16,32,64").split(",")
        ]

        # Monte Carlo
        self.threads = int(os.getenv("GUE_EXPAND_THREADS", str(os.cpu_count() or 1)))
        self.mc_block = int(os.getenv("GUE_EXPAND_MC_BLOCK", "1000"))

        # Output
        self.schema_version = os.getenv("GUE_EXPAND_SCHEMA_VERSION", "1.0")

        # Logging
        self.log_level = os.getenv("GUE_EXPAND_LOG_LEVEL", "INFO")

    def as_dict(self) -> dict:
        """Effective settings, for run headers"""
        return dict(vars(self))


_settings: Optional[Settings] = None


def get_settings() -> Settings:
    """Get application settings (singleton)"""
    global _settings
    if _settings is None:
        _settings = Settings()
    return _settings


def reset_settings() -> None:
    """Drop the cached settings so the next call re-reads the environment"""
    global _settings
    _settings = None
