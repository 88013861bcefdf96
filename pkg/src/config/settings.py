"""
Configuration management for spexlab
Numerical tolerances, search caps and run defaults

Licensed under MIT License
"""
import os
from dataclasses import dataclass
from typing import List

from dotenv import load_dotenv

load_dotenv()


def _env_bool(name: str, default: str) -> bool:
    return os.getenv(name, default).strip().lower() == "true"


@dataclass
class Config:
    """Application configuration"""

    # Logging
    LOG_LEVEL: str = "INFO"
    LOG_JSON: bool = False

    # Spectral solver
    SPECTRAL_TOL: float = 1e-10  # residual target, relative to max(1, rho)
    SPECTRAL_MAX_ITER: int = 100000  # power iterations before the dense fallback
    SPECTRAL_CACHE_SIZE: int = 4096
    PRECISE_DPS: int = 50  # first working precision of the mpmath tie-break
    PRECISE_MAX_DPS: int = 200

    # Walk series / join-series solver
    SERIES_TOL: float = 1e-12
    SERIES_MAX_TERMS: int = 20000
    SERIES_WINDOW: int = 8  # ratio-test window in the heuristic regime
    SERIES_BRACKET_EPS: float = 1e-3
    SERIES_MAX_BISECTIONS: int = 200

    # Exhaustive search caps
    ORACLE_MAX_N: int = 8
    ORACLE_MAX_LENGTH: int = 8
    CYCLE_SEARCH_MAX_N: int = 16
    BRUTE_FORCE_MAX_N: int = 8
    RESTRICTED_MAX_N: int = 40
    LEADERBOARD_SIZE: int = 20

    # Runs
    JOBS: int = 1
    SEED: int = 20240607
    METRICS_ENABLED: bool = True

    @classmethod
    def from_env(cls) -> "Config":
        """Load configuration from environment variables"""
        return cls(
            # Logging
            LOG_LEVEL=os.getenv("SPEXLAB_LOG_LEVEL", "INFO"),
            LOG_JSON=_env_bool("SPEXLAB_LOG_JSON", "false"),

            # Spectral
            SPECTRAL_TOL=float(os.getenv("SPEXLAB_SPECTRAL_TOL", "1e-10")),
            SPECTRAL_MAX_ITER=int(os.getenv("SPEXLAB_SPECTRAL_MAX_ITER", "100000")),
            SPECTRAL_CACHE_SIZE=int(os.getenv("SPEXLAB_SPECTRAL_CACHE_SIZE", "4096")),
            PRECISE_DPS=int(os.getenv("SPEXLAB_PRECISE_DPS", "50")),
            PRECISE_MAX_DPS=int(os.getenv("SPEXLAB_PRECISE_MAX_DPS", "200")),

            # Series
            SERIES_TOL=float(os.getenv("SPEXLAB_SERIES_TOL", "1e-12")),
            SERIES_MAX_TERMS=int(os.getenv("SPEXLAB_SERIES_MAX_TERMS", "20000")),
            SERIES_WINDOW=int(os.getenv("SPEXLAB_SERIES_WINDOW", "8")),
            SERIES_BRACKET_EPS=float(os.getenv("SPEXLAB_SERIES_BRACKET_EPS", "1e-3")),
            SERIES_MAX_BISECTIONS=int(os.getenv("SPEXLAB_SERIES_MAX_BISECTIONS", "200")),

            # Caps
            ORACLE_MAX_N=int(os.getenv("SPEXLAB_ORACLE_MAX_N", "8")),
            ORACLE_MAX_LENGTH=int(os.getenv("SPEXLAB_ORACLE_MAX_LENGTH", "8")),
            CYCLE_SEARCH_MAX_N=int(os.getenv("SPEXLAB_CYCLE_SEARCH_MAX_N", "16")),
            BRUTE_FORCE_MAX_N=int(os.getenv("SPEXLAB_BRUTE_FORCE_MAX_N", "8")),
            RESTRICTED_MAX_N=int(os.getenv("SPEXLAB_RESTRICTED_MAX_N", "40")),
            LEADERBOARD_SIZE=int(os.getenv("SPEXLAB_LEADERBOARD_SIZE", "20")),

            # Runs
            JOBS=int(os.getenv("SPEXLAB_JOBS", "1")),
            SEED=int(os.getenv("SPEXLAB_SEED", "20240607")),
            METRICS_ENABLED=_env_bool("SPEXLAB_METRICS_ENABLED", "true"),
        )

    def validate(self) -> List[str]:
        """Validate configuration and return list of errors"""
        errors = []

        if not 0 < self.SPECTRAL_TOL < 1:
            errors.append("SPEXLAB_SPECTRAL_TOL must lie in (0, 1)")

        if not 20 <= self.PRECISE_DPS <= self.PRECISE_MAX_DPS:
            errors.append("SPEXLAB_PRECISE_DPS must be at least 20 and at most SPEXLAB_PRECISE_MAX_DPS")

        if not 0 < self.SERIES_TOL < 1:
            errors.append("SPEXLAB_SERIES_TOL must lie in (0, 1)")

        if self.SERIES_WINDOW < 2:
            errors.append("SPEXLAB_SERIES_WINDOW must be at least 2")

        if self.SERIES_BRACKET_EPS <= 0:
            errors.append("SPEXLAB_SERIES_BRACKET_EPS must be positive")

        if self.JOBS < 0:
            errors.append("SPEXLAB_JOBS must be non-negative (0 = one per CPU)")

        if self.BRUTE_FORCE_MAX_N > 8:
            errors.append("SPEXLAB_BRUTE_FORCE_MAX_N above 8 is not enumerable")

        return errors

    def is_valid(self) -> bool:
        """Check if configuration is valid"""
        return len(self.validate()) == 0


# Global config instance
config = Config.from_env()
