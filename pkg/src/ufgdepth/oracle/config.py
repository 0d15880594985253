"""
Oracle settings.
"""

from dataclasses import dataclass

from ..errors import ConfigurationError

MAXIMAL_ONLY = "maximal-only"
ALL_FAMILIES = "all-families"
MODES = (MAXIMAL_ONLY, ALL_FAMILIES)


@dataclass(frozen=True)
class OracleConfig:
    """Seed and sample size for Monte-Carlo checks, and the subset-family mode of premise checks."""

    seed: int = 0
    mc_samples: int = 100_000
    mode: str = MAXIMAL_ONLY

    def __post_init__(self):
        if self.mode not in MODES:
            raise ConfigurationError(f"Unknown oracle mode {self.mode!r}", {"allowed": list(MODES)})
        if self.mc_samples < 1:
            raise ConfigurationError("mc_samples must be positive", {"mc_samples": self.mc_samples})
        if not 0 <= self.seed < 1 << 64:
            raise ConfigurationError("seed must be a 64-bit unsigned integer", {"seed": self.seed})
