"""Simulation configuration value object."""

from dataclasses import dataclass, replace
from typing import Any, Dict, List

from ..exceptions import ConfigurationError, InvalidArgumentError
from .protocol_params import ProtocolParams

SEED_MASK = 2 ** 64 - 1


@dataclass(frozen=True)
class SimConfig:
    """Everything a single simulation run needs: scenario, seed and run lengths."""

    params: ProtocolParams
    seed: int = 0
    warmup_attempts: int = 10_000
    measure_attempts: int = 100_000

    def __post_init__(self) -> None:
        """Validate configuration after initialization."""
        if not isinstance(self.params, ProtocolParams):
            raise ConfigurationError("params must be a ProtocolParams instance")
        if not 0 <= self.seed <= SEED_MASK:
            raise ConfigurationError(f"seed must be an unsigned 64-bit integer, got {self.seed}")
        if self.warmup_attempts < 0:
            raise ConfigurationError("warmup_attempts must be non-negative")
        if self.measure_attempts < 1:
            raise ConfigurationError("measure_attempts must be at least 1")

    def with_seed(self, seed: int) -> "SimConfig":
        """Create a new config with a different seed."""
        return replace(self, seed=seed & SEED_MASK)

    def replicas(self, count: int) -> List["SimConfig"]:
        """The configs of `count` independent replications, seeded seed, seed + 1, ..."""
        return [self.with_seed(self.seed + r) for r in range(count)]

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary representation."""
        return {
            "params": self.params.to_dict(),
            "seed": self.seed,
            "warmup_attempts": self.warmup_attempts,
            "measure_attempts": self.measure_attempts,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SimConfig":
        """Create from dictionary representation."""
        try:
            params = ProtocolParams.from_dict(data.get("params", {}))
        except InvalidArgumentError as e:
            raise ConfigurationError(str(e)) from e
        return cls(
            params=params,
            seed=int(data.get("seed", 0)),
            warmup_attempts=int(data.get("warmup_attempts", 10_000)),
            measure_attempts=int(data.get("measure_attempts", 100_000)),
        )
