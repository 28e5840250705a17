"""Value objects produced by the analytical model."""

from dataclasses import dataclass
from typing import Any, Dict, List

import numpy as np


@dataclass(frozen=True)
class FixedPointSolution:
    """
    Solved (p, p_s) pair with solver diagnostics.

    For the CSMA/CA baseline, p_attempt is Bianchi's tau and p_success
    carries 1 - p_c.
    """

    p_attempt: float
    p_success: float
    residual: float
    iterations: int

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary representation."""
        return {
            "p_attempt": self.p_attempt,
            "p_success": self.p_success,
            "residual": self.residual,
            "iterations": self.iterations,
        }


@dataclass(frozen=True)
class ThroughputReport:
    """Per-slot event probabilities, cycle lengths and normalized throughput C."""

    p_empty: float
    p_single_success: float
    p_collision: float
    len_success: float
    len_collision: float
    throughput: float

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary representation."""
        return {
            "p_empty": self.p_empty,
            "p_single_success": self.p_single_success,
            "p_collision": self.p_collision,
            "len_success": self.len_success,
            "len_collision": self.len_collision,
            "throughput": self.throughput,
        }


@dataclass(frozen=True)
class StationaryDistribution:
    """
    Stationary probabilities of the backoff chain.

    stages[W][w] is the probability of state (w, W), w in [0, CW_W).
    """

    stages: List[np.ndarray]

    def prob(self, w: int, stage: int) -> float:
        return float(self.stages[stage][w])

    def total(self) -> float:
        return float(sum(stage.sum() for stage in self.stages))

    def transmission_probability(self) -> float:
        """Probability of sitting at a zero counter, i.e. the attempt probability."""
        return float(sum(stage[0] for stage in self.stages))

    def stage_occupancy(self) -> List[float]:
        """Marginal probability of each backoff stage."""
        return [float(stage.sum()) for stage in self.stages]

    @property
    def n_states(self) -> int:
        return sum(len(stage) for stage in self.stages)
