"""Across-replication statistics of one simulated scenario."""

import math
from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from ..entities.sim_metrics import SimMetrics
from ..exceptions import UndefinedQuantityError


@dataclass(frozen=True)
class ReplicationSummary:
    """Metrics of independent replications, with the seed each one ran under."""

    replications: List[SimMetrics]
    seeds: List[int]

    @property
    def count(self) -> int:
        return len(self.replications)

    @property
    def throughputs(self) -> np.ndarray:
        return np.array([m.throughput_estimate for m in self.replications])

    @property
    def mean_throughput(self) -> float:
        return float(self.throughputs.mean())

    @property
    def stderr(self) -> Optional[float]:
        """Standard error of the mean throughput; None for a single replication."""
        if self.count < 2:
            return None
        return float(self.throughputs.std(ddof=1) / math.sqrt(self.count))

    @property
    def mean_success_ratio(self) -> float:
        return float(np.mean([m.perceived_success_ratio for m in self.replications]))

    @property
    def mean_collision_length(self) -> Optional[float]:
        """Pooled mean collision span, None if no replication saw a collision."""
        pooled = SimMetrics()
        for metrics in self.replications:
            pooled.collision_abort_lengths.update(metrics.collision_abort_lengths)
        try:
            return pooled.mean_collision_length()
        except UndefinedQuantityError:
            return None
