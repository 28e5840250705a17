"""Simulation engine interface."""

from abc import ABC, abstractmethod
from typing import Callable, List, Optional

from ...domain.entities.sim_metrics import SimMetrics
from ...domain.value_objects.replication_summary import ReplicationSummary
from ...domain.value_objects.sim_config import SimConfig


class SimulationEngine(ABC):
    """
    Abstract interface for running Monte-Carlo replications.

    Implementations must be deterministic per (config, seed) and return
    results in input order whatever their degree of parallelism.
    """

    @abstractmethod
    def run_all(
        self,
        configs: List[SimConfig],
        on_complete: Optional[Callable[[int, SimMetrics], None]] = None,
    ) -> List[SimMetrics]:
        """Run each config once."""
        pass

    @abstractmethod
    def replicate(
        self,
        config: SimConfig,
        replications: int,
        on_complete: Optional[Callable[[int, SimMetrics], None]] = None,
    ) -> ReplicationSummary:
        """
        Run independent replications of one scenario.

        Args:
            config: Scenario and first seed
            replications: Number of runs, seeded config.seed, config.seed + 1, ...
            on_complete: Progress callback (position, metrics)

        Returns:
            ReplicationSummary over all runs
        """
        pass

    def replicate_many(
        self,
        configs: List[SimConfig],
        replications: int,
        on_done: Optional[Callable[[int], None]] = None,
    ) -> List[ReplicationSummary]:
        """
        Replicate several scenarios as one batch of independent runs.

        Every (scenario, replication) pair goes through a single `run_all`
        call, so parallel engines can spread the whole batch at once.

        Args:
            configs: Scenarios with their first seed
            replications: Runs per scenario
            on_done: Called with a scenario's index once all its runs are in

        Returns:
            One ReplicationSummary per scenario, in the order of `configs`
        """
        batch = [replica for config in configs for replica in config.replicas(replications)]
        outstanding = [replications] * len(configs)

        def completed(position: int, metrics: SimMetrics) -> None:
            owner = position // replications
            outstanding[owner] -= 1
            if outstanding[owner] == 0 and on_done:
                on_done(owner)

        metrics = self.run_all(batch, completed)
        summaries = []
        for index in range(len(configs)):
            runs = slice(index * replications, (index + 1) * replications)
            summaries.append(ReplicationSummary(
                replications=metrics[runs],
                seeds=[replica.seed for replica in batch[runs]],
            ))
        return summaries
