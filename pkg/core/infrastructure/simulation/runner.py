"""Independent replications, optionally spread over worker processes."""

import logging
from concurrent.futures import ProcessPoolExecutor, as_completed
from typing import Any, Callable, Dict, List, Optional

from ...application.interfaces.simulation_engine import SimulationEngine
from ...domain.entities.sim_metrics import SimMetrics
from ...domain.value_objects.replication_summary import ReplicationSummary
from ...domain.value_objects.sim_config import SimConfig
from .slot_simulator import run

logger = logging.getLogger(__name__)


def _replication_worker(payload: Dict[str, Any]) -> Dict[str, Any]:
    """Run one replication in a worker process; module level so it pickles."""
    return run(SimConfig.from_dict(payload)).to_dict()


class ReplicationRunner(SimulationEngine):
    """
    Runs a batch of simulation configs and returns their metrics in input order.

    With max_workers == 1 (or a single config) everything runs in-process.
    """

    def __init__(self, max_workers: Optional[int] = None):
        self.max_workers = max_workers

    def run_all(
        self,
        configs: List[SimConfig],
        on_complete: Optional[Callable[[int, SimMetrics], None]] = None,
    ) -> List[SimMetrics]:
        """
        Run every config once.

        Args:
            configs: Replications to run
            on_complete: Called with (position, metrics) as each replication ends

        Returns:
            Metrics, in the order of `configs`
        """
        if not configs:
            return []

        results: List[Optional[SimMetrics]] = [None] * len(configs)

        if self.max_workers == 1 or len(configs) == 1:
            for position, config in enumerate(configs):
                results[position] = run(config)
                if on_complete:
                    on_complete(position, results[position])
            return results

        logger.info(f"🔄 Running {len(configs)} replications on up to {self.max_workers or 'all'} workers")
        with ProcessPoolExecutor(max_workers=self.max_workers) as executor:
            futures = {
                executor.submit(_replication_worker, config.to_dict()): position
                for position, config in enumerate(configs)
            }
            for future in as_completed(futures):
                position = futures[future]
                results[position] = SimMetrics.from_dict(future.result())
                if on_complete:
                    on_complete(position, results[position])

        return results

    def replicate(
        self,
        config: SimConfig,
        replications: int,
        on_complete: Optional[Callable[[int, SimMetrics], None]] = None,
    ) -> ReplicationSummary:
        """Run `replications` copies of config with seeds seed, seed + 1, ..."""
        configs = config.replicas(replications)
        metrics = self.run_all(configs, on_complete)
        return ReplicationSummary(replications=metrics, seeds=[c.seed for c in configs])
