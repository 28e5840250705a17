"""Run sweep use case."""

import logging
import time
from typing import Callable, Dict, List, Optional

from ...domain.exceptions import ModelDomainError, SolverFailureError
from ...domain.repositories.result_repository import ResultRepository
from ...domain.value_objects.replication_summary import ReplicationSummary
from ...domain.value_objects.result_row import AGGREGATE_REPLICATION, Engine, ResultRow
from ...domain.value_objects.sim_config import SimConfig
from ...infrastructure.logging.run_logger import RunLogger
from ..dto.experiment_spec import ExperimentSpec, SweepPoint
from ..dto.run_results import SweepResult
from ..interfaces.simulation_engine import SimulationEngine
from .analyze_scenario import AnalyzeScenarioUseCase

logger = logging.getLogger(__name__)


class RunSweepUseCase:
    """
    Use case for sweeping one scenario parameter.

    Produces one row per (sweep value, engine, mode, series), plus one row per
    replication when asked, and saves them through the result repository.
    A point whose analysis fails yields a row carrying the error instead of
    aborting the sweep.
    """

    def __init__(
        self,
        result_repository: ResultRepository,
        simulation_engine: SimulationEngine,
        analyzer: Optional[AnalyzeScenarioUseCase] = None,
        run_logger: Optional[RunLogger] = None,
    ):
        self.result_repository = result_repository
        self.simulation_engine = simulation_engine
        self.analyzer = analyzer or AnalyzeScenarioUseCase()
        self.run_logger = run_logger or RunLogger()

    def execute(
        self,
        spec: ExperimentSpec,
        comment: Optional[str] = None,
        per_replication: bool = False,
        on_point: Optional[Callable[[SweepPoint], None]] = None,
    ) -> SweepResult:
        """
        Execute the sweep and write its rows.

        Args:
            spec: What to sweep
            comment: Optional first line of the output file
            per_replication: Also emit one row per simulation replication
            on_point: Progress callback, called as each point finishes

        Returns:
            SweepResult with all rows and the output path

        Raises:
            OSError: If the output cannot be written
        """
        points = spec.points()
        run_id = self.run_logger.start_run("sweep", spec.name, len(points))
        rows: List[ResultRow] = []
        simulate = Engine.SIMULATION in spec.engines

        for point in points:
            if Engine.ANALYTIC in spec.engines:
                rows.append(self._analytic_row(run_id, point))
            if on_point and not simulate:
                on_point(point)

        if simulate:
            rows.extend(self._simulated_rows(run_id, spec, points, per_replication, on_point))

        path = self.result_repository.save(rows, spec.output_path, comment)

        self.run_logger.log_output(run_id, str(path), len(rows))
        self.run_logger.end_run(run_id, len(rows))
        logger.info(f"✅ Sweep {spec.name}: {len(rows)} rows written to {path}")
        return SweepResult(name=spec.name, rows=rows, output_path=path)

    def _analytic_row(self, run_id: str, point: SweepPoint) -> ResultRow:
        try:
            result = self.analyzer.execute(point.params)
        except (SolverFailureError, ModelDomainError) as e:
            self.run_logger.log_solver_failure(run_id, point.sweep_name, point.sweep_value, point.mode.value, e)
            return ResultRow(
                sweep_name=point.sweep_name,
                sweep_value=point.sweep_value,
                mode=point.mode,
                engine=Engine.ANALYTIC,
                p_attempt=getattr(e, "last_iterate", None),
                iterations=getattr(e, "iterations", None),
                residual=getattr(e, "residual", None),
                error=str(e),
            )

        solution, report = result.solution, result.report
        self.run_logger.log_solved(
            run_id, point.sweep_name, point.sweep_value, point.mode.value,
            report.throughput, solution.iterations, solution.residual,
        )
        return ResultRow(
            sweep_name=point.sweep_name,
            sweep_value=point.sweep_value,
            mode=point.mode,
            engine=Engine.ANALYTIC,
            throughput=report.throughput,
            p_empty=report.p_empty,
            p_success=report.p_single_success,
            p_collision=report.p_collision,
            len_success=report.len_success,
            len_collision=report.len_collision,
            p_attempt=solution.p_attempt,
            p_s=solution.p_success,
            iterations=solution.iterations,
            residual=solution.residual,
        )

    def _simulated_rows(
        self,
        run_id: str,
        spec: ExperimentSpec,
        points: List[SweepPoint],
        per_replication: bool,
        on_point: Optional[Callable[[SweepPoint], None]],
    ) -> List[ResultRow]:
        """Simulate every point's replications as one batch, then build rows point by point."""
        start = time.time()
        finished_ms: Dict[int, float] = {}

        def point_done(index: int) -> None:
            finished_ms[index] = (time.time() - start) * 1000
            if on_point:
                on_point(points[index])

        summaries = self.simulation_engine.replicate_many(
            [simulation_config(spec, point) for point in points], spec.replications, point_done
        )

        rows: List[ResultRow] = []
        for index, (point, summary) in enumerate(zip(points, summaries)):
            self.run_logger.log_simulated(
                run_id, point.sweep_name, point.sweep_value, point.mode.value,
                summary.mean_throughput, summary.stderr, summary.count, finished_ms.get(index, 0.0),
            )
            rows.append(ResultRow(
                sweep_name=point.sweep_name,
                sweep_value=point.sweep_value,
                mode=point.mode,
                engine=Engine.SIMULATION,
                replication=AGGREGATE_REPLICATION,
                throughput=summary.mean_throughput,
                stderr=summary.stderr,
                len_collision=summary.mean_collision_length,
                p_s=summary.mean_success_ratio,
                seed=spec.seed_base,
            ))
            if per_replication:
                rows.extend(self._replication_rows(point, summary))
        return rows

    @staticmethod
    def _replication_rows(point: SweepPoint, summary: ReplicationSummary) -> List[ResultRow]:
        rows = []
        for index, (metrics, seed) in enumerate(zip(summary.replications, summary.seeds)):
            rows.append(ResultRow(
                sweep_name=point.sweep_name,
                sweep_value=point.sweep_value,
                mode=point.mode,
                engine=Engine.SIMULATION,
                replication=index,
                throughput=metrics.throughput_estimate,
                len_collision=metrics.mean_collision_length() if metrics.collision_events else None,
                p_s=metrics.perceived_success_ratio,
                seed=seed,
            ))
        return rows


def simulation_config(spec: ExperimentSpec, point: SweepPoint) -> SimConfig:
    """First-replication config of a sweep point."""
    return SimConfig(
        params=point.params,
        seed=spec.seed_base,
        warmup_attempts=spec.warmup_attempts,
        measure_attempts=spec.measure_attempts,
    )
