"""Validate model use case."""

import logging
from typing import Callable, List, Optional

from ...domain.exceptions import ModelDomainError, SolverFailureError
from ...infrastructure.logging.run_logger import RunLogger
from ..dto.experiment_spec import ExperimentSpec, SweepPoint
from ..dto.run_results import ValidationPoint, ValidationReport
from ..interfaces.simulation_engine import SimulationEngine
from .analyze_scenario import AnalyzeScenarioUseCase
from .run_sweep import simulation_config

logger = logging.getLogger(__name__)


class ValidateModelUseCase:
    """
    Use case for checking the analytic throughput against simulation.

    Every sweep point is solved and simulated whatever engines the experiment
    lists; a point passes when |simulated mean - analytic| <= tolerance.
    """

    def __init__(
        self,
        simulation_engine: SimulationEngine,
        analyzer: Optional[AnalyzeScenarioUseCase] = None,
        run_logger: Optional[RunLogger] = None,
    ):
        self.simulation_engine = simulation_engine
        self.analyzer = analyzer or AnalyzeScenarioUseCase()
        self.run_logger = run_logger or RunLogger()

    def execute(
        self,
        spec: ExperimentSpec,
        tolerance: float,
        on_point: Optional[Callable[[SweepPoint], None]] = None,
    ) -> ValidationReport:
        """
        Compare both engines at every point of the experiment.

        All points are solved first; their replications then go to the
        simulation engine as a single batch.

        Args:
            spec: Points to check
            tolerance: Largest accepted absolute throughput difference
            on_point: Progress callback, called as each point's simulations finish

        Returns:
            ValidationReport; report.passed is False if any point failed or
            could not be solved
        """
        points = spec.points()
        run_id = self.run_logger.start_run("validation", spec.name, len(points))
        report = ValidationReport(name=spec.name, tolerance=tolerance)

        analytic: List[Optional[float]] = []
        errors: List[Optional[str]] = []
        for point in points:
            try:
                analytic.append(self.analyzer.execute(point.params).report.throughput)
                errors.append(None)
            except (SolverFailureError, ModelDomainError) as e:
                analytic.append(None)
                errors.append(str(e))
                self.run_logger.log_solver_failure(
                    run_id, point.sweep_name, point.sweep_value, point.mode.value, e
                )

        summaries = self.simulation_engine.replicate_many(
            [simulation_config(spec, point) for point in points],
            spec.replications,
            (lambda index: on_point(points[index])) if on_point else None,
        )

        for point, value, error, summary in zip(points, analytic, errors, summaries):
            checked = ValidationPoint(
                sweep_name=point.sweep_name,
                sweep_value=point.sweep_value,
                mode=point.mode,
                analytic=value,
                simulated=summary.mean_throughput,
                stderr=summary.stderr,
                tolerance=tolerance,
                error=error,
            )
            if checked.delta is not None:
                self.run_logger.log_validation(
                    run_id, point.sweep_name, point.sweep_value, point.mode.value, checked.delta, tolerance
                )
            report.points.append(checked)

        self.run_logger.end_run(run_id, len(report.points))
        if not report.passed:
            logger.warning(f"⚠️ Validation of {spec.name} failed (max |Δ| = {report.max_abs_delta})")
        return report
