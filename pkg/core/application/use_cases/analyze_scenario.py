"""Analyze scenario use case."""

import logging

from ...domain.services.csma_model import csma_asymptotic_throughput
from ...domain.services.fixed_point import DEFAULT_MAX_ITERATIONS, DEFAULT_TOLERANCE
from ...domain.services.performance import analyze
from ...domain.services.success_model import closed_form_deviation, success_probability_closed_form
from ...domain.value_objects.protocol_params import ProtocolParams
from ..dto.run_results import AnalysisResult

logger = logging.getLogger(__name__)


class AnalyzeScenarioUseCase:
    """
    Use case for solving one scenario analytically.

    Solver failures propagate as SolverFailureError; callers that sweep many
    points catch them per point.
    """

    def __init__(
        self,
        solver_tolerance: float = DEFAULT_TOLERANCE,
        solver_max_iterations: int = DEFAULT_MAX_ITERATIONS,
    ):
        self.solver_tolerance = solver_tolerance
        self.solver_max_iterations = solver_max_iterations

    def execute(self, params: ProtocolParams) -> AnalysisResult:
        """
        Solve the fixed point and evaluate throughput.

        Args:
            params: Scenario parameters (mode selects FD-MAC or CSMA/CA)

        Returns:
            AnalysisResult with the solution, the throughput report and
            mode-specific extras
        """
        logger.debug(f"Analyzing {params.mode.value} scenario: {params.to_dict()}")
        solution, report = analyze(params, self.solver_tolerance, self.solver_max_iterations)

        if params.is_full_duplex:
            extras = {
                "success_probability_closed_form": success_probability_closed_form(solution.p_attempt, params),
                "closed_form_deviation": closed_form_deviation(solution.p_attempt, params),
            }
        else:
            extras = {"asymptotic_throughput": csma_asymptotic_throughput(params, solution)}

        logger.info(f"✅ {params.mode.value}: C={report.throughput:.6f}, p={solution.p_attempt:.6g}")
        return AnalysisResult(params=params, solution=solution, report=report, extras=extras)
