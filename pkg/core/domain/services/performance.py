"""Mode dispatch over the FD-MAC model and the CSMA/CA baseline."""

from typing import Tuple

from ..value_objects.analysis import FixedPointSolution, ThroughputReport
from ..value_objects.protocol_params import ProtocolParams
from .csma_model import csma_report_at, csma_solve
from .fixed_point import DEFAULT_MAX_ITERATIONS, DEFAULT_TOLERANCE, solve_fixed_point
from .throughput_model import throughput


def solve(
    params: ProtocolParams,
    tolerance: float = DEFAULT_TOLERANCE,
    max_iterations: int = DEFAULT_MAX_ITERATIONS,
) -> FixedPointSolution:
    """Fixed point of whichever scheme params.mode selects."""
    if params.is_full_duplex:
        return solve_fixed_point(params, tolerance, max_iterations)
    return csma_solve(params, tolerance, max_iterations)


def analyze(
    params: ProtocolParams,
    tolerance: float = DEFAULT_TOLERANCE,
    max_iterations: int = DEFAULT_MAX_ITERATIONS,
) -> Tuple[FixedPointSolution, ThroughputReport]:
    """Solve the fixed point and evaluate the throughput report at it."""
    solution = solve(params, tolerance, max_iterations)
    if params.is_full_duplex:
        return solution, throughput(solution.p_attempt, params)
    return solution, csma_report_at(solution.p_attempt, params)
