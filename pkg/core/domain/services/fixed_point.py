"""Bisection solver for the coupled attempt/success fixed point."""

import logging
from typing import Callable, Tuple

from scipy.optimize import bisect

from ..exceptions import InvalidArgumentError, SolverFailureError
from ..value_objects.analysis import FixedPointSolution
from ..value_objects.protocol_params import ProtocolMode, ProtocolParams
from .backoff_chain import attempt_probability
from .success_model import success_probability

logger = logging.getLogger(__name__)

BRACKET_EPSILON = 1e-12
DEFAULT_TOLERANCE = 1e-10
DEFAULT_MAX_ITERATIONS = 200
TINY_SUCCESS = 5e-324


def bisect_fixed_point(
    success_of: Callable[[float], float],
    params: ProtocolParams,
    tolerance: float = DEFAULT_TOLERANCE,
    max_iterations: int = DEFAULT_MAX_ITERATIONS,
) -> FixedPointSolution:
    """
    Solve p = attempt_probability(success_of(p)) by bisection on (eps, 1 - eps).

    The residual f(p) = p - attempt_probability(success_of(p)) is negative at
    the lower end and, apart from windows of length one, positive at the upper
    end.

    Raises:
        SolverFailureError: On iteration cap or residual above tolerance
    """

    def evaluate(p: float) -> Tuple[float, float]:
        p_s = min(max(success_of(p), TINY_SUCCESS), 1.0)
        return p_s, p - attempt_probability(p_s, params)

    def residual(p: float) -> float:
        return evaluate(p)[1]

    lo, hi = BRACKET_EPSILON, 1.0 - BRACKET_EPSILON
    f_hi = residual(hi)

    if f_hi <= 0.0:
        # Only reachable with attempt probability one (CW_min = 1 at every stage)
        p_s, f_one = evaluate(1.0)
        if abs(f_one) <= tolerance:
            return FixedPointSolution(p_attempt=1.0, p_success=p_s, residual=abs(f_one), iterations=0)
        raise SolverFailureError("no sign change on the bracket", last_iterate=hi, residual=abs(f_hi))

    try:
        root, info = bisect(
            residual, lo, hi, xtol=1e-16, maxiter=max_iterations, full_output=True, disp=False
        )
    except (ValueError, RuntimeError) as e:
        raise SolverFailureError(f"bisection failed: {e}") from e

    p_s, f_root = evaluate(root)
    if not info.converged or abs(f_root) > tolerance:
        raise SolverFailureError(
            f"fixed point not reached after {info.iterations} iterations "
            f"(residual {abs(f_root):.3e} > {tolerance:.1e})",
            last_iterate=root,
            iterations=info.iterations,
            residual=abs(f_root),
        )

    logger.debug(f"Fixed point p={root:.12g}, p_s={p_s:.12g} after {info.iterations} iterations")
    return FixedPointSolution(
        p_attempt=root, p_success=p_s, residual=abs(f_root), iterations=info.iterations
    )


def solve_fixed_point(
    params: ProtocolParams,
    tolerance: float = DEFAULT_TOLERANCE,
    max_iterations: int = DEFAULT_MAX_ITERATIONS,
) -> FixedPointSolution:
    """
    Jointly solve the attempt probability and the perceived-success probability of FD-MAC.

    Args:
        params: Scenario parameters, mode must be FULL_DUPLEX
        tolerance: Bound on |p - attempt_probability(success_probability(p))|
        max_iterations: Bisection step cap

    Returns:
        FixedPointSolution with solver diagnostics
    """
    if params.mode is not ProtocolMode.FULL_DUPLEX:
        raise InvalidArgumentError(f"solve_fixed_point needs full-duplex mode, got {params.mode.value}")

    return bisect_fixed_point(
        lambda p: success_probability(p, params), params, tolerance, max_iterations
    )
