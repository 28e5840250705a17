"""Conventional CSMA/CA basic access baseline (blind transmitters)."""

import math
from typing import Optional

from ..exceptions import InvalidArgumentError
from ..value_objects.analysis import FixedPointSolution, ThroughputReport
from ..value_objects.protocol_params import ProtocolMode, ProtocolParams
from .fixed_point import DEFAULT_MAX_ITERATIONS, DEFAULT_TOLERANCE, bisect_fixed_point
from .throughput_model import cycle_throughput, event_probabilities


def _require_csma(params: ProtocolParams) -> None:
    if params.mode is not ProtocolMode.CSMA_CA:
        raise InvalidArgumentError(f"CSMA/CA baseline needs csma mode, got {params.mode.value}")


def conditional_collision_probability(tau: float, params: ProtocolParams) -> float:
    """p_c = 1 - (1 - tau)^(M-1)."""
    if params.m_users == 1:
        return 0.0
    return -math.expm1((params.m_users - 1) * math.log1p(-tau)) if tau < 1.0 else 1.0


def csma_solve(
    params: ProtocolParams,
    tolerance: float = DEFAULT_TOLERANCE,
    max_iterations: int = DEFAULT_MAX_ITERATIONS,
) -> FixedPointSolution:
    """
    Bianchi fixed point for basic access.

        tau = 2(1 - 2p_c) / ((1 - 2p_c)(CW_min + 1) + p_c CW_min (1 - (2p_c)^W_max))

    This is the attempt-probability closed form evaluated at p_s = 1 - p_c, so
    both schemes share one chain and one solver. The solution carries tau as
    p_attempt and 1 - p_c as p_success.
    """
    _require_csma(params)
    return bisect_fixed_point(
        lambda tau: 1.0 - conditional_collision_probability(tau, params),
        params,
        tolerance,
        max_iterations,
    )


def csma_report_at(tau: float, params: ProtocolParams) -> ThroughputReport:
    """Throughput report at a given tau: every transmission, clean or not, lasts L slots."""
    p_empty, p_single, p_collision = event_probabilities(tau, params)
    length = float(params.packet_len)
    return ThroughputReport(
        p_empty=p_empty,
        p_single_success=p_single,
        p_collision=p_collision,
        len_success=length,
        len_collision=length,
        throughput=cycle_throughput(p_empty, p_single, p_collision, length, length, params.difs),
    )


def csma_throughput(
    params: ProtocolParams, solution: Optional[FixedPointSolution] = None
) -> ThroughputReport:
    """Saturation throughput of the CSMA/CA baseline at its fixed point."""
    _require_csma(params)
    if solution is None:
        solution = csma_solve(params)
    return csma_report_at(solution.p_attempt, params)


def csma_asymptotic_throughput(
    params: ProtocolParams, solution: Optional[FixedPointSolution] = None
) -> float:
    """Long-packet limit P_s / (P_s + P_c) at the solved tau."""
    _require_csma(params)
    if solution is None:
        solution = csma_solve(params)
    _, p_single, p_collision = event_probabilities(solution.p_attempt, params)
    busy = p_single + p_collision
    return p_single / busy if busy > 0.0 else 0.0
