"""Saturation throughput of FD-MAC: slot-event probabilities, cycle lengths and C."""

import math
from typing import Tuple

from scipy.stats import binom

from ..exceptions import InvalidArgumentError, UndefinedQuantityError
from ..value_objects.analysis import ThroughputReport
from ..value_objects.protocol_params import ProtocolParams

# Length of an empty slot in slots.
EMPTY_SLOT_LENGTH = 1.0


def _check_attempt(p_attempt: float) -> None:
    if not 0.0 < p_attempt <= 1.0:
        raise InvalidArgumentError(f"p_attempt must be in (0, 1], got {p_attempt}")


def event_probabilities(p_attempt: float, params: ProtocolParams) -> Tuple[float, float, float]:
    """
    (P_e, P_s, P_c) for M users each starting with probability p.

    P_c is evaluated as a binomial upper tail rather than 1 - P_e - P_s so it
    stays accurate for small p.
    """
    _check_attempt(p_attempt)
    m = params.m_users
    p_empty = (1.0 - p_attempt) ** m
    p_single = m * p_attempt * (1.0 - p_attempt) ** (m - 1)
    p_collision = 0.0 if m == 1 else float(binom.sf(1, m, p_attempt))
    return p_empty, p_single, p_collision


def avg_success_length(params: ProtocolParams) -> float:
    """
    Mean length of a collision-free transmission, truncated by false alarms.

        L_s = (1 - (1-P_f)^(L-1)) / P_f + (1-P_f)^(L-1)

    Equals L exactly when P_f = 0 and tends to 1/P_f for long packets.
    """
    p_f = params.p_false_alarm
    if p_f == 0.0:
        return float(params.packet_len)

    # (1-P_f)^(L-1) through log1p to keep precision for tiny P_f
    log_survive = (params.packet_len - 1) * math.log1p(-p_f)
    return -math.expm1(log_survive) / p_f + math.exp(log_survive)


def avg_success_length_sum(params: ProtocolParams) -> float:
    """Defining sum of L_s: sum_{l=1}^{L-1} l (1-P_f)^(l-1) P_f + L (1-P_f)^(L-1)."""
    q = 1.0 - params.p_false_alarm
    L = params.packet_len
    truncated = (l * q ** (l - 1) * params.p_false_alarm for l in range(1, L))
    return math.fsum(truncated) + L * q ** (L - 1)


def _pair_share(p_attempt: float, p_collision: float, params: ProtocolParams) -> float:
    """C(M,2) p^2 (1-p)^(M-2) / P_c: share of collisions involving exactly two users."""
    m = params.m_users
    pair = math.comb(m, 2) * p_attempt ** 2 * (1.0 - p_attempt) ** (m - 2)
    return pair / p_collision


def avg_collision_length(p_attempt: float, params: ProtocolParams) -> float:
    """
    Mean length of a collision in slots.

        L_c = 1 + C(M,2) p^2 (1-p)^(M-2) P_m^2 (1 - P_m^(2L-2)) / (P_c (1 - P_m^2))

    Raises:
        UndefinedQuantityError: If no collision can occur (P_c = 0)
    """
    _check_attempt(p_attempt)
    _, _, p_collision = event_probabilities(p_attempt, params)
    if p_collision <= 0.0:
        raise UndefinedQuantityError(
            f"collision length undefined: P_c = 0 (M={params.m_users}, p={p_attempt})"
        )

    m2 = params.p_miss ** 2
    if m2 == 0.0:
        return 1.0
    tail = m2 * (1.0 - m2 ** (params.packet_len - 1)) / (1.0 - m2)
    return 1.0 + _pair_share(p_attempt, p_collision, params) * tail


def avg_collision_length_sum(p_attempt: float, params: ProtocolParams) -> float:
    """Defining sum of L_c: (P_c + C(M,2) p^2 (1-p)^(M-2) sum_{l=1}^{L-1} P_m^(2l) (1 - P_m^2) l) / P_c."""
    _check_attempt(p_attempt)
    _, _, p_collision = event_probabilities(p_attempt, params)
    if p_collision <= 0.0:
        raise UndefinedQuantityError("collision length undefined: P_c = 0")

    m2 = params.p_miss ** 2
    extension = math.fsum(m2 ** l * (1.0 - m2) * l for l in range(1, params.packet_len))
    return 1.0 + _pair_share(p_attempt, p_collision, params) * extension


def cycle_throughput(
    p_empty: float,
    p_single: float,
    p_collision: float,
    len_success: float,
    len_collision: float,
    difs: int,
) -> float:
    """
    Share of channel time carrying collision-free transmission.

        C = P_s L_s / (P_e + P_s (L_s + DIFS) + P_c (L_c + DIFS))
    """
    busy_success = p_single * (len_success + difs)
    busy_collision = p_collision * (len_collision + difs) if p_collision > 0.0 else 0.0
    denominator = p_empty * EMPTY_SLOT_LENGTH + busy_success + busy_collision
    if denominator <= 0.0:
        return 0.0
    return min(max(p_single * len_success / denominator, 0.0), 1.0)


def throughput(p_attempt: float, params: ProtocolParams) -> ThroughputReport:
    """
    Full FD-MAC throughput report at attempt probability p.

    When P_c = 0 (a single user) len_collision is reported as 1 and the
    collision term carries no weight.
    """
    p_empty, p_single, p_collision = event_probabilities(p_attempt, params)
    len_success = avg_success_length(params)
    len_collision = avg_collision_length(p_attempt, params) if p_collision > 0.0 else 1.0

    return ThroughputReport(
        p_empty=p_empty,
        p_single_success=p_single,
        p_collision=p_collision,
        len_success=len_success,
        len_collision=len_collision,
        throughput=cycle_throughput(
            p_empty, p_single, p_collision, len_success, len_collision, params.difs
        ),
    )
