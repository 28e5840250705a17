"""Perceived-success probability of a transmission attempt under imperfect sensing."""

import math

import numpy as np

from ..exceptions import InvalidArgumentError
from ..value_objects.protocol_params import ProtocolParams

DENOMINATOR_FLOOR = 1e-15


def _check_probability(name: str, value: float) -> None:
    if not 0.0 <= value <= 1.0:
        raise InvalidArgumentError(f"{name} must be in [0, 1], got {value}")


def _check_length(l: int, params: ProtocolParams) -> None:
    if l < 0 or l > params.packet_len:
        raise InvalidArgumentError(f"l must be in [0, {params.packet_len}], got {l}")


def _two_user_weight(p_attempt: float, params: ProtocolParams) -> float:
    """(M-1) p (1-p)^(M-2): exactly one competitor starts in the same slot."""
    if params.m_users == 1:
        return 0.0
    return (params.m_users - 1) * p_attempt * (1.0 - p_attempt) ** (params.m_users - 2)


def collision_free_start_prob(l: int, p_attempt: float, params: ProtocolParams) -> float:
    """
    Probability of turning collision-free after colliding for l slots.

    l = 0 is a clean start. For 1 <= l <= L-1 exactly one competitor started
    alongside, both users missed each other for l-1 slots and the competitor
    detected in slot l while this user missed again. l = L carries no detection
    factor.
    """
    _check_length(l, params)
    _check_probability("p_attempt", p_attempt)

    if l == 0:
        return (1.0 - p_attempt) ** (params.m_users - 1)

    weight = _two_user_weight(p_attempt, params)
    p_miss = params.p_miss
    if l < params.packet_len:
        return weight * p_miss ** (2 * l - 1) * (1.0 - p_miss)
    return weight * p_miss ** (2 * params.packet_len - 1)


def residual_success_prob(l: int, params: ProtocolParams) -> float:
    """Probability of finishing l residual collision-free slots with no false alarm."""
    _check_length(l, params)
    return (1.0 - params.p_false_alarm) ** l


def collision_free_start_terms(p_attempt: float, params: ProtocolParams) -> np.ndarray:
    """Vector of collision_free_start_prob(l) for l = 0..L."""
    _check_probability("p_attempt", p_attempt)
    L = params.packet_len
    l = np.arange(L + 1, dtype=float)

    miss_runs = np.zeros(L + 1)
    np.power(params.p_miss, 2.0 * l - 1.0, out=miss_runs, where=l > 0)

    terms = _two_user_weight(p_attempt, params) * miss_runs
    terms[1:L] *= 1.0 - params.p_miss
    terms[0] = (1.0 - p_attempt) ** (params.m_users - 1)
    return terms


def residual_success_terms(params: ProtocolParams) -> np.ndarray:
    """Vector of residual_success_prob(L - l) for l = 0..L."""
    L = params.packet_len
    return np.power(1.0 - params.p_false_alarm, np.arange(L, -1, -1, dtype=float))


def success_probability(p_attempt: float, params: ProtocolParams) -> float:
    """
    Perceived-success probability p_s as the direct sum over collision lengths.

        p_s = sum_{l=0}^{L} p_a(l) p_b(L - l)

    This is the canonical evaluation; see success_probability_closed_form for
    the compact expression.
    """
    terms = collision_free_start_terms(p_attempt, params) * residual_success_terms(params)
    return math.fsum(terms.tolist())


def success_probability_closed_form(p_attempt: float, params: ProtocolParams) -> float:
    """
    Compact geometric-series form of p_s.

        (1-p)^(M-1) (1-P_f)^L + (M-1) p (1-p)^(M-2) P_m ((1-P_f)^L - P_m^(2L)) / (1 - P_f - P_m^2)

    Falls back to the direct sum when the denominator vanishes.
    """
    _check_probability("p_attempt", p_attempt)
    q = 1.0 - params.p_false_alarm
    m2 = params.p_miss ** 2
    denominator = q - m2
    if abs(denominator) < DENOMINATOR_FLOOR:
        return success_probability(p_attempt, params)

    L = params.packet_len
    clean = (1.0 - p_attempt) ** (params.m_users - 1) * q ** L
    collided = _two_user_weight(p_attempt, params) * params.p_miss * (q ** L - m2 ** L) / denominator
    return clean + collided


def closed_form_deviation(p_attempt: float, params: ProtocolParams) -> float:
    """Closed form minus direct sum of p_s."""
    return success_probability_closed_form(p_attempt, params) - success_probability(p_attempt, params)
