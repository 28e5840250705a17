"""Backoff window, attempt probability and the backoff Markov chain."""

import logging
import math

import numpy as np
from scipy import sparse
from scipy.sparse.linalg import spsolve

from ..exceptions import InvalidArgumentError, ModelDomainError
from ..value_objects.analysis import StationaryDistribution
from ..value_objects.protocol_params import ProtocolParams

logger = logging.getLogger(__name__)

# |2 p_s - 1| below this selects the removable-singularity limit.
SINGULARITY_BAND = 1e-9
CLAMP_SLACK = 1e-12


def cw_of_stage(stage: int, params: ProtocolParams) -> int:
    """Contention window length at backoff stage `stage`: 2^stage * cw_min."""
    if stage < 0 or stage > params.w_max:
        raise InvalidArgumentError(f"stage must be in [0, {params.w_max}], got {stage}")
    return params.cw_min << stage


def attempt_probability(p_success: float, params: ProtocolParams) -> float:
    """
    Probability that a user begins transmission in a generic slot.

    Closed form of the stationary chain:

        p = 2(2p_s - 1) / ((2p_s - 1)(CW_min + 1) + (1 - p_s) CW_min (1 - (2 - 2p_s)^W_max))

    Numerator and denominator both vanish at p_s = 1/2; the limit there is
    4 / (2(CW_min + 1) + CW_min W_max).

    Args:
        p_success: Perceived-success probability, in (0, 1]
        params: Scenario parameters

    Returns:
        Attempt probability in (0, 1]

    Raises:
        InvalidArgumentError: If p_success is outside (0, 1]
        ModelDomainError: If the formula leaves (0, 1] beyond rounding
    """
    if not 0.0 < p_success <= 1.0:
        raise InvalidArgumentError(f"p_success must be in (0, 1], got {p_success}")

    cw = params.cw_min
    if params.w_max == 0:
        return 2.0 / (cw + 1)

    x = 2.0 * p_success - 1.0
    if abs(x) < SINGULARITY_BAND:
        raw = 4.0 / (2.0 * (cw + 1) + cw * params.w_max)
    else:
        # 1 - (2 - 2p_s)^W_max, accurate when 2 - 2p_s is close to one
        shortfall = -math.expm1(params.w_max * math.log1p(-x)) if x < 1.0 else 1.0
        raw = 2.0 * x / (x * (cw + 1) + (1.0 - p_success) * cw * shortfall)

    if 0.0 < raw <= 1.0:
        return raw
    if -CLAMP_SLACK < raw <= 0.0:
        return float(np.nextafter(0.0, 1.0))
    if 1.0 < raw < 1.0 + CLAMP_SLACK:
        return 1.0
    raise ModelDomainError("attempt probability outside (0, 1]", raw)


def _state_offsets(params: ProtocolParams) -> np.ndarray:
    sizes = [cw_of_stage(stage, params) for stage in range(params.w_max + 1)]
    return np.concatenate(([0], np.cumsum(sizes)))


def transition_matrix(p_success: float, params: ProtocolParams) -> sparse.csr_matrix:
    """
    Row-stochastic transition matrix over states (w, W).

    State (w, W) has flat index offsets[W] + w. Non-zero transitions:
      (w, W) -> (w - 1, W)                  with probability 1, w > 0
      (0, W) -> (w', 0)                     with p_s / CW_min
      (0, W) -> (w', min(W + 1, W_max))     with (1 - p_s) / CW_{min(W+1, W_max)}
    """
    offsets = _state_offsets(params)
    n = int(offsets[-1])
    rows, cols, vals = [], [], []

    for stage in range(params.w_max + 1):
        base = int(offsets[stage])
        size = cw_of_stage(stage, params)

        # countdown
        countdown = np.arange(base + 1, base + size)
        rows.append(countdown)
        cols.append(countdown - 1)
        vals.append(np.ones(size - 1))

        # success from (0, W): back to stage 0
        head = np.full(params.cw_min, base)
        rows.append(head)
        cols.append(np.arange(int(offsets[0]), int(offsets[0]) + params.cw_min))
        vals.append(np.full(params.cw_min, p_success / params.cw_min))

        # failure from (0, W): next stage, capped
        next_stage = min(stage + 1, params.w_max)
        next_size = cw_of_stage(next_stage, params)
        next_base = int(offsets[next_stage])
        rows.append(np.full(next_size, base))
        cols.append(np.arange(next_base, next_base + next_size))
        vals.append(np.full(next_size, (1.0 - p_success) / next_size))

    return sparse.csr_matrix(
        (np.concatenate(vals), (np.concatenate(rows), np.concatenate(cols))),
        shape=(n, n),
    )


def stationary_distribution(p_success: float, params: ProtocolParams) -> StationaryDistribution:
    """
    Solve pi P = pi, sum(pi) = 1 for the backoff chain by a sparse linear solve.

    Independent of the closed form in attempt_probability, which makes it an
    oracle for it: sum_W pi(0, W) must reproduce attempt_probability(p_success).
    """
    if not 0.0 < p_success <= 1.0:
        raise InvalidArgumentError(f"p_success must be in (0, 1], got {p_success}")

    offsets = _state_offsets(params)
    n = int(offsets[-1])
    P = transition_matrix(p_success, params)

    # (P^T - I) pi = 0 with the first balance equation swapped for normalization
    A = (P.T - sparse.identity(n, format="csr")).tocsr()
    A = sparse.vstack([sparse.csr_matrix(np.ones((1, n))), A[1:]]).tocsc()
    b = np.zeros(n)
    b[0] = 1.0

    pi = spsolve(A, b)
    if not np.all(np.isfinite(pi)):
        raise ModelDomainError("stationary solve produced non-finite entries", float("nan"))

    pi = np.clip(pi, 0.0, None)
    logger.debug(f"Stationary solve over {n} states, mass={pi.sum():.15f}")

    return StationaryDistribution(
        stages=[pi[int(offsets[s]):int(offsets[s + 1])].copy() for s in range(params.w_max + 1)]
    )
