"""
Domain services - the analytical saturation-throughput model.

- backoff_chain: contention windows, attempt probability, Markov chain oracle
- success_model: collision-free start, residual success, perceived success
- throughput_model: event probabilities, cycle lengths, throughput
- csma_model: blind CSMA/CA baseline
- fixed_point: bisection solver shared by both schemes
"""

from .backoff_chain import attempt_probability, cw_of_stage, stationary_distribution
from .csma_model import csma_asymptotic_throughput, csma_solve, csma_throughput
from .fixed_point import solve_fixed_point
from .performance import analyze, solve
from .success_model import (
    closed_form_deviation,
    collision_free_start_prob,
    residual_success_prob,
    success_probability,
    success_probability_closed_form,
)
from .throughput_model import (
    avg_collision_length,
    avg_success_length,
    throughput,
)

__all__ = [
    "attempt_probability",
    "cw_of_stage",
    "stationary_distribution",
    "csma_asymptotic_throughput",
    "csma_solve",
    "csma_throughput",
    "solve_fixed_point",
    "analyze",
    "solve",
    "closed_form_deviation",
    "collision_free_start_prob",
    "residual_success_prob",
    "success_probability",
    "success_probability_closed_form",
    "avg_collision_length",
    "avg_success_length",
    "throughput",
]
