"""Built-in experiments: the reference window and packet-length sweeps, plus two extra sweeps."""

from typing import Any, Dict

from ..config.settings import Settings
from .registry import register_preset

# Reference scenario shared by the presets
EVALUATION_BASE: Dict[str, Any] = {
    "m_users": 100,
    "packet_len": 1000,
    "cw_min": 16,
    "w_max": 11,
    "p_false_alarm": 1e-3,
    "p_miss": 1e-2,
    "difs": 2,
}

FIG3_CW_MAX = 2 ** 15
FIG4_LENGTHS = [10, 20, 50, 100, 200, 500, 1000, 2000, 5000, 10_000, 20_000]
FIG4_STAGE_LIMITS = [2, 3, 8, 11]


def _run_defaults(settings: Settings, name: str) -> Dict[str, Any]:
    return {
        "name": name,
        "replications": settings.replications,
        "seed_base": settings.seed_base,
        "warmup_attempts": settings.warmup_attempts,
        "measure_attempts": settings.measure_attempts,
        "output_path": f"{settings.output_dir}/{name}.csv",
    }


@register_preset("fig3", "Throughput vs CW_min (2^2..2^10), CW_max = 2^15, L = 1000, both modes and engines")
def fig3(settings: Settings) -> Dict[str, Any]:
    return {
        **_run_defaults(settings, "fig3"),
        "base": {**EVALUATION_BASE, "cw_min": 4, "w_max": 13},
        "sweep_variable": "cw_min",
        "sweep_values": [2 ** k for k in range(2, 11)],
        "cw_max": FIG3_CW_MAX,
        "modes": ["fd", "csma"],
        "engines": ["analytic", "sim"],
    }


@register_preset("fig4", "Throughput vs packet length (10..2*10^4), CW_min = 16, W_max in {2, 3, 8, 11}")
def fig4(settings: Settings) -> Dict[str, Any]:
    return {
        **_run_defaults(settings, "fig4"),
        "base": dict(EVALUATION_BASE),
        "sweep_variable": "packet_len",
        "sweep_values": FIG4_LENGTHS,
        "series": [{"label": f"w_max={w}", "overrides": {"w_max": w}} for w in FIG4_STAGE_LIMITS],
        "modes": ["fd", "csma"],
        "engines": ["analytic"],
    }


@register_preset("users", "Throughput vs number of users, CW_min = 2^7, W_max = 8")
def users(settings: Settings) -> Dict[str, Any]:
    return {
        **_run_defaults(settings, "users"),
        "base": {**EVALUATION_BASE, "cw_min": 128, "w_max": 8},
        "sweep_variable": "m_users",
        "sweep_values": [2, 5, 10, 20, 50, 100, 200],
        "modes": ["fd", "csma"],
        "engines": ["analytic", "sim"],
    }


@register_preset("miss", "FD-MAC throughput vs miss-detection probability, CW_min = 2^7, W_max = 8")
def miss(settings: Settings) -> Dict[str, Any]:
    return {
        **_run_defaults(settings, "miss"),
        "base": {**EVALUATION_BASE, "cw_min": 128, "w_max": 8},
        "sweep_variable": "p_miss",
        "sweep_values": [1e-4, 1e-3, 1e-2, 0.05, 0.1, 0.2, 0.5],
        "modes": ["fd"],
        "engines": ["analytic", "sim"],
    }
