"""Domain entities."""

from .user_state import UserPhase, UserState
from .sim_metrics import SimMetrics

__all__ = ["UserPhase", "UserState", "SimMetrics"]
