"""Slot-level simulator and replication runner."""

from .runner import ReplicationRunner
from .slot_simulator import (
    SlotKind,
    SlotOutcome,
    SlotSimulator,
    empirical_collision_length,
    new_simulation,
    run,
)

__all__ = [
    "ReplicationRunner",
    "SlotKind",
    "SlotOutcome",
    "SlotSimulator",
    "empirical_collision_length",
    "new_simulation",
    "run",
]
