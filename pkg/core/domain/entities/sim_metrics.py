"""Simulation metrics entity - slot-level counters of a run."""

from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Dict

from ..exceptions import UndefinedQuantityError


@dataclass
class SimMetrics:
    """
    Counters over a measurement window.

    Slots are classified by the number of concurrent transmitters: none,
    exactly one, two or more. A collision span is a maximal run of slots with
    two or more transmitters.
    """

    total_slots: int = 0
    idle_slots: int = 0
    single_tx_slots: int = 0
    collision_slots: int = 0
    attempts: int = 0
    perceived_successes: int = 0
    false_alarm_truncations: int = 0
    collision_abort_lengths: Counter = field(default_factory=Counter)

    def record_slots(self, transmitters: int, slots: int = 1) -> None:
        """Classify `slots` consecutive slots sharing one transmitter count."""
        self.total_slots += slots
        if transmitters == 0:
            self.idle_slots += slots
        elif transmitters == 1:
            self.single_tx_slots += slots
        else:
            self.collision_slots += slots

    def record_collision_span(self, length: int) -> None:
        self.collision_abort_lengths[length] += 1

    @property
    def throughput_estimate(self) -> float:
        """Share of slots carrying a lone transmitter."""
        if self.total_slots == 0:
            return 0.0
        return self.single_tx_slots / self.total_slots

    @property
    def collision_events(self) -> int:
        return sum(self.collision_abort_lengths.values())

    @property
    def perceived_success_ratio(self) -> float:
        """Empirical perceived-success probability per attempt."""
        if self.attempts == 0:
            return 0.0
        return self.perceived_successes / self.attempts

    def mean_collision_length(self) -> float:
        """Mean collision span in slots."""
        events = self.collision_events
        if events == 0:
            raise UndefinedQuantityError("no collision was recorded")
        return sum(length * count for length, count in self.collision_abort_lengths.items()) / events

    def is_consistent(self) -> bool:
        """Slot classes add up to the total."""
        return self.idle_slots + self.single_tx_slots + self.collision_slots == self.total_slots

    def reset(self) -> None:
        """Discard everything counted so far."""
        self.total_slots = 0
        self.idle_slots = 0
        self.single_tx_slots = 0
        self.collision_slots = 0
        self.attempts = 0
        self.perceived_successes = 0
        self.false_alarm_truncations = 0
        self.collision_abort_lengths = Counter()

    def to_dict(self) -> Dict[str, Any]:
        """Convert metrics to dictionary representation."""
        return {
            "total_slots": self.total_slots,
            "idle_slots": self.idle_slots,
            "single_tx_slots": self.single_tx_slots,
            "collision_slots": self.collision_slots,
            "attempts": self.attempts,
            "perceived_successes": self.perceived_successes,
            "false_alarm_truncations": self.false_alarm_truncations,
            "collision_abort_lengths": {
                str(length): count for length, count in sorted(self.collision_abort_lengths.items())
            },
            "throughput_estimate": self.throughput_estimate,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SimMetrics":
        """Create metrics from dictionary representation."""
        return cls(
            total_slots=data.get("total_slots", 0),
            idle_slots=data.get("idle_slots", 0),
            single_tx_slots=data.get("single_tx_slots", 0),
            collision_slots=data.get("collision_slots", 0),
            attempts=data.get("attempts", 0),
            perceived_successes=data.get("perceived_successes", 0),
            false_alarm_truncations=data.get("false_alarm_truncations", 0),
            collision_abort_lengths=Counter(
                {int(k): v for k, v in data.get("collision_abort_lengths", {}).items()}
            ),
        )
