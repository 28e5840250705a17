"""User state entity - the per-user MAC state machine."""

from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict


class UserPhase(Enum):
    """Where a user stands in the access procedure."""
    WAITING_DIFS = "waiting_difs"
    BACKOFF = "backoff"
    TRANSMITTING = "transmitting"


@dataclass
class UserState:
    """
    MAC state of one contending user: residual backoff w and stage W.

    A user waits for DIFS consecutive idle slots, then counts its backoff down
    one per idle slot, and transmits in the slot after it reaches zero. Any
    busy slot sensed while not transmitting re-arms the DIFS wait and freezes
    the counter.
    """

    stage: int = 0
    backoff_residual: int = 0
    difs_progress: int = 0
    tx_elapsed: int = 0
    phase: UserPhase = UserPhase.WAITING_DIFS
    collided: bool = False

    @property
    def is_transmitting(self) -> bool:
        return self.phase is UserPhase.TRANSMITTING

    def idle_slots_to_access(self, difs: int) -> int:
        """Idle slots still needed before this user transmits."""
        return (difs - self.difs_progress) + self.backoff_residual

    def sense_busy(self) -> None:
        """Freeze on a busy slot."""
        if self.is_transmitting:
            raise ValueError("A transmitting user does not defer")
        self.difs_progress = 0
        self.phase = UserPhase.WAITING_DIFS

    def sense_idle(self, difs: int, slots: int = 1) -> bool:
        """
        Account for `slots` consecutive idle slots.

        Returns:
            True if the user starts transmitting in the following slot
        """
        if self.is_transmitting:
            raise ValueError("A transmitting user does not count down")
        if slots > self.idle_slots_to_access(difs):
            raise ValueError(f"Cannot skip {slots} idle slots past the access instant")

        towards_difs = min(slots, difs - self.difs_progress)
        self.difs_progress += towards_difs
        self.backoff_residual -= slots - towards_difs

        if self.difs_progress < difs:
            self.phase = UserPhase.WAITING_DIFS
            return False
        if self.backoff_residual > 0:
            self.phase = UserPhase.BACKOFF
            return False

        self.begin_transmission()
        return True

    def begin_transmission(self) -> None:
        """Start a fresh packet in the next slot."""
        self.phase = UserPhase.TRANSMITTING
        self.tx_elapsed = 0
        self.collided = False

    def transmit_slot(self, overlapped: bool = False) -> int:
        """Record one transmitted slot; returns slots sent so far."""
        if not self.is_transmitting:
            raise ValueError(f"Cannot transmit in phase: {self.phase}")
        self.tx_elapsed += 1
        self.collided = self.collided or overlapped
        return self.tx_elapsed

    def transmit_slots(self, slots: int) -> int:
        """Record a run of solo slots."""
        if not self.is_transmitting:
            raise ValueError(f"Cannot transmit in phase: {self.phase}")
        self.tx_elapsed += slots
        return self.tx_elapsed

    def back_off(self, w_max: int, residual: int) -> None:
        """Abort the packet: W = min(W + 1, W_max), new residual drawn by the caller."""
        self._leave_channel(min(self.stage + 1, w_max), residual)

    def finish(self, residual: int) -> None:
        """Packet sent without noticing a collision: W = 0."""
        self._leave_channel(0, residual)

    def _leave_channel(self, stage: int, residual: int) -> None:
        if not self.is_transmitting:
            raise ValueError(f"Cannot leave the channel in phase: {self.phase}")
        if residual < 0:
            raise ValueError("Backoff residual must be non-negative")
        self.stage = stage
        self.backoff_residual = residual
        self.difs_progress = 0
        self.tx_elapsed = 0
        self.phase = UserPhase.WAITING_DIFS

    def to_dict(self) -> Dict[str, Any]:
        """Convert user state to dictionary representation."""
        return {
            "phase": self.phase.value,
            "stage": self.stage,
            "backoff_residual": self.backoff_residual,
            "difs_progress": self.difs_progress,
            "tx_elapsed": self.tx_elapsed,
        }
