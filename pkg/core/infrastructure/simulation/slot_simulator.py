"""
Slot-level Monte-Carlo simulator of saturated FD-MAC and CSMA/CA users.

Time advances in slots. In every slot each user is either transmitting or
not; the number of transmitters classifies the slot as idle, single or
collision. Transmitters in full-duplex mode sense the channel while sending:

- alone, they hear a false alarm with probability P_f
- with exactly one other transmitter, they detect it with probability 1 - P_m
- with two or more others, they always detect

and abort on detection. CSMA/CA transmitters are blind and always send L slots.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, List, Tuple

from ...domain.entities.sim_metrics import SimMetrics
from ...domain.entities.user_state import UserState
from ...domain.exceptions import SimulationStallError
from ...domain.services.backoff_chain import cw_of_stage
from ...domain.value_objects.sim_config import SimConfig
from .rng import user_streams

logger = logging.getLogger(__name__)

STALL_LIMIT = 10 ** 9


class SlotKind(Enum):
    """Classification of a slot by its number of transmitters."""
    IDLE = "idle"
    SINGLE = "single"
    COLLISION = "collision"

    @classmethod
    def of(cls, transmitters: int) -> "SlotKind":
        if transmitters == 0:
            return cls.IDLE
        if transmitters == 1:
            return cls.SINGLE
        return cls.COLLISION


@dataclass(frozen=True)
class SlotOutcome:
    """What happened in one simulated slot (user indices)."""

    slot: int
    kind: SlotKind
    transmitters: Tuple[int, ...]
    completed: Tuple[int, ...]
    aborted: Tuple[int, ...]
    started: Tuple[int, ...]


class SlotSimulator:
    """
    Simulation state plus the rules that advance it.

    `step` advances exactly one slot and is meant for inspection and tests.
    `run` advances whole renewal cycles, skipping idle stretches and the solo
    part of busy periods in one jump each; the draws it makes are equivalent in
    distribution to stepping slot by slot.
    """

    def __init__(self, config: SimConfig):
        self.config = config
        self.params = config.params
        self.streams = user_streams(config.seed, self.params.m_users)
        self.users: List[UserState] = [
            UserState(backoff_residual=self._draw_residual(index, 0))
            for index in range(self.params.m_users)
        ]
        self.metrics = SimMetrics()
        self.slot = 0
        self._collision_run = 0
        self._last_attempt_slot = 0

    # ------------------------------------------------------------------ draws

    def _draw_residual(self, index: int, stage: int) -> int:
        return int(self.streams[index].integers(cw_of_stage(stage, self.params)))

    def _bernoulli(self, index: int, probability: float) -> bool:
        if probability <= 0.0:
            return False
        if probability >= 1.0:
            return True
        return bool(self.streams[index].random() < probability)

    def _hears_interference(self, index: int, transmitters: int) -> bool:
        if not self.params.is_full_duplex:
            return False
        if transmitters == 1:
            return self._bernoulli(index, self.params.p_false_alarm)
        if transmitters == 2:
            return self._bernoulli(index, 1.0 - self.params.p_miss)
        return True

    # ------------------------------------------------------------ transitions

    def transmitting(self) -> List[int]:
        """Indices of the users transmitting in the current slot."""
        return [index for index, user in enumerate(self.users) if user.is_transmitting]

    def _abort(self, index: int) -> None:
        user = self.users[index]
        stage = min(user.stage + 1, self.params.w_max)
        user.back_off(self.params.w_max, self._draw_residual(index, stage))
        assert user.stage <= self.params.w_max

    def _complete(self, index: int) -> None:
        """The packet's L slots are out."""
        user = self.users[index]
        if not self.params.is_full_duplex and user.collided:
            self._abort(index)
            return
        user.finish(self._draw_residual(index, 0))
        self.metrics.perceived_successes += 1

    def _defer_others(self, transmitters: Iterable[int]) -> None:
        busy = set(transmitters)
        for index, user in enumerate(self.users):
            if index not in busy:
                user.sense_busy()

    def _note_attempts(self, count: int) -> None:
        if count:
            self.metrics.attempts += count
            self._last_attempt_slot = self.slot
        elif self.slot - self._last_attempt_slot > STALL_LIMIT:
            raise SimulationStallError(
                f"no transmission attempt in {self.slot - self._last_attempt_slot} slots"
            )

    def _close_collision_run(self, still_transmitting: int) -> None:
        if self._collision_run and still_transmitting < 2:
            self.metrics.record_collision_span(self._collision_run)
            self._collision_run = 0

    # ------------------------------------------------------------------- slot

    def step(self) -> SlotOutcome:
        """
        Advance exactly one slot.

        Transmitters send one slot and then sense; non-transmitters sense the
        slot and count down if it was idle. Users whose access instant is
        reached begin transmitting in the next slot.
        """
        transmitters = self.transmitting()
        count = len(transmitters)
        self.metrics.record_slots(count)
        self.slot += 1
        if count >= 2:
            self._collision_run += 1

        completed, aborted = [], []
        for index in transmitters:
            user = self.users[index]
            user.transmit_slot(overlapped=count >= 2)
            if self._hears_interference(index, count):
                if count == 1:
                    self.metrics.false_alarm_truncations += 1
                self._abort(index)
                aborted.append(index)
            elif user.tx_elapsed >= self.params.packet_len:
                self._complete(index)
                completed.append(index)

        started = []
        on_air = set(transmitters)
        for index, user in enumerate(self.users):
            if index in on_air:
                continue
            if count:
                user.sense_busy()
            elif user.sense_idle(self.params.difs):
                started.append(index)

        self._note_attempts(len(started))
        self._close_collision_run(count - len(completed) - len(aborted))

        return SlotOutcome(
            slot=self.slot,
            kind=SlotKind.of(count),
            transmitters=tuple(transmitters),
            completed=tuple(completed),
            aborted=tuple(aborted),
            started=tuple(started),
        )

    # ------------------------------------------------------------ fast path

    def _skip_idle(self) -> None:
        """Jump over the idle slots preceding the next access."""
        difs = self.params.difs
        gap = min(user.idle_slots_to_access(difs) for user in self.users)
        self.metrics.record_slots(0, gap)
        self.slot += gap
        self._note_attempts(sum(1 for user in self.users if user.sense_idle(difs, gap)))

    def _solo_stretch(self, index: int) -> None:
        """Lone full-duplex transmitter: run to the first false alarm or to the end of the packet."""
        user = self.users[index]
        self._defer_others((index,))
        remaining = self.params.packet_len - user.tx_elapsed
        p_f = self.params.p_false_alarm
        alarm_at = int(self.streams[index].geometric(p_f)) if p_f > 0.0 else remaining + 1

        sent = min(alarm_at, remaining)
        user.transmit_slots(sent)
        self.metrics.record_slots(1, sent)
        self.slot += sent

        if alarm_at <= remaining:
            self.metrics.false_alarm_truncations += 1
            self._abort(index)
        else:
            self._complete(index)

    def _blind_busy_period(self, transmitters: List[int]) -> None:
        """CSMA/CA: everyone who started sends all L slots."""
        count = len(transmitters)
        length = self.params.packet_len
        self._defer_others(transmitters)
        for index in transmitters:
            user = self.users[index]
            user.transmit_slot(overlapped=count >= 2)
            user.transmit_slots(length - 1)

        self.metrics.record_slots(count, length)
        self.slot += length
        if count >= 2:
            self.metrics.record_collision_span(length)
        for index in transmitters:
            self._complete(index)

    def advance_cycle(self) -> None:
        """One renewal cycle: the idle stretch before the next access, then the whole busy period."""
        if not any(user.is_transmitting for user in self.users):
            self._skip_idle()

        while True:
            transmitters = self.transmitting()
            if not transmitters:
                return
            if not self.params.is_full_duplex:
                self._blind_busy_period(transmitters)
            elif len(transmitters) == 1:
                self._solo_stretch(transmitters[0])
            else:
                self.step()

    def _advance_until(self, attempts: int) -> None:
        while self.metrics.attempts < attempts:
            self.advance_cycle()

    def run(self) -> SimMetrics:
        """
        Warm up, reset the counters, then measure.

        Both phases stop at the first cycle boundary after their attempt
        target is reached, so no busy period is split across them.
        """
        if self.config.warmup_attempts:
            self._advance_until(self.config.warmup_attempts)
            self.metrics.reset()
        self._advance_until(self.config.measure_attempts)

        logger.debug(
            f"Simulated {self.metrics.total_slots} slots, {self.metrics.attempts} attempts, "
            f"throughput {self.metrics.throughput_estimate:.6f} "
            f"({self.params.mode.value}, seed={self.config.seed})"
        )
        return self.metrics


def new_simulation(config: SimConfig) -> SlotSimulator:
    """Fresh state: every user waits DIFS at stage 0 with a residual drawn from [0, CW_min)."""
    return SlotSimulator(config)


def run(config: SimConfig) -> SimMetrics:
    """Run one replication to completion."""
    return new_simulation(config).run()


def empirical_collision_length(metrics: SimMetrics) -> float:
    """Mean length of the recorded collision spans, in slots."""
    return metrics.mean_collision_length()
