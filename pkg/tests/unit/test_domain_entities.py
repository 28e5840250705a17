"""Unit tests for domain entities."""

import pytest

from core.domain.entities.sim_metrics import SimMetrics
from core.domain.entities.user_state import UserPhase, UserState
from core.domain.exceptions import UndefinedQuantityError


class TestUserState:
    """Test UserState entity."""

    def test_user_creation(self):
        """Test a fresh user waits for DIFS at stage 0."""
        user = UserState(backoff_residual=5)

        assert user.phase == UserPhase.WAITING_DIFS
        assert user.stage == 0
        assert user.difs_progress == 0
        assert not user.is_transmitting
        assert user.idle_slots_to_access(2) == 7

    def test_countdown_after_difs(self):
        """Test an idle slot decrements the residual once DIFS is satisfied."""
        user = UserState(backoff_residual=3, difs_progress=2, phase=UserPhase.BACKOFF)

        assert user.sense_idle(difs=2) is False
        assert user.backoff_residual == 2
        assert user.phase == UserPhase.BACKOFF

    def test_difs_before_countdown(self):
        """Test idle slots first complete DIFS, then count down."""
        user = UserState(backoff_residual=3)

        user.sense_idle(difs=2)
        assert user.difs_progress == 1
        assert user.backoff_residual == 3
        assert user.phase == UserPhase.WAITING_DIFS

        user.sense_idle(difs=2)
        assert user.difs_progress == 2
        assert user.backoff_residual == 3
        assert user.phase == UserPhase.BACKOFF

        user.sense_idle(difs=2)
        assert user.backoff_residual == 2

    def test_zero_residual_transmits_after_difs(self):
        """Test a zero backoff starts transmission right after DIFS."""
        user = UserState(backoff_residual=0)

        assert user.sense_idle(difs=2) is False
        assert user.sense_idle(difs=2) is True
        assert user.is_transmitting
        assert user.tx_elapsed == 0

    def test_busy_slot_rearms_difs(self):
        """Test a busy slot resets DIFS progress and freezes the residual."""
        user = UserState(backoff_residual=4, difs_progress=2, phase=UserPhase.BACKOFF)
        user.sense_idle(difs=2)

        user.sense_busy()

        assert user.difs_progress == 0
        assert user.backoff_residual == 3
        assert user.phase == UserPhase.WAITING_DIFS

    def test_skip_many_idle_slots(self):
        """Test skipping a run of idle slots equals sensing them one at a time."""
        stepped = UserState(backoff_residual=6, difs_progress=1)
        jumped = UserState(backoff_residual=6, difs_progress=1)

        for _ in range(4):
            stepped.sense_idle(difs=3)
        jumped.sense_idle(difs=3, slots=4)

        assert jumped.to_dict() == stepped.to_dict()

    def test_cannot_skip_past_access(self):
        """Test skipping beyond the access instant is rejected."""
        user = UserState(backoff_residual=1)

        with pytest.raises(ValueError):
            user.sense_idle(difs=2, slots=4)

    def test_transmission_flow(self):
        """Test transmitting, then finishing resets the stage."""
        user = UserState(stage=3)
        user.begin_transmission()

        assert user.transmit_slot() == 1
        assert user.transmit_slots(9) == 10

        user.finish(residual=2)
        assert user.stage == 0
        assert user.backoff_residual == 2
        assert user.tx_elapsed == 0
        assert user.phase == UserPhase.WAITING_DIFS

    def test_back_off_caps_stage(self):
        """Test aborting increments the stage up to the limit."""
        user = UserState(stage=2)
        user.begin_transmission()
        user.back_off(w_max=3, residual=5)
        assert user.stage == 3

        user.begin_transmission()
        user.back_off(w_max=3, residual=5)
        assert user.stage == 3

    def test_overlap_marks_collision(self):
        """Test an overlapped slot marks the packet as collided until the next start."""
        user = UserState()
        user.begin_transmission()

        user.transmit_slot(overlapped=True)
        user.transmit_slot()
        assert user.collided

        user.back_off(w_max=2, residual=0)
        user.begin_transmission()
        assert not user.collided

    def test_invalid_transitions(self):
        """Test transitions that the phase does not allow."""
        idle = UserState()
        with pytest.raises(ValueError):
            idle.transmit_slot()
        with pytest.raises(ValueError):
            idle.finish(residual=0)

        sending = UserState()
        sending.begin_transmission()
        with pytest.raises(ValueError):
            sending.sense_busy()
        with pytest.raises(ValueError):
            sending.sense_idle(difs=2)
        with pytest.raises(ValueError):
            sending.back_off(w_max=2, residual=-1)


class TestSimMetrics:
    """Test SimMetrics entity."""

    def test_slot_classification(self):
        """Test slots are counted by transmitter count."""
        metrics = SimMetrics()
        metrics.record_slots(0, 5)
        metrics.record_slots(1, 10)
        metrics.record_slots(2)
        metrics.record_slots(4)

        assert metrics.total_slots == 17
        assert metrics.idle_slots == 5
        assert metrics.single_tx_slots == 10
        assert metrics.collision_slots == 2
        assert metrics.is_consistent()
        assert metrics.throughput_estimate == pytest.approx(10 / 17)

    def test_empty_metrics(self):
        """Test ratios of an empty window."""
        metrics = SimMetrics()

        assert metrics.throughput_estimate == 0.0
        assert metrics.perceived_success_ratio == 0.0
        with pytest.raises(UndefinedQuantityError):
            metrics.mean_collision_length()

    def test_collision_lengths(self):
        """Test the mean of the collision span histogram."""
        metrics = SimMetrics()
        for length in (1, 1, 1, 3):
            metrics.record_collision_span(length)

        assert metrics.collision_events == 4
        assert metrics.mean_collision_length() == pytest.approx(1.5)

    def test_reset(self):
        """Test reset discards every counter."""
        metrics = SimMetrics(attempts=4, perceived_successes=3)
        metrics.record_slots(1, 7)
        metrics.record_collision_span(2)

        metrics.reset()

        assert metrics.to_dict() == SimMetrics().to_dict()

    def test_metrics_serialization(self):
        """Test metrics to/from dict conversion."""
        original = SimMetrics(attempts=12, perceived_successes=9, false_alarm_truncations=2)
        original.record_slots(0, 3)
        original.record_slots(1, 20)
        original.record_collision_span(1)
        original.record_collision_span(2)

        data = original.to_dict()
        restored = SimMetrics.from_dict(data)

        assert data["collision_abort_lengths"] == {"1": 1, "2": 1}
        assert restored == original
