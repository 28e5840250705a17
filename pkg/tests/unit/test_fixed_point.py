"""Unit tests for the fixed-point solvers of both access schemes."""

import pytest

from core.domain.exceptions import InvalidArgumentError, SolverFailureError
from core.domain.services.backoff_chain import attempt_probability
from core.domain.services.csma_model import (
    conditional_collision_probability,
    csma_asymptotic_throughput,
    csma_solve,
    csma_throughput,
)
from core.domain.services.fixed_point import bisect_fixed_point, solve_fixed_point
from core.domain.services.performance import analyze, solve
from core.domain.services.success_model import success_probability
from core.domain.value_objects.protocol_params import ProtocolMode, ProtocolParams


class TestSolveFixedPoint:
    """Test the FD-MAC fixed point."""

    def test_converges(self, evaluation_params):
        """Test the solution is self-consistent within tolerance."""
        solution = solve_fixed_point(evaluation_params)

        assert 0.0 < solution.p_attempt < 1.0
        assert solution.residual <= 1e-10
        assert solution.iterations > 0
        assert solution.p_success == pytest.approx(success_probability(solution.p_attempt, evaluation_params))
        assert solution.p_attempt == pytest.approx(
            attempt_probability(solution.p_success, evaluation_params), abs=1e-10
        )

    def test_no_doubling(self):
        """Test W_max = 0 gives p = 2 / (CW_min + 1) whatever p_s."""
        params = ProtocolParams(cw_min=32, w_max=0)
        assert solve_fixed_point(params).p_attempt == pytest.approx(2.0 / 33.0, abs=1e-10)

    def test_single_user(self, single_user_params):
        """Test a lone user with a perfect detector always succeeds."""
        solution = solve_fixed_point(single_user_params)

        assert solution.p_success == pytest.approx(1.0)
        assert solution.p_attempt == pytest.approx(0.4, abs=1e-10)

    def test_reference_operating_point(self, fig3_params):
        """Test p and p_s at CW_min = 4, CW_max = 2^15."""
        solution = solve_fixed_point(fig3_params)

        assert 0.002 < solution.p_attempt < 0.0035
        assert 0.25 < solution.p_success < 0.35

    def test_requires_full_duplex(self, small_csma_params):
        """Test the FD solver rejects CSMA/CA params."""
        with pytest.raises(InvalidArgumentError):
            solve_fixed_point(small_csma_params)

    def test_iteration_cap(self, evaluation_params):
        """Test an exhausted iteration budget reports the last iterate."""
        with pytest.raises(SolverFailureError) as excinfo:
            solve_fixed_point(evaluation_params, max_iterations=3)

        assert excinfo.value.iterations <= 3
        assert excinfo.value.last_iterate is not None
        assert excinfo.value.residual > 1e-10

    def test_window_of_one(self):
        """Test the degenerate always-transmit window."""
        params = ProtocolParams(m_users=1, cw_min=1, w_max=0, p_false_alarm=0.0)
        solution = bisect_fixed_point(lambda p: success_probability(p, params), params)

        assert solution.p_attempt == 1.0
        assert solution.iterations == 0


class TestCsmaBaseline:
    """Test the blind CSMA/CA baseline."""

    def test_bianchi_equation(self, evaluation_params):
        """Test tau solves Bianchi's equation with p_c = 1 - (1 - tau)^(M-1)."""
        params = evaluation_params.with_mode(ProtocolMode.CSMA_CA)
        solution = csma_solve(params)
        p_c = conditional_collision_probability(solution.p_attempt, params)
        expected = 2 * (1 - 2 * p_c) / (
            (1 - 2 * p_c) * (params.cw_min + 1) + p_c * params.cw_min * (1 - (2 * p_c) ** params.w_max)
        )

        assert solution.p_attempt == pytest.approx(expected, abs=1e-9)
        assert solution.p_success == pytest.approx(1 - p_c)

    def test_single_user(self):
        """Test a lone CSMA/CA user never collides."""
        params = ProtocolParams(m_users=1, cw_min=8, w_max=5, mode=ProtocolMode.CSMA_CA)

        assert csma_solve(params).p_attempt == pytest.approx(2.0 / 9.0, abs=1e-10)

    def test_collisions_last_whole_packet(self, evaluation_params):
        """Test both cycle lengths equal L."""
        report = csma_throughput(evaluation_params.with_mode(ProtocolMode.CSMA_CA))

        assert report.len_success == 1000.0
        assert report.len_collision == 1000.0

    def test_asymptotic_limit(self):
        """Test very long packets approach P_s / (P_s + P_c)."""
        params = ProtocolParams(packet_len=10 ** 7, mode=ProtocolMode.CSMA_CA)
        limit = csma_asymptotic_throughput(params)

        assert csma_throughput(params).throughput == pytest.approx(limit, abs=1e-3)
        assert limit < 1.0

    def test_requires_csma(self, evaluation_params):
        """Test the baseline rejects full-duplex params."""
        with pytest.raises(InvalidArgumentError):
            csma_solve(evaluation_params)


class TestModeDispatch:
    """Test solve/analyze pick the scheme from the mode."""

    def test_dispatch(self, evaluation_params):
        """Test FD-MAC and CSMA/CA results differ and match their solvers."""
        fd_solution, fd_report = analyze(evaluation_params)
        csma_params = evaluation_params.with_mode(ProtocolMode.CSMA_CA)
        csma_solution, csma_report = analyze(csma_params)

        assert fd_solution == solve_fixed_point(evaluation_params)
        assert csma_solution == solve(csma_params)
        assert fd_report.throughput > csma_report.throughput
