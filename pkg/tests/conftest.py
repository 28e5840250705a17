"""Pytest configuration and fixtures."""

import pytest
import tempfile
import shutil
from pathlib import Path

from core.domain.value_objects.protocol_params import ProtocolMode, ProtocolParams
from core.domain.value_objects.sim_config import SimConfig
from core.infrastructure.config.settings import Settings, get_settings


@pytest.fixture
def temp_dir():
    """Create a temporary directory for tests."""
    temp_path = tempfile.mkdtemp()
    yield Path(temp_path)
    shutil.rmtree(temp_path)


@pytest.fixture
def evaluation_params():
    """Scenario of the reference scenario at CW_min = 16, W_max = 11."""
    return ProtocolParams(
        m_users=100,
        packet_len=1000,
        cw_min=16,
        w_max=11,
        p_false_alarm=1e-3,
        p_miss=1e-2,
        difs=2,
    )


@pytest.fixture
def fig3_params():
    """Evaluation scenario with CW_min = 4 and CW_max = 2^15."""
    return ProtocolParams(cw_min=4, w_max=13)


@pytest.fixture
def single_user_params():
    """Lone user with a perfect detector."""
    return ProtocolParams(m_users=1, packet_len=10, cw_min=4, w_max=3, p_false_alarm=0.0, difs=2)


@pytest.fixture
def small_csma_params():
    """Small blind CSMA/CA scenario, quick to simulate."""
    return ProtocolParams(
        m_users=5, packet_len=20, cw_min=8, w_max=4, mode=ProtocolMode.CSMA_CA
    )


@pytest.fixture
def small_fd_params():
    """Small full-duplex scenario, quick to simulate."""
    return ProtocolParams(m_users=5, packet_len=20, cw_min=8, w_max=4, p_false_alarm=0.01, p_miss=0.1)


@pytest.fixture
def quick_config(small_fd_params):
    """Short simulation run."""
    return SimConfig(params=small_fd_params, seed=7, warmup_attempts=200, measure_attempts=2_000)


@pytest.fixture
def test_settings(temp_dir, monkeypatch):
    """Settings writing into a temporary directory, with short simulation runs."""
    monkeypatch.setenv("FDMAC_OUTPUT_DIR", str(temp_dir / "output"))
    monkeypatch.setenv("FDMAC_WARMUP_ATTEMPTS", "100")
    monkeypatch.setenv("FDMAC_MEASURE_ATTEMPTS", "1000")
    monkeypatch.setenv("FDMAC_REPLICATIONS", "2")
    monkeypatch.setenv("FDMAC_MAX_WORKERS", "1")
    get_settings.cache_clear()
    settings = get_settings()
    yield settings
    get_settings.cache_clear()


@pytest.fixture
def default_settings():
    """Settings built from defaults only, ignoring the environment and .env."""
    return Settings(_env_file=None)
