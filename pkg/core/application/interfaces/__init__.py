"""Application interfaces for external services."""

from .simulation_engine import SimulationEngine

__all__ = ["SimulationEngine"]
