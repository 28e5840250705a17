"""Application use cases."""

from .analyze_scenario import AnalyzeScenarioUseCase
from .run_sweep import RunSweepUseCase
from .validate_model import ValidateModelUseCase

__all__ = ["AnalyzeScenarioUseCase", "RunSweepUseCase", "ValidateModelUseCase"]
