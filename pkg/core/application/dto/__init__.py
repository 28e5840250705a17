"""Data Transfer Objects for application layer."""

from .experiment_spec import ExperimentSpec, ScenarioModel, SeriesModel, SweepPoint, SweepVariable
from .run_results import AnalysisResult, SweepResult, ValidationPoint, ValidationReport

__all__ = [
    "ExperimentSpec",
    "ScenarioModel",
    "SeriesModel",
    "SweepPoint",
    "SweepVariable",
    "AnalysisResult",
    "SweepResult",
    "ValidationPoint",
    "ValidationReport",
]
