"""Result DTOs returned by the use cases."""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from ...domain.value_objects.analysis import FixedPointSolution, ThroughputReport
from ...domain.value_objects.protocol_params import ProtocolMode, ProtocolParams
from ...domain.value_objects.result_row import ResultRow


@dataclass
class AnalysisResult:
    """Analytic solution of a single scenario."""

    params: ProtocolParams
    solution: FixedPointSolution
    report: ThroughputReport
    extras: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary representation."""
        return {
            "params": self.params.to_dict(),
            "solution": self.solution.to_dict(),
            "report": self.report.to_dict(),
            **self.extras,
        }


@dataclass
class SweepResult:
    """Rows produced by a sweep and where they went."""

    name: str
    rows: List[ResultRow]
    output_path: Optional[Path] = None

    @property
    def failures(self) -> List[ResultRow]:
        return [row for row in self.rows if row.failed]

    @property
    def success(self) -> bool:
        return not self.failures


@dataclass
class ValidationPoint:
    """Analytic throughput against the simulated mean at one sweep point."""

    sweep_name: str
    sweep_value: Union[int, float]
    mode: ProtocolMode
    analytic: Optional[float]
    simulated: float
    stderr: Optional[float]
    tolerance: float
    error: Optional[str] = None

    @property
    def delta(self) -> Optional[float]:
        """Simulated minus analytic throughput."""
        if self.analytic is None:
            return None
        return self.simulated - self.analytic

    @property
    def passed(self) -> bool:
        return self.delta is not None and abs(self.delta) <= self.tolerance

    def to_dict(self) -> Dict[str, Any]:
        return {
            "sweep_name": self.sweep_name,
            "sweep_value": self.sweep_value,
            "mode": self.mode.value,
            "analytic": self.analytic,
            "simulated": self.simulated,
            "stderr": self.stderr,
            "delta": self.delta,
            "passed": self.passed,
            "error": self.error,
        }


@dataclass
class ValidationReport:
    """Per-point comparison of the analytic model with simulation."""

    name: str
    tolerance: float
    points: List[ValidationPoint] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return bool(self.points) and all(point.passed for point in self.points)

    @property
    def max_abs_delta(self) -> Optional[float]:
        deltas = [abs(p.delta) for p in self.points if p.delta is not None]
        return max(deltas) if deltas else None

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary representation."""
        return {
            "name": self.name,
            "tolerance": self.tolerance,
            "passed": self.passed,
            "max_abs_delta": self.max_abs_delta,
            "points": [point.to_dict() for point in self.points],
        }
