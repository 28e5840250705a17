"""Structured log of sweep and validation runs."""

import json
import logging
import time
from dataclasses import dataclass, field
from datetime import datetime, timezone
from enum import Enum
from typing import Any, Dict, List, Optional
from uuid import uuid4


class LogLevel(Enum):
    """Log levels for run events."""
    DEBUG = "DEBUG"
    INFO = "INFO"
    WARNING = "WARNING"
    ERROR = "ERROR"


class RunEventType(Enum):
    """Kinds of events recorded during an experiment."""
    RUN_START = "run_start"
    RUN_END = "run_end"
    POINT_SOLVED = "point_solved"
    POINT_SIMULATED = "point_simulated"
    SOLVER_FAILURE = "solver_failure"
    VALIDATION_CHECK = "validation_check"
    OUTPUT_WRITTEN = "output_written"


@dataclass
class RunLogEntry:
    """Structured log entry for one experiment event."""
    id: str = field(default_factory=lambda: str(uuid4()))
    timestamp: datetime = field(default_factory=lambda: datetime.now(timezone.utc))
    event_type: RunEventType = RunEventType.RUN_START
    level: LogLevel = LogLevel.INFO
    run_id: Optional[str] = None
    sweep_name: Optional[str] = None
    sweep_value: Optional[float] = None
    mode: Optional[str] = None
    engine: Optional[str] = None
    message: str = ""
    data: Dict[str, Any] = field(default_factory=dict)
    duration_ms: Optional[float] = None

    def to_dict(self) -> Dict[str, Any]:
        """Convert log entry to dictionary."""
        return {
            "id": self.id,
            "timestamp": self.timestamp.isoformat(),
            "event_type": self.event_type.value,
            "level": self.level.value,
            "run_id": self.run_id,
            "sweep_name": self.sweep_name,
            "sweep_value": self.sweep_value,
            "mode": self.mode,
            "engine": self.engine,
            "message": self.message,
            "data": self.data,
            "duration_ms": self.duration_ms,
        }


class RunLogger:
    """Collects run events and forwards them to the standard logger."""

    def __init__(self, name: str = "fdmac.runs"):
        self.name = name
        self.logger = logging.getLogger(name)
        self.entries: List[RunLogEntry] = []
        self.active_runs: Dict[str, Dict[str, Any]] = {}

    def start_run(self, kind: str, sweep_name: str, points: int) -> str:
        """Open a sweep or validation run; returns its id."""
        run_id = str(uuid4())
        self.active_runs[run_id] = {
            "kind": kind,
            "sweep_name": sweep_name,
            "start_time": time.time(),
            "failures": 0,
        }
        self._log_entry(RunLogEntry(
            event_type=RunEventType.RUN_START,
            run_id=run_id,
            sweep_name=sweep_name,
            message=f"{kind} started: {sweep_name} ({points} points)",
            data={"kind": kind, "points": points},
        ))
        return run_id

    def end_run(self, run_id: str, rows: int) -> None:
        run = self.active_runs.pop(run_id, None)
        if run is None:
            return
        failed = run["failures"] > 0
        self._log_entry(RunLogEntry(
            event_type=RunEventType.RUN_END,
            level=LogLevel.WARNING if failed else LogLevel.INFO,
            run_id=run_id,
            sweep_name=run["sweep_name"],
            message=f"{run['kind']} finished: {rows} rows, {run['failures']} failures",
            data={"rows": rows, "failures": run["failures"]},
            duration_ms=(time.time() - run["start_time"]) * 1000,
        ))

    def log_solved(
        self,
        run_id: str,
        sweep_name: str,
        sweep_value: float,
        mode: str,
        throughput: float,
        iterations: int,
        residual: float,
    ) -> None:
        self._log_entry(RunLogEntry(
            event_type=RunEventType.POINT_SOLVED,
            level=LogLevel.DEBUG,
            run_id=run_id,
            sweep_name=sweep_name,
            sweep_value=sweep_value,
            mode=mode,
            engine="analytic",
            message=f"C={throughput:.6f} after {iterations} iterations",
            data={"throughput": throughput, "iterations": iterations, "residual": residual},
        ))

    def log_simulated(
        self,
        run_id: str,
        sweep_name: str,
        sweep_value: float,
        mode: str,
        mean: float,
        stderr: Optional[float],
        replications: int,
        duration_ms: float,
    ) -> None:
        spread = f" ± {stderr:.6f}" if stderr is not None else ""
        self._log_entry(RunLogEntry(
            event_type=RunEventType.POINT_SIMULATED,
            run_id=run_id,
            sweep_name=sweep_name,
            sweep_value=sweep_value,
            mode=mode,
            engine="sim",
            message=f"C≈{mean:.6f}{spread} over {replications} replications",
            data={"mean": mean, "stderr": stderr, "replications": replications},
            duration_ms=duration_ms,
        ))

    def log_solver_failure(
        self,
        run_id: str,
        sweep_name: str,
        sweep_value: float,
        mode: str,
        error: Exception,
    ) -> None:
        if run_id in self.active_runs:
            self.active_runs[run_id]["failures"] += 1
        self._log_entry(RunLogEntry(
            event_type=RunEventType.SOLVER_FAILURE,
            level=LogLevel.ERROR,
            run_id=run_id,
            sweep_name=sweep_name,
            sweep_value=sweep_value,
            mode=mode,
            engine="analytic",
            message=f"{type(error).__name__}: {error}",
            data={
                "last_iterate": getattr(error, "last_iterate", None),
                "iterations": getattr(error, "iterations", None),
                "residual": getattr(error, "residual", None),
            },
        ))

    def log_validation(
        self,
        run_id: str,
        sweep_name: str,
        sweep_value: float,
        mode: str,
        delta: float,
        tolerance: float,
    ) -> None:
        passed = abs(delta) <= tolerance
        if not passed and run_id in self.active_runs:
            self.active_runs[run_id]["failures"] += 1
        self._log_entry(RunLogEntry(
            event_type=RunEventType.VALIDATION_CHECK,
            level=LogLevel.INFO if passed else LogLevel.WARNING,
            run_id=run_id,
            sweep_name=sweep_name,
            sweep_value=sweep_value,
            mode=mode,
            message=f"|Δ|={abs(delta):.6f} {'≤' if passed else '>'} {tolerance}",
            data={"delta": delta, "tolerance": tolerance, "passed": passed},
        ))

    def log_output(self, run_id: str, path: str, rows: int) -> None:
        self._log_entry(RunLogEntry(
            event_type=RunEventType.OUTPUT_WRITTEN,
            run_id=run_id,
            message=f"wrote {rows} rows to {path}",
            data={"path": path, "rows": rows},
        ))

    def _log_entry(self, entry: RunLogEntry) -> None:
        """Internal method to log an entry."""
        self.entries.append(entry)

        prefix = self._get_event_prefix(entry.event_type)
        point = ""
        if entry.sweep_value is not None:
            point = f"[{entry.sweep_name}={entry.sweep_value:g}|{entry.mode}|{entry.engine}] "
        self.logger.log(logging.getLevelName(entry.level.value), f"{prefix} {point}{entry.message}")

    def _get_event_prefix(self, event_type: RunEventType) -> str:
        """Get emoji prefix for event type."""
        prefixes = {
            RunEventType.RUN_START: "🚀",
            RunEventType.RUN_END: "🏁",
            RunEventType.POINT_SOLVED: "📐",
            RunEventType.POINT_SIMULATED: "🎲",
            RunEventType.SOLVER_FAILURE: "❌",
            RunEventType.VALIDATION_CHECK: "🔍",
            RunEventType.OUTPUT_WRITTEN: "💾",
        }
        return prefixes.get(event_type, "ℹ️")

    def export_logs(self, format: str = "json") -> str:
        """Export all logs in specified format."""
        if format == "json":
            return json.dumps([entry.to_dict() for entry in self.entries], indent=2)
        return "\n".join(f"{entry.timestamp.isoformat()} | {entry.message}" for entry in self.entries)

    def clear(self) -> None:
        self.entries.clear()
        self.active_runs.clear()


# Global logger instance
run_logger = RunLogger()
