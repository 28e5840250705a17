"""Result row value object - one line of a sweep's output table."""

from dataclasses import dataclass, fields
from enum import Enum
from typing import Any, Dict, Optional, Tuple, Union

from ..exceptions import InvalidArgumentError
from .protocol_params import ProtocolMode

CSV_COLUMNS: Tuple[str, ...] = (
    "sweep_name",
    "sweep_value",
    "mode",
    "engine",
    "replication",
    "throughput",
    "stderr",
    "p_empty",
    "p_success",
    "p_collision",
    "len_success",
    "len_collision",
    "p_attempt",
    "p_s",
    "seed",
)

AGGREGATE_REPLICATION = "mean"


class Engine(Enum):
    """How a throughput figure was obtained."""
    ANALYTIC = "analytic"
    SIMULATION = "sim"


def _format(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, Enum):
        return str(value.value)
    if isinstance(value, float):
        return repr(value)
    return str(value)


@dataclass(frozen=True)
class ResultRow:
    """
    One (sweep point, engine, mode) result.

    Analytic rows carry the full throughput report and solver diagnostics;
    simulation rows carry the mean over replications (replication "mean") or a
    single replication (replication index) with the empirical p_s and L_c.
    A row whose analysis failed has throughput None and an error message.
    """

    sweep_name: str
    sweep_value: Union[int, float]
    mode: ProtocolMode
    engine: Engine
    replication: Optional[Union[int, str]] = None
    throughput: Optional[float] = None
    stderr: Optional[float] = None
    p_empty: Optional[float] = None
    p_success: Optional[float] = None
    p_collision: Optional[float] = None
    len_success: Optional[float] = None
    len_collision: Optional[float] = None
    p_attempt: Optional[float] = None
    p_s: Optional[float] = None
    seed: Optional[int] = None
    iterations: Optional[int] = None
    residual: Optional[float] = None
    error: Optional[str] = None

    def __post_init__(self) -> None:
        """Validate row after initialization."""
        if self.throughput is not None and not 0.0 <= self.throughput <= 1.0:
            raise InvalidArgumentError(f"throughput must be in [0, 1], got {self.throughput}")
        if self.throughput is None and self.error is None:
            raise InvalidArgumentError("a row without throughput must carry an error")

    @property
    def failed(self) -> bool:
        return self.error is not None

    def sort_key(self) -> Tuple:
        """Order: sweep name, sweep value, engine, mode, then aggregate before replications."""
        if isinstance(self.replication, int):
            replication = (1, self.replication)
        else:
            replication = (0, 0)
        return (self.sweep_name, self.sweep_value, self.engine.value, self.mode.value, replication)

    def to_record(self) -> Dict[str, str]:
        """CSV record: every column rendered as text, missing values empty."""
        return {column: _format(getattr(self, column)) for column in CSV_COLUMNS}

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary representation."""
        data = {f.name: getattr(self, f.name) for f in fields(self)}
        data["mode"] = self.mode.value
        data["engine"] = self.engine.value
        return data
