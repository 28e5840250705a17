"""Domain value objects."""

from .protocol_params import ProtocolParams, ProtocolMode
from .sim_config import SimConfig
from .analysis import FixedPointSolution, ThroughputReport, StationaryDistribution
from .replication_summary import ReplicationSummary
from .result_row import CSV_COLUMNS, Engine, ResultRow

__all__ = [
    "ProtocolParams",
    "ProtocolMode",
    "SimConfig",
    "FixedPointSolution",
    "ThroughputReport",
    "StationaryDistribution",
    "ReplicationSummary",
    "CSV_COLUMNS",
    "Engine",
    "ResultRow",
]
