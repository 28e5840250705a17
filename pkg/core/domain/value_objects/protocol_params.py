"""Protocol parameters value object."""

from dataclasses import dataclass, replace
from enum import Enum
from typing import Any, Dict

from ..exceptions import InvalidArgumentError

# Window sizes are drawn as signed 64-bit integers by the simulator.
MAX_WINDOW = 2 ** 62


class ProtocolMode(Enum):
    """Medium access scheme."""
    FULL_DUPLEX = "fd"
    CSMA_CA = "csma"


@dataclass(frozen=True)
class ProtocolParams:
    """
    Immutable description of a contention scenario.

    All durations are expressed in slots, so the slot length is the time unit.
    The contention window at stage W is 2^W * cw_min, capped at stage w_max.
    """

    m_users: int = 100
    packet_len: int = 1000
    cw_min: int = 16
    w_max: int = 11
    p_false_alarm: float = 1e-3
    p_miss: float = 1e-2
    difs: int = 2
    mode: ProtocolMode = ProtocolMode.FULL_DUPLEX

    def __post_init__(self) -> None:
        """Validate parameters after initialization."""
        for name in ("m_users", "packet_len", "cw_min", "difs"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise InvalidArgumentError(f"{name} must be a positive integer, got {value!r}")

        if isinstance(self.w_max, bool) or not isinstance(self.w_max, int) or self.w_max < 0:
            raise InvalidArgumentError(f"w_max must be a non-negative integer, got {self.w_max!r}")

        if not 0.0 <= self.p_false_alarm < 1.0:
            raise InvalidArgumentError(f"p_false_alarm must be in [0, 1), got {self.p_false_alarm}")
        if not 0.0 <= self.p_miss < 1.0:
            raise InvalidArgumentError(f"p_miss must be in [0, 1), got {self.p_miss}")

        if self.cw_min * 2 ** self.w_max > MAX_WINDOW:
            raise InvalidArgumentError(
                f"cw_min * 2^w_max = {self.cw_min} * 2^{self.w_max} overflows the window width"
            )

        if not isinstance(self.mode, ProtocolMode):
            object.__setattr__(self, "mode", ProtocolMode(self.mode))

    @property
    def cw_max(self) -> int:
        """Largest contention window, cw_min * 2^w_max."""
        return self.cw_min << self.w_max

    @property
    def is_full_duplex(self) -> bool:
        return self.mode is ProtocolMode.FULL_DUPLEX

    def with_mode(self, mode: ProtocolMode) -> "ProtocolParams":
        """Create new params with a different access scheme."""
        return replace(self, mode=mode)

    def with_cw_max(self, cw_min: int, cw_max: int) -> "ProtocolParams":
        """Create new params for a given (cw_min, cw_max) pair, both powers-of-two apart."""
        if cw_max < cw_min or cw_max % cw_min or (cw_max // cw_min) & (cw_max // cw_min - 1):
            raise InvalidArgumentError(
                f"cw_max ({cw_max}) must be cw_min ({cw_min}) times a power of two"
            )
        return replace(self, cw_min=cw_min, w_max=(cw_max // cw_min).bit_length() - 1)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary representation."""
        return {
            "m_users": self.m_users,
            "packet_len": self.packet_len,
            "cw_min": self.cw_min,
            "w_max": self.w_max,
            "p_false_alarm": self.p_false_alarm,
            "p_miss": self.p_miss,
            "difs": self.difs,
            "mode": self.mode.value,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ProtocolParams":
        """Create from dictionary representation."""
        defaults = cls()
        return cls(
            m_users=int(data.get("m_users", defaults.m_users)),
            packet_len=int(data.get("packet_len", defaults.packet_len)),
            cw_min=int(data.get("cw_min", defaults.cw_min)),
            w_max=int(data.get("w_max", defaults.w_max)),
            p_false_alarm=float(data.get("p_false_alarm", defaults.p_false_alarm)),
            p_miss=float(data.get("p_miss", defaults.p_miss)),
            difs=int(data.get("difs", defaults.difs)),
            mode=ProtocolMode(data.get("mode", defaults.mode.value)),
        )
