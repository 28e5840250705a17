"""Experiment specification DTO - what a sweep or validation run covers."""

import json
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from ...domain.exceptions import ConfigurationError, InvalidArgumentError
from ...domain.value_objects.protocol_params import ProtocolMode, ProtocolParams
from ...domain.value_objects.result_row import Engine


class SweepVariable(Enum):
    """Scenario parameter a sweep varies."""
    CW_MIN = "cw_min"
    PACKET_LEN = "packet_len"
    USERS = "m_users"
    PF = "p_false_alarm"
    PM = "p_miss"

    @classmethod
    def _missing_(cls, value: object) -> Optional["SweepVariable"]:
        aliases = {"cwmin": cls.CW_MIN, "packetlen": cls.PACKET_LEN, "l": cls.PACKET_LEN,
                   "users": cls.USERS, "m": cls.USERS, "pf": cls.PF, "pm": cls.PM}
        if isinstance(value, str):
            return aliases.get(value.replace("_", "").lower())
        return None

    @property
    def is_integer(self) -> bool:
        return self in (SweepVariable.CW_MIN, SweepVariable.PACKET_LEN, SweepVariable.USERS)

    @property
    def label(self) -> str:
        return {
            SweepVariable.CW_MIN: "CW_min",
            SweepVariable.PACKET_LEN: "Packet length L (slots)",
            SweepVariable.USERS: "Users M",
            SweepVariable.PF: "False alarm probability P_f",
            SweepVariable.PM: "Miss detection probability P_m",
        }[self]


class ScenarioModel(BaseModel):
    """Scenario fields shared by every point of a sweep."""

    model_config = ConfigDict(extra="forbid")

    m_users: int = Field(default=100, ge=1)
    packet_len: int = Field(default=1000, ge=1)
    cw_min: int = Field(default=16, ge=1)
    w_max: int = Field(default=11, ge=0)
    p_false_alarm: float = Field(default=1e-3, ge=0.0, lt=1.0)
    p_miss: float = Field(default=1e-2, ge=0.0, lt=1.0)
    difs: int = Field(default=2, ge=1)


class SeriesModel(BaseModel):
    """A labelled curve: scenario fields overridden for every point of the sweep."""

    model_config = ConfigDict(extra="forbid")

    label: str = Field(min_length=1)
    overrides: Dict[str, Union[int, float]] = Field(default_factory=dict)

    @field_validator("overrides")
    @classmethod
    def _known_fields(cls, value: Dict[str, Union[int, float]]) -> Dict[str, Union[int, float]]:
        unknown = set(value) - set(ScenarioModel.model_fields)
        if unknown:
            raise ValueError(f"unknown scenario fields: {sorted(unknown)}")
        return value


@dataclass(frozen=True)
class SweepPoint:
    """One fully resolved scenario of a sweep."""

    sweep_name: str
    sweep_value: Union[int, float]
    mode: ProtocolMode
    params: ProtocolParams


class ExperimentSpec(BaseModel):
    """
    A sweep of one scenario parameter, evaluated analytically and/or by simulation.

    Loaded from a JSON document with the same field names; CLI flags and
    presets build the same model.
    """

    model_config = ConfigDict(extra="forbid")

    name: str = Field(default="custom", min_length=1)
    base: ScenarioModel = Field(default_factory=ScenarioModel)
    sweep_variable: SweepVariable = SweepVariable.CW_MIN
    sweep_values: List[float] = Field(default_factory=lambda: [16.0], min_length=1)
    cw_max: Optional[int] = Field(default=None, ge=1)
    series: List[SeriesModel] = Field(default_factory=list)
    modes: List[ProtocolMode] = Field(
        default_factory=lambda: [ProtocolMode.FULL_DUPLEX, ProtocolMode.CSMA_CA], min_length=1
    )
    engines: List[Engine] = Field(
        default_factory=lambda: [Engine.ANALYTIC, Engine.SIMULATION], min_length=1
    )
    replications: int = Field(default=5, ge=1)
    seed_base: int = Field(default=0, ge=0, le=2 ** 64 - 1)
    warmup_attempts: int = Field(default=10_000, ge=0)
    measure_attempts: int = Field(default=100_000, ge=1)
    output_path: str = "data/output/sweep.csv"

    @field_validator("sweep_variable", mode="before")
    @classmethod
    def _sweep_alias(cls, value: Any) -> Any:
        if isinstance(value, str):
            try:
                return SweepVariable(value)
            except ValueError:
                raise ValueError(
                    f"unknown sweep variable {value!r}; use one of {[v.value for v in SweepVariable]}"
                )
        return value

    @field_validator("sweep_values")
    @classmethod
    def _strictly_increasing(cls, values: List[float]) -> List[float]:
        if any(b <= a for a, b in zip(values, values[1:])):
            raise ValueError("sweep_values must be strictly increasing")
        return values

    @field_validator("modes", "engines")
    @classmethod
    def _distinct(cls, values: List[Enum]) -> List[Enum]:
        return list(dict.fromkeys(values))

    @model_validator(mode="after")
    def _resolvable(self) -> "ExperimentSpec":
        if self.sweep_variable.is_integer:
            fractional = [v for v in self.sweep_values if not float(v).is_integer()]
            if fractional:
                raise ValueError(f"{self.sweep_variable.value} values must be integers, got {fractional}")
        labels = [s.label for s in self.series]
        if len(set(labels)) != len(labels):
            raise ValueError("series labels must be unique")
        # Surfaces out-of-range scenarios as validation errors
        self.points()
        return self

    @classmethod
    def from_mapping(cls, data: Dict[str, Any]) -> "ExperimentSpec":
        """Validate a mapping, converting validation problems to ConfigurationError."""
        try:
            return cls.model_validate(data)
        except ValidationError as e:
            raise ConfigurationError(f"invalid experiment specification: {e}") from e

    @classmethod
    def load(cls, path: str) -> Dict[str, Any]:
        """Read a JSON scenario file as a raw mapping (validated later, after overrides)."""
        try:
            with open(Path(path), "r", encoding="utf-8") as f:
                data = json.load(f)
        except OSError as e:
            raise ConfigurationError(f"cannot read config file {path}: {e}") from e
        except json.JSONDecodeError as e:
            raise ConfigurationError(f"config file {path} is not valid JSON: {e}") from e
        if not isinstance(data, dict):
            raise ConfigurationError(f"config file {path} must hold a JSON object")
        return data

    def series_names(self) -> List[str]:
        if not self.series:
            return [self.name]
        return [f"{self.name}[{s.label}]" for s in self.series]

    def value_of(self, raw: float) -> Union[int, float]:
        return int(raw) if self.sweep_variable.is_integer else float(raw)

    def params_for(self, overrides: Dict[str, Any], raw_value: float, mode: ProtocolMode) -> ProtocolParams:
        """Scenario at one sweep value; with cw_max set, w_max follows from cw_min."""
        fields = {**self.base.model_dump(), **overrides}
        fields[self.sweep_variable.value] = self.value_of(raw_value)
        for name in ("m_users", "packet_len", "cw_min", "w_max", "difs"):
            fields[name] = int(fields[name])
        try:
            params = ProtocolParams(mode=mode, **fields)
            if self.cw_max is not None:
                params = params.with_cw_max(params.cw_min, self.cw_max)
        except InvalidArgumentError as e:
            raise ValueError(str(e)) from e
        return params

    def points(self) -> List[SweepPoint]:
        """Every (series, value, mode) scenario, in sweep order."""
        series = self.series or [SeriesModel(label=self.name)]
        points = []
        for name, curve in zip(self.series_names(), series):
            for raw in self.sweep_values:
                for mode in self.modes:
                    points.append(SweepPoint(
                        sweep_name=name,
                        sweep_value=self.value_of(raw),
                        mode=mode,
                        params=self.params_for(curve.overrides, raw, mode),
                    ))
        return points

    def to_dict(self) -> Dict[str, Any]:
        """JSON-ready representation."""
        return self.model_dump(mode="json")
