"""Unit tests for experiment specifications and presets."""

import json

import pytest

from core.application.dto.experiment_spec import ExperimentSpec, SweepVariable
from core.domain.exceptions import ConfigurationError
from core.domain.value_objects.protocol_params import ProtocolMode
from core.domain.value_objects.result_row import Engine
from core.infrastructure.experiments import build_preset, list_available_presets
from core.infrastructure.experiments.registry import PresetRegistry, register_preset, preset_registry


class TestExperimentSpec:
    """Test ExperimentSpec validation and expansion."""

    def test_defaults(self):
        """Test a minimal spec expands to both modes."""
        spec = ExperimentSpec.from_mapping({"sweep_values": [8, 16]})

        points = spec.points()
        assert len(points) == 4
        assert {p.mode for p in points} == {ProtocolMode.FULL_DUPLEX, ProtocolMode.CSMA_CA}
        assert [p.params.cw_min for p in points] == [8, 8, 16, 16]
        assert spec.engines == [Engine.ANALYTIC, Engine.SIMULATION]

    @pytest.mark.parametrize("alias,variable", [
        ("cwmin", SweepVariable.CW_MIN),
        ("L", SweepVariable.PACKET_LEN),
        ("users", SweepVariable.USERS),
        ("pf", SweepVariable.PF),
        ("Pm", SweepVariable.PM),
        ("packet_len", SweepVariable.PACKET_LEN),
    ])
    def test_sweep_aliases(self, alias, variable):
        """Test short names of sweep variables."""
        spec = ExperimentSpec.from_mapping({"sweep_variable": alias, "sweep_values": [1, 2]})
        assert spec.sweep_variable is variable

    @pytest.mark.parametrize("data", [
        {"sweep_values": [16, 8]},
        {"sweep_values": [16, 16]},
        {"sweep_values": []},
        {"engines": []},
        {"modes": []},
        {"replications": 0},
        {"sweep_variable": "bogus"},
        {"sweep_values": [1.5], "sweep_variable": "cw_min"},
        {"base": {"m_users": 0}},
        {"base": {"unknown": 1}},
        {"sweep_variable": "m_users", "sweep_values": [0, 5]},
        {"cw_max": 100, "sweep_values": [16]},
        {"series": [{"label": "a"}, {"label": "a"}]},
        {"series": [{"label": "a", "overrides": {"nope": 1}}]},
    ])
    def test_invalid_specs(self, data):
        """Test invalid specifications raise ConfigurationError."""
        with pytest.raises(ConfigurationError):
            ExperimentSpec.from_mapping(data)

    def test_cw_max_sets_stage_limit(self):
        """Test a fixed CW_max derives W_max per sweep value."""
        spec = ExperimentSpec.from_mapping({"sweep_values": [4, 128, 1024], "cw_max": 2 ** 15, "modes": ["fd"]})

        assert [p.params.w_max for p in spec.points()] == [13, 8, 5]

    def test_series(self):
        """Test each series overrides the base and is named after its label."""
        spec = ExperimentSpec.from_mapping({
            "name": "len",
            "sweep_variable": "packet_len",
            "sweep_values": [10, 100],
            "modes": ["fd"],
            "series": [{"label": "w2", "overrides": {"w_max": 2}}, {"label": "w8", "overrides": {"w_max": 8}}],
        })

        points = spec.points()
        assert spec.series_names() == ["len[w2]", "len[w8]"]
        assert [(p.sweep_name, p.sweep_value, p.params.w_max) for p in points] == [
            ("len[w2]", 10, 2), ("len[w2]", 100, 2), ("len[w8]", 10, 8), ("len[w8]", 100, 8)
        ]
        assert all(isinstance(p.sweep_value, int) for p in points)

    def test_probability_sweep(self):
        """Test probability sweeps keep float values."""
        spec = ExperimentSpec.from_mapping({"sweep_variable": "p_miss", "sweep_values": [0.001, 0.1], "modes": ["fd"]})

        assert [p.params.p_miss for p in spec.points()] == [0.001, 0.1]

    def test_load(self, temp_dir):
        """Test loading a scenario file as a raw mapping."""
        path = temp_dir / "scenario.json"
        path.write_text(json.dumps({"name": "mine", "sweep_values": [4]}), encoding="utf-8")

        assert ExperimentSpec.load(str(path)) == {"name": "mine", "sweep_values": [4]}

    @pytest.mark.parametrize("content", ["{not json", "[1, 2]"])
    def test_load_invalid(self, temp_dir, content):
        """Test unreadable scenario files raise ConfigurationError."""
        path = temp_dir / "scenario.json"
        path.write_text(content, encoding="utf-8")

        with pytest.raises(ConfigurationError):
            ExperimentSpec.load(str(path))

    def test_load_missing(self, temp_dir):
        """Test a missing scenario file raises ConfigurationError."""
        with pytest.raises(ConfigurationError):
            ExperimentSpec.load(str(temp_dir / "absent.json"))

    def test_spec_serialization(self):
        """Test the JSON form validates back to the same spec."""
        original = ExperimentSpec.from_mapping({"sweep_variable": "pf", "sweep_values": [1e-4, 1e-3]})

        assert ExperimentSpec.from_mapping(original.to_dict()) == original


class TestPresetRegistry:
    """Test the preset registry."""

    def test_builtin_presets(self):
        """Test the built-in experiments are registered."""
        presets = list_available_presets()

        assert {"fig3", "fig4", "users", "miss"} <= set(presets)
        assert all(presets.values())

    @pytest.mark.parametrize("name", ["fig3", "fig4", "users", "miss"])
    def test_presets_validate(self, name, default_settings):
        """Test every preset builds a valid spec."""
        spec = ExperimentSpec.from_mapping(build_preset(name, default_settings))

        assert spec.name == name
        assert spec.output_path.endswith(f"{name}.csv")
        assert spec.points()

    def test_fig3_preset(self, default_settings):
        """Test the window sweep of the reference scenario."""
        spec = ExperimentSpec.from_mapping(build_preset("fig3", default_settings))

        assert spec.sweep_values == [2.0 ** k for k in range(2, 11)]
        assert all(p.params.cw_max == 2 ** 15 for p in spec.points())
        assert set(spec.engines) == {Engine.ANALYTIC, Engine.SIMULATION}
        assert spec.base.m_users == 100 and spec.base.packet_len == 1000

    def test_fig4_preset(self, default_settings):
        """Test the packet-length sweep of the reference scenario."""
        spec = ExperimentSpec.from_mapping(build_preset("fig4", default_settings))

        assert spec.sweep_variable is SweepVariable.PACKET_LEN
        assert sorted({p.params.cw_max for p in spec.points()}) == [2 ** 6, 2 ** 7, 2 ** 12, 2 ** 15]
        assert spec.engines == [Engine.ANALYTIC]

    def test_presets_follow_settings(self, test_settings):
        """Test run lengths and output directory come from settings."""
        data = build_preset("fig3", test_settings)

        assert data["measure_attempts"] == 1000
        assert data["replications"] == 2
        assert data["output_path"] == f"{test_settings.output_dir}/fig3.csv"

    def test_unknown_preset(self, default_settings):
        """Test unknown presets raise ConfigurationError."""
        with pytest.raises(ConfigurationError):
            build_preset("fig9", default_settings)

    def test_build_returns_copies(self, default_settings):
        """Test callers cannot alter a preset through the returned mapping."""
        first = build_preset("fig4", default_settings)
        first["base"]["m_users"] = 3

        assert build_preset("fig4", default_settings)["base"]["m_users"] == 100

    def test_register_decorator(self, default_settings):
        """Test registering a new preset through the decorator."""
        registry = PresetRegistry()
        registry.register("tiny", lambda settings: {"sweep_values": [8]}, "Tiny sweep")

        assert registry.is_registered("tiny")
        assert registry.build("tiny", default_settings) == {"sweep_values": [8], "name": "tiny"}
        with pytest.raises(ValueError):
            registry.register("tiny", lambda settings: {}, "again")

    def test_global_decorator(self, default_settings):
        """Test the decorator registers into the global registry."""
        name = "decorated-test-preset"
        if not preset_registry.is_registered(name):
            @register_preset(name, "Decorated")
            def decorated(settings):
                return {"sweep_values": [2, 4]}

        assert build_preset(name, default_settings)["name"] == name
