"""
Experiment preset registry.
"""

import copy
import logging
from dataclasses import dataclass
from typing import Any, Callable, Dict

from ...domain.exceptions import ConfigurationError
from ..config.settings import Settings

logger = logging.getLogger(__name__)

PresetBuilder = Callable[[Settings], Dict[str, Any]]


@dataclass(frozen=True)
class Preset:
    """A named experiment: builder of the raw ExperimentSpec mapping."""
    name: str
    description: str
    builder: PresetBuilder


class PresetRegistry:
    """
    Registry of built-in experiments.

    Builders return plain mappings rather than validated specs so that
    scenario files and flags can be layered on top before validation.
    """

    def __init__(self):
        self._presets: Dict[str, Preset] = {}

    def register(self, name: str, builder: PresetBuilder, description: str = "") -> None:
        """
        Register a preset builder.

        Args:
            name: Unique preset name
            builder: Callable producing the ExperimentSpec mapping
            description: One-line summary shown by the CLI
        """
        if name in self._presets:
            raise ValueError(f"Preset already registered: {name}")
        self._presets[name] = Preset(name=name, description=description, builder=builder)
        logger.debug(f"📝 Registered preset: {name}")

    def build(self, name: str, settings: Settings) -> Dict[str, Any]:
        """
        Build the mapping of a preset.

        Raises:
            ConfigurationError: If the preset is not registered
        """
        if name not in self._presets:
            raise ConfigurationError(f"Unknown preset: {name}. Available: {sorted(self._presets)}")
        data = self._presets[name].builder(settings)
        data.setdefault("name", name)
        return copy.deepcopy(data)

    def list_presets(self) -> Dict[str, str]:
        """Map of preset name to description."""
        return {name: preset.description for name, preset in sorted(self._presets.items())}

    def is_registered(self, name: str) -> bool:
        return name in self._presets


# Global registry instance
preset_registry = PresetRegistry()


def register_preset(name: str, description: str = ""):
    """
    Decorator for registering preset builders.

    Usage:
        @register_preset("fig3", "Throughput against CW_min")
        def fig3(settings: Settings) -> Dict[str, Any]:
            ...
    """
    def decorator(builder: PresetBuilder) -> PresetBuilder:
        preset_registry.register(name, builder, description)
        return builder
    return decorator


def build_preset(name: str, settings: Settings) -> Dict[str, Any]:
    """Build a registered preset's mapping."""
    return preset_registry.build(name, settings)


def list_available_presets() -> Dict[str, str]:
    """List all available presets."""
    return preset_registry.list_presets()
