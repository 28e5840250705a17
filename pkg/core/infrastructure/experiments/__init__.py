"""Experiment presets; importing this package registers the built-in ones."""

from . import presets  # noqa: F401
from .registry import build_preset, list_available_presets, preset_registry, register_preset

__all__ = ["build_preset", "list_available_presets", "preset_registry", "register_preset"]
