"""
Core module of the FD-MAC saturation-throughput toolkit.

This module is organized in layers:
- domain: protocol model, analytical services and entities
- application: experiment use cases and DTOs
- infrastructure: simulator, configuration, logging and result persistence
"""
