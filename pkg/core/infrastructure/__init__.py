"""
Infrastructure layer - simulation, persistence and runtime services.

This layer contains:
- Simulation: slot-level simulator and replication runner
- Repository implementations: CSV results and gnuplot scripts
- Experiments: registry of built-in experiment presets
- Configuration and logging: settings and the structured run log
"""
