"""
Domain layer - the FD-MAC model itself.

This layer contains:
- Entities: per-user MAC state and simulation counters
- Value Objects: scenario parameters, simulation config, analysis results
- Repository Interfaces: contracts for persisting sweep results
- Domain Services: the analytical throughput model and its fixed-point solver
"""
