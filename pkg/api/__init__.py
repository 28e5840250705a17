"""
API layer - Interface adapters for external communication.

This layer contains:
- CLI: the fdmac command line interface
"""
