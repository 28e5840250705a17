"""Domain exceptions for the FD-MAC model and simulator."""

from typing import Optional


class FdMacError(Exception):
    """Base class for every error raised by the model or the simulator."""


class InvalidArgumentError(FdMacError, ValueError):
    """An argument is outside the range an operation accepts."""


class ConfigurationError(FdMacError, ValueError):
    """A scenario, simulation or experiment configuration is invalid."""


class ModelDomainError(FdMacError, ArithmeticError):
    """A model quantity left its physical range."""

    def __init__(self, message: str, raw_value: float):
        super().__init__(f"{message} (raw value: {raw_value!r})")
        self.raw_value = raw_value


class UndefinedQuantityError(FdMacError, ArithmeticError):
    """A ratio is requested whose denominator is zero (e.g. L_c with no collisions)."""


class SolverFailureError(FdMacError, RuntimeError):
    """The fixed-point solver did not converge."""

    def __init__(
        self,
        message: str,
        last_iterate: Optional[float] = None,
        iterations: int = 0,
        residual: Optional[float] = None,
    ):
        super().__init__(message)
        self.last_iterate = last_iterate
        self.iterations = iterations
        self.residual = residual


class SimulationStallError(FdMacError, RuntimeError):
    """The simulator ran too long without any transmission attempt."""
