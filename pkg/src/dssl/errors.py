"""Exception taxonomy shared across the library.

The CLI maps these onto exit codes: I/O failures are 1, :class:`ConfigError`
is 2, data-shaped problems (:class:`DataError` and subclasses) are 3, and
:class:`NumericError` is 4.
"""


class DsslError(Exception):
    """Base class for all library errors."""


class ConfigError(DsslError):
    """Invalid configuration value or inconsistent model/checkpoint setup."""


class CheckpointError(ConfigError):
    """Checkpoint tensor set does not match the model configuration."""

    def __init__(self, message: str, tensor_name: str | None = None):
        super().__init__(message)
        self.tensor_name = tensor_name


class DataError(DsslError):
    """Malformed or inconsistent input data."""


class SchemaError(DataError):
    """Required column missing or unresolvable in a telemetry file."""


class WindowError(DataError):
    """A cycle is too short for the requested patch window."""


class DegeneracyError(DataError):
    """Spectrum has fewer local maxima than the requested mode count."""

    def __init__(self, message: str, n_found: int):
        super().__init__(message)
        self.n_found = n_found


class UndefinedCorrelationError(DataError):
    """Correlation undefined because one argument has zero variance."""


class DisconnectedGraphError(DataError):
    """Neighborhood graph splits into several components."""

    def __init__(self, message: str, component_sizes: tuple[int, ...]):
        super().__init__(message)
        self.component_sizes = component_sizes


class NumericError(DsslError):
    """Non-finite values where finite numbers are required."""
