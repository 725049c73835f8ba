"""Exception hierarchy shared across the toolkit."""


class DiatomError(Exception):
    """Base class for all toolkit errors."""


class DomainError(DiatomError):
    """A physical input is outside its allowed domain (e.g. negative mass)."""


class DataError(DiatomError):
    """Supplied data is malformed (bad file, unordered points, out of range)."""


class ConfigError(DiatomError):
    """Bad configuration: unknown unit, unknown option, malformed config file."""


class AnalysisError(DiatomError):
    """The requested analysis is undefined for this input (e.g. no potential well)."""


class NumericalError(DiatomError):
    """A numerical procedure failed to converge."""


class NotFoundError(DiatomError):
    """A named resource (preset, vibrational level) does not exist."""
