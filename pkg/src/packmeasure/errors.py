"""Exception types raised across the package."""


class PackMeasureError(Exception):
    """Base class for all package errors."""


class GraphParseError(PackMeasureError, ValueError):
    def __init__(self, lineno, line, reason="expected two integer labels"):
        self.lineno = lineno
        self.line = line
        super().__init__(f"line {lineno}: {reason}: {line!r}")


class EmptyGraphError(PackMeasureError, ValueError):
    pass


class RequestError(PackMeasureError, ValueError):
    """Invalid parameters passed to a seed-selection or diffusion call."""


class SpecError(PackMeasureError, ValueError):
    """Invalid synthetic graph description."""


class ConfigError(PackMeasureError, ValueError):
    """Invalid or unreadable experiment configuration."""
