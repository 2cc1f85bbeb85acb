"""Exception hierarchy shared by all modules."""
from __future__ import annotations


class PotbranchError(Exception):
    """Base class for every error raised by this package."""


class InvalidGraphError(PotbranchError, ValueError):
    """A graph, branching or potential system failed validation.

    The offending :class:`~potbranch.graph.Diagnostic` is kept on
    ``diagnostic``.
    """

    def __init__(self, diagnostic, message=None):
        self.diagnostic = diagnostic
        super().__init__(message or diagnostic.describe())


class DisconnectedGraphError(PotbranchError):
    """Raised with the component partition (and, from Prim, the unreached set)."""

    def __init__(self, components, message=None, unreached=None):
        self.components = [list(c) for c in components]
        self.unreached = sorted(unreached) if unreached is not None else None
        super().__init__(message or f"graph is disconnected: components {self.components}")


class InfeasibleError(PotbranchError):
    """No spanning in-branching exists for the requested root(s)."""

    def __init__(self, stranded, message=None):
        self.stranded = sorted(stranded)
        super().__init__(message or f"infeasible: vertices {self.stranded} cannot reach the root")


class InstanceTooLargeError(PotbranchError, ValueError):
    pass


class ConfigError(PotbranchError, ValueError):
    pass


class ParseError(PotbranchError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)
