"""Exception types shared across the package."""


class KGraphError(ValueError):
    """Base class for all errors raised by kgraph."""


class InputError(KGraphError):
    """An argument is malformed for the hypergraph it is evaluated against."""


class ParameterError(KGraphError):
    """Construction parameters violate a precondition."""


class SizeError(KGraphError):
    """A request would exceed a configured size or enumeration budget."""


class ParseError(KGraphError):
    """Malformed edge-list text. Carries 1-based line and column."""

    def __init__(self, message, line, column=1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
