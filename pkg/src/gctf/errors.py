"""Exception taxonomy shared across the package.

The CLI maps these onto exit codes: config/usage problems -> 1,
data problems (files, shapes, validation) -> 2, numerical failures -> 3.
"""


class GctfError(Exception):
    """Base class for all package-specific errors."""


class ShapeError(GctfError, ValueError):
    """Index lists or cardinalities of tensor operands do not agree."""


class ValidationError(GctfError, ValueError):
    """A value violates a declared invariant (model spec, config, data)."""


class ParseError(GctfError, ValueError):
    """A text input does not match its grammar.

    Carries the offending path and 1-based line number when known.
    """

    def __init__(self, message, path=None, line=None):
        loc = ""
        if path is not None:
            loc += f"{path}"
        if line is not None:
            loc += f":{line}"
        super().__init__(f"{loc}: {message}" if loc else message)
        self.path = path
        self.line = line


class NumericalError(GctfError, ArithmeticError):
    """A non-finite value appeared during iteration.

    Carries the factor being updated and the sweep number for diagnosis.
    """

    def __init__(self, message, factor=None, iteration=None):
        detail = message
        if factor is not None:
            detail += f" (factor {factor}"
            detail += f", sweep {iteration})" if iteration is not None else ")"
        super().__init__(detail)
        self.factor = factor
        self.iteration = iteration


class MetricUndefinedError(GctfError, ValueError):
    """AUC requested on a score set with fewer than two classes."""


class ConfigError(GctfError, ValueError):
    """A run configuration document is malformed or inconsistent."""
