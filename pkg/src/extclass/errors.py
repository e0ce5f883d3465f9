"""Exception hierarchy for the package."""


class ExtclassError(Exception):
    """Base class for all errors raised by this package."""


class FieldMismatchError(ExtclassError, TypeError):
    """Scalars or objects from different fields were combined."""


class NotInvertibleError(ExtclassError, ZeroDivisionError):
    """Division by a non-invertible scalar or inversion of a singular matrix."""


class DimensionError(ExtclassError, ValueError):
    """Shapes, lengths or ambient dimensions do not agree."""


class ParseError(ExtclassError, ValueError):
    """Malformed scalar string, algebra file or CLI reference."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)


class NotAnAutomorphismError(ExtclassError, ValueError):
    """A matrix that was required to preserve the bracket does not."""


class NoLiftError(ExtclassError, ValueError):
    """Two cocycle tuples are not related by the given automorphism and matrix."""


class SearchBudgetExceeded(ExtclassError):
    """An exhaustive search would exceed its cost guard; the question is undecided."""


class CatalogError(ExtclassError, KeyError):
    """Unknown catalog name or index, or a bad parameter for it."""

    def __str__(self):
        return str(self.args[0]) if self.args else ""
