"""Exception hierarchy shared by every module of the package."""


class RamanujanJetsError(Exception):
    """Base class for all errors raised by this package."""


class ConfigurationError(RamanujanJetsError, ValueError):
    """Invalid precision or run configuration."""


class DomainError(RamanujanJetsError, ValueError):
    """Argument outside the domain of a function."""


class UnsupportedError(RamanujanJetsError, ValueError):
    """Requested order or family is not supported by an operation."""


class ShapeError(RamanujanJetsError, ValueError):
    """Jets or series of incompatible truncation orders were combined."""


class ScalarKindError(RamanujanJetsError, TypeError):
    """Exact-rational and real scalars were mixed."""


class NotInvertibleError(RamanujanJetsError, ZeroDivisionError):
    """A jet or series with vanishing head was inverted."""


class DivergenceError(RamanujanJetsError, ValueError):
    """Series evaluation requested outside the trusted disc."""


class OutOfRegionError(RamanujanJetsError, ValueError):
    """A solver parameter falls outside its trusted region."""


class NoSolutionError(RamanujanJetsError):
    """No root of the q-equation was found in the searched region."""


class InconsistencyError(RamanujanJetsError):
    """A solved system leaves residuals above threshold (wrong branch)."""
