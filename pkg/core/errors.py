"""Exception hierarchy shared by the library and the command-line entry point."""


class SecrecyError(Exception):
    """Base class for every error raised by this package."""

    exit_code = 1


class ConfigError(SecrecyError, ValueError):
    """Unparseable scenario file, unknown key or invalid control setting."""

    exit_code = 2


class DomainError(SecrecyError, ValueError):
    """Argument outside the mathematical domain or violated physical invariant."""

    exit_code = 3


class ConvergenceError(SecrecyError, ArithmeticError):
    """A numerical kernel iteration did not converge."""

    exit_code = 3


class BoundOverflowError(SecrecyError, OverflowError):
    """The truncation bound is not representable (vacuous at this order)."""

    exit_code = 3


class InsufficientSamplesError(SecrecyError, ValueError):
    """Too few Monte-Carlo trials for an estimate used as an oracle."""

    exit_code = 4
