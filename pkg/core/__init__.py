"""Core modules: errors, validated domain types and the numerical kernel."""

from .errors import (
    BoundOverflowError,
    ConfigError,
    ConvergenceError,
    DomainError,
    InsufficientSamplesError,
    SecrecyError,
)
from .models import (
    AlphaMuParams,
    Branch,
    EveStats,
    LegitStats,
    LinkGeometry,
    McEstimate,
    McRun,
    PointingErrorParams,
    QuadratureSpec,
    SecrecyParams,
    SecrecyResult,
    SeriesControl,
    SweepSpec,
    SweepVariable,
    SystemConfig,
)
from .specfun import (
    LaguerreRule,
    alt_extended_simpson_weights,
    digamma,
    gauss_laguerre_integrate,
    gauss_laguerre_rule,
    laguerre_eval,
    log_upper_incomplete_gamma,
    lower_incomplete_gamma_regularized,
    q_function,
    simpson_sum,
    upper_incomplete_gamma,
)

__all__ = [
    'SecrecyError',
    'ConfigError',
    'DomainError',
    'ConvergenceError',
    'BoundOverflowError',
    'InsufficientSamplesError',
    'AlphaMuParams',
    'PointingErrorParams',
    'LinkGeometry',
    'SeriesControl',
    'QuadratureSpec',
    'SystemConfig',
    'SecrecyParams',
    'Branch',
    'SecrecyResult',
    'LegitStats',
    'EveStats',
    'McRun',
    'McEstimate',
    'SweepVariable',
    'SweepSpec',
    'LaguerreRule',
    'laguerre_eval',
    'gauss_laguerre_rule',
    'gauss_laguerre_integrate',
    'alt_extended_simpson_weights',
    'simpson_sum',
    'q_function',
    'log_upper_incomplete_gamma',
    'upper_incomplete_gamma',
    'lower_incomplete_gamma_regularized',
    'digamma',
]
