"""Parameter sweeps and the analytic-versus-simulation validation suite."""

from .sweeps import (
    SWEEP_CONFIGS,
    SweepRow,
    get_sweep_config,
    get_variable_from_string,
    list_sweep_variables,
    parse_sweep_spec,
    run_sweep,
    sweep_values,
)
from .validation import CHECK_TOLERANCES, CheckResult, all_passed, run_validation

__all__ = [
    'SWEEP_CONFIGS',
    'SweepRow',
    'get_sweep_config',
    'get_variable_from_string',
    'list_sweep_variables',
    'parse_sweep_spec',
    'sweep_values',
    'run_sweep',
    'CHECK_TOLERANCES',
    'CheckResult',
    'run_validation',
    'all_passed',
]
