"""Configuration: environment-driven defaults and named scenarios."""

from .presets import PRESETS, get_preset, list_presets
from .settings import (
    CSV_FLOAT_FORMAT,
    LOG_LEVEL,
    MONTE_CARLO_DEFAULTS,
    QUADRATURE_DEFAULTS,
    SCENARIO_DEFAULTS,
    SERIES_DEFAULTS,
    STATS_GRID_POINTS,
    get_defaults,
    get_monte_carlo_defaults,
    get_quadrature_defaults,
    get_series_defaults,
)

__all__ = [
    "SCENARIO_DEFAULTS",
    "SERIES_DEFAULTS",
    "QUADRATURE_DEFAULTS",
    "MONTE_CARLO_DEFAULTS",
    "LOG_LEVEL",
    "CSV_FLOAT_FORMAT",
    "STATS_GRID_POINTS",
    "get_defaults",
    "get_series_defaults",
    "get_quadrature_defaults",
    "get_monte_carlo_defaults",
    "PRESETS",
    "get_preset",
    "list_presets",
]
