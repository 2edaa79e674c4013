"""Scenario loading: presets, flat key = value files and command-line overrides."""

import logging
import os
from typing import Any, Optional

from dotenv import dotenv_values
from pydantic import ValidationError

from channel.pathloss import db_to_linear
from config.presets import get_preset
from config.settings import SCENARIO_DEFAULTS, get_quadrature_defaults, get_series_defaults
from core.errors import ConfigError, DomainError
from core.models import (
    AlphaMuParams,
    LinkGeometry,
    PointingErrorParams,
    QuadratureSpec,
    SeriesControl,
    SystemConfig,
)

logger = logging.getLogger(__name__)

_SERIES = get_series_defaults()
_QUAD = get_quadrature_defaults()

CONTROL_DEFAULTS = {
    "k_max": None,
    "tol": _SERIES["tol"],
    "simpson_order": _QUAD["simpson_order"],
    "laguerre_order": _QUAD["laguerre_order"],
    "cross_check": _QUAD["cross_check"],
}
INTEGER_KEYS = {"n_elements", "k_max", "simpson_order", "laguerre_order"}
BOOLEAN_KEYS = {"cross_check"}
# Shorthand that sets both transmit SNRs
SHORTHAND_KEYS = {"snr_db"}
KNOWN_KEYS = set(SCENARIO_DEFAULTS) | set(CONTROL_DEFAULTS) | SHORTHAND_KEYS


def _parse_value(key: str, raw: Any) -> Any:
    if not isinstance(raw, str):
        return raw
    text = raw.strip()
    try:
        if key == "k_max" and text.lower() in ("", "auto", "none"):
            return None
        if key in BOOLEAN_KEYS:
            if text.lower() not in ("1", "0", "true", "false", "yes", "no"):
                raise ValueError(text)
            return text.lower() in ("1", "true", "yes")
        if key in INTEGER_KEYS:
            return int(text)
        return float(text)
    except ValueError as e:
        raise ConfigError(f"Invalid value for '{key}': '{raw}'") from e


def read_scenario_file(path: str) -> dict:
    """
    Read a flat key = value scenario file (# starts a comment).

    Raises:
        ConfigError: If the file is missing, or holds unknown keys or non-numeric values
    """
    if not os.path.isfile(path):
        raise ConfigError(f"Scenario file not found: {path}")

    raw = dotenv_values(path)
    unknown = sorted(set(raw) - KNOWN_KEYS)
    if unknown:
        raise ConfigError(f"Unknown keys in {path}: {unknown}. Available: {sorted(KNOWN_KEYS)}")
    if any(value is None for value in raw.values()):
        raise ConfigError(f"Every line of {path} must have the form key = value")

    return {key: _parse_value(key, value) for key, value in raw.items()}


def build_system_config(values: dict) -> SystemConfig:
    """
    Build a validated SystemConfig from flat scenario values.

    dB-valued keys are converted to linear scale here.

    Raises:
        ConfigError: If a control setting (series, quadrature) is invalid
        DomainError: If a physical invariant is violated (phi <= 2, A0 outside (0, 1], ...)
    """
    v = {**SCENARIO_DEFAULTS, **CONTROL_DEFAULTS, **values}
    if "snr_db" in values:
        v["snr_tx_ell_db"] = v["snr_tx_eve_db"] = values["snr_db"]

    try:
        series = SeriesControl(k_max=v["k_max"], tol=v["tol"])
        quad = QuadratureSpec(
            simpson_order=v["simpson_order"],
            laguerre_order=v["laguerre_order"],
            cross_check=v["cross_check"],
        )
    except ValidationError as e:
        raise ConfigError(f"Invalid control settings: {e}") from e

    try:
        return SystemConfig(
            n_elements=v["n_elements"],
            fading=AlphaMuParams(alpha=v["alpha"], mu=v["mu"], h_bar=v["h_bar"]),
            pe=PointingErrorParams(phi=v["phi"], a0=v["a0"]),
            geom_ell=_geometry(v, v["gain_rx_ell_db"], v["dr_ell_m"]),
            geom_eve=_geometry(v, v["gain_rx_eve_db"], v["dr_eve_m"]),
            snr_tx_ell=db_to_linear(v["snr_tx_ell_db"]),
            snr_tx_eve=db_to_linear(v["snr_tx_eve_db"]),
            rs=v["rs"],
            series=series,
            quad=quad,
        )
    except ValidationError as e:
        raise DomainError(f"Invalid scenario: {e}") from e


def _geometry(v: dict, gain_rx_db: float, dr_m: float) -> LinkGeometry:
    return LinkGeometry(
        frequency_hz=v["frequency_hz"],
        gain_tx=db_to_linear(v["gain_tx_db"]),
        gain_rx=db_to_linear(gain_rx_db),
        d1_m=v["d1_m"],
        dr_m=dr_m,
        kappa_a=v["kappa_a"],
    )


def load_system_config(
    path: Optional[str] = None,
    preset: Optional[str] = None,
    overrides: Optional[dict] = None,
) -> SystemConfig:
    """
    Load a scenario: preset (or section-V defaults), then file values, then overrides.

    Args:
        path: Optional scenario file
        preset: Optional preset name (e.g., "eve_distance")
        overrides: Values set on the command line; None entries are ignored

    Returns:
        Validated SystemConfig

    Raises:
        ConfigError: Unknown preset or override key, unreadable file or invalid control value
        DomainError: Violated physical invariant

    Examples:
        >>> load_system_config(preset="eve_distance").geom_ell.dr_m
        25.0
    """
    values: dict = {}
    if preset:
        try:
            values.update(get_preset(preset))
        except ValueError as e:
            raise ConfigError(str(e)) from e
    if path:
        values.update(read_scenario_file(path))
        logger.info(f"Loaded scenario file {path}")
    if overrides:
        unknown = sorted(set(overrides) - KNOWN_KEYS)
        if unknown:
            raise ConfigError(f"Unknown override keys: {unknown}. Available: {sorted(KNOWN_KEYS)}")
        values.update({key: _parse_value(key, value) for key, value in overrides.items() if value is not None})

    return build_system_config(values)
