"""Sweep-variable registry and the sweep runner behind the sop-sweep command."""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, NamedTuple, Optional

import numpy as np
from pydantic import ValidationError

from channel.pathloss import db_to_linear
from core.errors import ConfigError
from core.models import LinkGeometry, McRun, SweepSpec, SweepVariable, SystemConfig
from secrecy.outage import ip, sop, sop_asymptotic
from simulation.montecarlo import empirical_sop, simulate_link

logger = logging.getLogger(__name__)


class SweepRow(NamedTuple):
    """One sweep point; the Monte-Carlo columns are None when simulation is off."""

    sweep_value: float
    sop_analytic: float
    ip_analytic: float
    sop_asymptotic: float
    sop_mc: Optional[float] = None
    sop_mc_stderr: Optional[float] = None


def _with_eve_distance(cfg: SystemConfig, value: float) -> SystemConfig:
    geom = LinkGeometry.model_validate({**cfg.geom_eve.model_dump(), "dr_m": value})
    return cfg.replace(geom_eve=geom)


def _with_elements(cfg: SystemConfig, value: float) -> SystemConfig:
    return cfg.replace(n_elements=int(round(value)))


def _with_snr_db(cfg: SystemConfig, value: float) -> SystemConfig:
    snr = db_to_linear(value)
    return cfg.replace(snr_tx_ell=snr, snr_tx_eve=snr)


def _with_rate(cfg: SystemConfig, value: float) -> SystemConfig:
    return cfg.replace(rs=value)


# Variable-specific configurations
SWEEP_CONFIGS: dict[SweepVariable, dict] = {
    SweepVariable.D_R_EVE: {
        "apply": _with_eve_distance,
        "integer": False,
        "description": "RIS to eavesdropper distance in meters",
    },
    SweepVariable.N_ELEMENTS: {
        "apply": _with_elements,
        "integer": True,
        "description": "Number of RIS elements",
    },
    SweepVariable.SNR_DB: {
        "apply": _with_snr_db,
        "integer": False,
        "description": "Transmit SNR in dB, applied to both receivers",
    },
    SweepVariable.RS: {
        "apply": _with_rate,
        "integer": False,
        "description": "Secrecy rate in bits/s/Hz",
    },
}


def get_sweep_config(variable: SweepVariable) -> dict:
    """
    Get the registry entry of a sweep variable.

    Raises:
        ValueError: If variable is not a SweepVariable
    """
    if not isinstance(variable, SweepVariable):
        raise ValueError(f"Unknown sweep variable: {variable}. Available: {[v.value for v in SweepVariable]}")

    return SWEEP_CONFIGS[variable]


def get_variable_from_string(name: str) -> Optional[SweepVariable]:
    """
    Convert a string to a SweepVariable.

    Examples:
        >>> get_variable_from_string("D_R_EVE") == SweepVariable.D_R_EVE
        True
    """
    try:
        return SweepVariable(name.lower())
    except (ValueError, AttributeError):
        return None


def list_sweep_variables() -> list[dict]:
    """All sweep variables with their descriptions."""
    return [
        {"variable": variable.value, "description": SWEEP_CONFIGS[variable]["description"]}
        for variable in SweepVariable
    ]


def parse_sweep_spec(text: str) -> SweepSpec:
    """
    Parse a VAR:START:STOP:STEPS sweep description.

    Raises:
        ConfigError: On a malformed description or invalid range

    Examples:
        >>> parse_sweep_spec("d_r_eve:5:30:6").steps
        6
    """
    parts = text.split(":")
    if len(parts) != 4:
        raise ConfigError(f"Sweep must look like VAR:START:STOP:STEPS, got '{text}'")

    variable = get_variable_from_string(parts[0])
    if variable is None:
        raise ConfigError(f"Unknown sweep variable: {parts[0]}. Available: {[v.value for v in SweepVariable]}")

    try:
        return SweepSpec(variable=variable, start=float(parts[1]), stop=float(parts[2]), steps=int(parts[3]))
    except (ValueError, ValidationError) as e:
        raise ConfigError(f"Invalid sweep '{text}': {e}") from e


def sweep_values(spec: SweepSpec) -> np.ndarray:
    """Evenly spaced sweep values, rounded for integer variables."""
    values = np.linspace(spec.start, spec.stop, spec.steps)
    if get_sweep_config(spec.variable)["integer"]:
        values = np.round(values)
    return values


def _evaluate_point(cfg: SystemConfig, value: float) -> SweepRow:
    return SweepRow(
        sweep_value=value,
        sop_analytic=sop(cfg).value,
        ip_analytic=ip(cfg).value,
        sop_asymptotic=sop_asymptotic(cfg).value,
    )


def run_sweep(
    cfg: SystemConfig,
    spec: SweepSpec,
    run: Optional[McRun] = None,
    workers: int = 1,
) -> list[SweepRow]:
    """
    Evaluate SOP, IP and asymptotic SOP across a sweep, optionally with Monte-Carlo.

    Points are evaluated on a thread pool and returned in sweep order. Every
    Monte-Carlo point reuses the same seed, so curves are smooth in the
    swept variable and identical for any worker count.

    Args:
        cfg: Base scenario
        spec: Sweep description
        run: Monte-Carlo settings; None disables simulation
        workers: Threads for sweep points and simulation chunks

    Returns:
        One SweepRow per sweep value, ordered by value
    """
    apply: Callable[[SystemConfig, float], SystemConfig] = get_sweep_config(spec.variable)["apply"]
    values = [float(v) for v in sweep_values(spec)]
    configs = [apply(cfg, value) for value in values]
    logger.info(f"Sweeping {spec.variable.value} over {len(values)} points")

    with ThreadPoolExecutor(max_workers=workers) as pool:
        rows = list(pool.map(_evaluate_point, configs, values))

    if run is None:
        return rows

    results = []
    for point_cfg, row in zip(configs, rows):
        estimate = empirical_sop(simulate_link(point_cfg, run, workers=workers), point_cfg.rs)
        results.append(row._replace(sop_mc=estimate.point, sop_mc_stderr=estimate.std_err))
    return results
