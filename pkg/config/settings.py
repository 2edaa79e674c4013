import os
from dotenv import load_dotenv

load_dotenv()

# Physical constants

SPEED_OF_LIGHT = 299_792_458.0

# Default scenario (reference parameter set)
SCENARIO_DEFAULTS = {
    "n_elements": int(os.getenv("RIS_N_ELEMENTS", "60")),
    "alpha": float(os.getenv("RIS_ALPHA", "1.7")),
    "mu": float(os.getenv("RIS_MU", "1.1")),
    "h_bar": float(os.getenv("RIS_H_BAR", "1.0")),
    "phi": float(os.getenv("RIS_PHI", "25.7404")),
    "a0": float(os.getenv("RIS_A0", "0.054")),
    "frequency_hz": float(os.getenv("RIS_FREQUENCY_HZ", "300e9")),
    "gain_tx_db": float(os.getenv("RIS_GAIN_TX_DB", "40")),
    "gain_rx_ell_db": float(os.getenv("RIS_GAIN_RX_ELL_DB", "40")),
    "gain_rx_eve_db": float(os.getenv("RIS_GAIN_RX_EVE_DB", "40")),
    "d1_m": float(os.getenv("RIS_D1_M", "5")),
    "dr_ell_m": float(os.getenv("RIS_DR_ELL_M", "20")),
    "dr_eve_m": float(os.getenv("RIS_DR_EVE_M", "10")),
    "kappa_a": float(os.getenv("RIS_KAPPA_A", "3.18e-4")),
    "snr_tx_ell_db": float(os.getenv("RIS_SNR_TX_ELL_DB", "60")),
    "snr_tx_eve_db": float(os.getenv("RIS_SNR_TX_EVE_DB", "60")),
    "rs": float(os.getenv("RIS_RS", "0.2")),
}

# Series truncation of the legitimate-link CDF
SERIES_DEFAULTS = {
    "tol": float(os.getenv("SERIES_TOL", "1e-6")),
    "k_cap": 200,
    "reference_terms": 150,
    "stable_run": 3,
}

# Quadrature controls for the outage evaluators
QUADRATURE_DEFAULTS = {
    "simpson_order": int(os.getenv("SIMPSON_ORDER", "16384")),
    "laguerre_order": int(os.getenv("LAGUERRE_ORDER", "32")),
    "cross_check": os.getenv("QUADRATURE_CROSS_CHECK", "true").lower() in ("1", "true", "yes"),
    "resolution_tol": 1e-4,
    "cross_check_tol": 1e-3,
    "degenerate_offset": 1e-12,
}

# Monte-Carlo oracle
MONTE_CARLO_DEFAULTS = {
    "n_trials": int(os.getenv("MC_TRIALS", "1000000")),
    "seed": int(os.getenv("MC_SEED", "42")),
    "chunk_size": int(os.getenv("MC_CHUNK_SIZE", "16384")),
    "workers": int(os.getenv("MC_WORKERS", str(min(8, os.cpu_count() or 1)))),
    "min_trials": 10_000,
    "test_trials": int(os.getenv("MC_TEST_TRIALS", "1000000")),
}

# Output
LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")
CSV_FLOAT_FORMAT = "%.9e"
STATS_GRID_POINTS = int(os.getenv("STATS_GRID_POINTS", "200"))

_DEFAULT_GROUPS = {
    "scenario": SCENARIO_DEFAULTS,
    "series": SERIES_DEFAULTS,
    "quadrature": QUADRATURE_DEFAULTS,
    "monte_carlo": MONTE_CARLO_DEFAULTS,
}


def get_defaults(group: str) -> dict:
    """
    Get a copy of one group of defaults.

    Args:
        group: One of "scenario", "series", "quadrature", "monte_carlo"

    Returns:
        dict with the group's values (safe to mutate)
    """
    if group not in _DEFAULT_GROUPS:
        raise ValueError(f"Unknown defaults group: {group}. Available: {list(_DEFAULT_GROUPS.keys())}")

    return dict(_DEFAULT_GROUPS[group])


def get_series_defaults() -> dict:
    """Series truncation defaults."""
    return get_defaults("series")


def get_quadrature_defaults() -> dict:
    """Quadrature defaults for the outage evaluators."""
    return get_defaults("quadrature")


def get_monte_carlo_defaults() -> dict:
    """Monte-Carlo defaults (trials, seed, chunking, workers)."""
    return get_defaults("monte_carlo")
