"""Named reference scenarios."""

from config.settings import SCENARIO_DEFAULTS

# Reference parameter set
BASELINE_PRESET = dict(SCENARIO_DEFAULTS)

# CDF of the legitimate gain, h_bar = 1.5
LEGIT_MILD_PRESET = {**BASELINE_PRESET, "alpha": 2.0, "mu": 1.5, "h_bar": 1.5, "n_elements": 20}
LEGIT_SHARP_PRESET = {**BASELINE_PRESET, "alpha": 2.5, "mu": 1.5, "h_bar": 1.5, "n_elements": 40}
LEGIT_SEVERE_PRESET = {**BASELINE_PRESET, "alpha": 1.7, "mu": 1.1, "h_bar": 1.5, "n_elements": 60}

# PDF of the eavesdropper gain; N is swept over {10, 30, 60}
EVE_DENSITY_PRESET = {**BASELINE_PRESET, "alpha": 2.5, "mu": 1.5, "h_bar": 1.5, "n_elements": 30}
EVE_DENSITY_ELEMENT_COUNTS = (10, 30, 60)

# SOP/IP versus RIS-eavesdropper distance
EVE_DISTANCE_PRESET = {
    **BASELINE_PRESET,
    "alpha": 1.7,
    "mu": 1.1,
    "h_bar": 1.0,
    "n_elements": 60,
    "dr_ell_m": 25.0,
    "k_max": 0,
    "rs": 0.2,
}
EVE_DISTANCE_DR_EVE_M = (5.0, 10.0, 15.0, 20.0, 25.0, 30.0)
EVE_DISTANCE_RATES = (0.0, 0.2)

# Asymptotic SOP versus transmit SNR
HIGH_SNR_PRESET = {
    **BASELINE_PRESET,
    "alpha": 1.7,
    "mu": 1.1,
    "h_bar": 1.0,
    "rs": 0.2,
    "dr_eve_m": 8.0,
    "n_elements": 60,
}
HIGH_SNR_ELEMENT_COUNTS = (40, 60)

PRESETS = {
    "baseline": BASELINE_PRESET,
    "legit_mild": LEGIT_MILD_PRESET,
    "legit_sharp": LEGIT_SHARP_PRESET,
    "legit_severe": LEGIT_SEVERE_PRESET,
    "eve_density": EVE_DENSITY_PRESET,
    "eve_distance": EVE_DISTANCE_PRESET,
    "high_snr": HIGH_SNR_PRESET,
}


def get_preset(name: str) -> dict:
    """
    Get a copy of a named scenario.

    Args:
        name: Preset name (e.g., "baseline", "eve_distance")

    Returns:
        dict of scenario-file keys to values

    Examples:
        >>> get_preset("eve_distance")["dr_ell_m"]
        25.0
    """
    if name not in PRESETS:
        raise ValueError(f"Unknown preset: {name}. Available: {list(PRESETS.keys())}")

    return dict(PRESETS[name])


def list_presets() -> list[str]:
    """Names of all available presets."""
    return list(PRESETS.keys())
