"""THz path gain: Friis spreading term times molecular absorption."""

import math

from core.models import LinkGeometry


def db_to_linear(value_db: float) -> float:
    """
    Convert a power ratio in dB to linear scale.

    Examples:
        >>> db_to_linear(40.0)
        10000.0
    """
    return 10.0 ** (value_db / 10.0)


def linear_to_db(value: float) -> float:
    """Convert a positive linear power ratio to dB."""
    return 10.0 * math.log10(value)


def friis_term(g: LinkGeometry) -> float:
    """Amplitude spreading gain lambda sqrt(Gt Gr) / (4 pi d)."""
    return g.wavelength_m * math.sqrt(g.gain_tx * g.gain_rx) / (4.0 * math.pi * g.total_distance_m)


def absorption_term(g: LinkGeometry) -> float:
    """Amplitude absorption factor exp(-kappa_a d / 2)."""
    return math.exp(-g.kappa_a * g.total_distance_m / 2.0)


def path_gain(g: LinkGeometry) -> float:
    """
    Deterministic amplitude gain of a source-RIS-node link.

    Args:
        g: Link geometry with d = d1 + dr

    Returns:
        Product of the Friis and absorption terms

    Examples:
        >>> geom = LinkGeometry(frequency_hz=300e9, gain_tx=1e4, gain_rx=1e4, d1_m=5, dr_m=20, kappa_a=3.18e-4)
        >>> round(path_gain(geom), 5)
        0.03168
    """
    return friis_term(g) * absorption_term(g)
