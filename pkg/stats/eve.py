"""Statistics of the eavesdropper end-to-end gain |h_e|^2."""

import logging
import math
from typing import Optional

import numpy as np
from numpy.typing import ArrayLike

from channel.fading import alpha_mu_moment
from core.errors import DomainError
from core.models import AlphaMuParams, EveStats, PointingErrorParams
from core.specfun import FloatOrArray, log_upper_incomplete_gamma

logger = logging.getLogger(__name__)

# Below this x = z/scale the origin limits replace the incomplete-gamma forms
_ORIGIN_SWITCH = 1e-12
# Below this x the CDF is summed from positive lower-tail terms
_LOWER_TAIL_SWITCH = 1.0


def compute_eve_stats(n: int, fading: AlphaMuParams, pe: PointingErrorParams) -> EveStats:
    """
    Parameters of |h_e|^2 for an N-element RIS with random eavesdropper phases.

    The randomly phased sum is treated as complex Gaussian, so |h_f,e|^2 is
    exponential with mean N H2^2; the pointing error scales it by A0^2.

    Args:
        n: Number of RIS elements
        fading: Alpha-mu parameters shared by both hops
        pe: Pointing-error parameters

    Returns:
        EveStats with scale = N H2^2 A0^2
    """
    if n < 1:
        raise DomainError(f"RIS element count must be positive, got {n}")

    h2 = alpha_mu_moment(2, fading)
    return EveStats(n_elements=n, h2=h2, pe=pe, scale=n * h2 ** 2 * pe.a0 ** 2)


def _check_severity(s: EveStats) -> None:
    if s.pe.phi <= 2:
        raise DomainError(f"Eavesdropper statistics need phi > 2, got {s.pe.phi}")


def pdf_h_e_sq(z: ArrayLike, s: EveStats) -> FloatOrArray:
    """
    Density of |h_e|^2.

    (phi/2) / scale * x^{phi/2 - 1} Gamma(1 - phi/2, x) with x = z / scale,
    and the origin limit phi / (scale (phi - 2)) at x = 0.

    Args:
        z: Nonnegative argument(s)
        s: Eavesdropper statistics

    Returns:
        Density value(s)

    Raises:
        DomainError: If phi <= 2 or any z < 0
    """
    _check_severity(s)
    scalar = np.ndim(z) == 0
    z = np.atleast_1d(np.asarray(z, dtype=float))
    if np.any(z < 0):
        raise DomainError("Eavesdropper density is defined for z >= 0")

    phi = s.pe.phi
    x = z / s.scale
    values = np.full_like(x, phi / (s.scale * (phi - 2.0)))
    away = x >= _ORIGIN_SWITCH
    if np.any(away):
        xa = x[away]
        log_values = (
            math.log(phi / 2.0)
            - math.log(s.scale)
            + (phi / 2.0 - 1.0) * np.log(xa)
            + log_upper_incomplete_gamma(1.0 - phi / 2.0, xa)
        )
        values[away] = np.exp(log_values)
    return float(values[0]) if scalar else values


def cdf_h_e_sq(z: ArrayLike, s: EveStats, diagnostics: Optional[list[str]] = None) -> FloatOrArray:
    """
    Distribution of |h_e|^2: 1 - (phi/2) x^{phi/2} Gamma(-phi/2, x), x = z / scale.

    Below x = 1 the equivalent lower-tail form
    1 - e^{-x} + x^{phi/2} Gamma(1 - phi/2, x) is used instead; both of its
    terms are positive, so small probabilities keep full relative accuracy.
    Near the origin the linear limit x phi / (phi - 2) is used. Values are
    clamped to [0, 1].
    """
    _check_severity(s)
    scalar = np.ndim(z) == 0
    z = np.atleast_1d(np.asarray(z, dtype=float))
    if np.any(z < 0):
        raise DomainError("Eavesdropper distribution is defined for z >= 0")

    phi = s.pe.phi
    x = z / s.scale
    raw = x * phi / (phi - 2.0)
    lower = (x >= _ORIGIN_SWITCH) & (x < _LOWER_TAIL_SWITCH)
    if np.any(lower):
        xl = x[lower]
        log_excess = (phi / 2.0) * np.log(xl) + log_upper_incomplete_gamma(1.0 - phi / 2.0, xl)
        raw[lower] = -np.expm1(-xl) + np.exp(log_excess)
    upper = x >= _LOWER_TAIL_SWITCH
    if np.any(upper):
        xu = x[upper]
        log_tail = math.log(phi / 2.0) + (phi / 2.0) * np.log(xu) + log_upper_incomplete_gamma(-phi / 2.0, xu)
        raw[upper] = -np.expm1(log_tail)

    values = np.clip(raw, 0.0, 1.0)
    excursion = float(np.max(np.abs(raw - values)))
    if excursion > 0.0 and diagnostics is not None:
        diagnostics.append(f"Eavesdropper CDF clamped to [0, 1]; largest excursion {excursion:.3e}")
    return float(values[0]) if scalar else values


def mean_h_e_sq(s: EveStats) -> float:
    """Mean phi * scale / (phi + 2)."""
    return s.pe.phi * s.scale / (s.pe.phi + 2.0)
