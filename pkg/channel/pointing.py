"""Pointing-error attenuation statistics."""

import numpy as np
from numpy.typing import ArrayLike

from core.models import PointingErrorParams
from core.specfun import FloatOrArray


def pe_pdf(z: ArrayLike, p: PointingErrorParams) -> FloatOrArray:
    """
    Density of the squared pointing-error attenuation on [0, A0^2].

    Zero outside the support.
    """
    scalar = np.ndim(z) == 0
    z = np.asarray(z, dtype=float)
    support = (z >= 0) & (z <= p.a0 ** 2)
    safe = np.where(support, z, 0.0)
    with np.errstate(divide="ignore"):
        values = p.phi / (2.0 * p.a0 ** p.phi) * safe ** (p.phi / 2.0 - 1.0)
    values = np.where(support, values, 0.0)
    return float(values) if scalar else values


def pe_cdf(z: ArrayLike, p: PointingErrorParams) -> FloatOrArray:
    """
    Distribution of the squared pointing-error attenuation.

    Examples:
        >>> pe_cdf(0.054 ** 2, PointingErrorParams(phi=25.7404, a0=0.054))
        1.0
    """
    scalar = np.ndim(z) == 0
    z = np.asarray(z, dtype=float)
    clipped = np.clip(z, 0.0, p.a0 ** 2)
    values = np.minimum(clipped ** (p.phi / 2.0) / p.a0 ** p.phi, 1.0)
    values = np.where(z > p.a0 ** 2, 1.0, values)
    return float(values) if scalar else values


def pe_mean_sq(p: PointingErrorParams) -> float:
    """Mean attenuation phi A0^2 / (phi + 2)."""
    return p.phi * p.a0 ** 2 / (p.phi + 2.0)
