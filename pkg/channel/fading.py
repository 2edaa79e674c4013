"""Alpha-mu small-scale fading: density, distribution and moments."""

import math

import numpy as np
from numpy.typing import ArrayLike
from scipy import special

from core.errors import DomainError
from core.models import AlphaMuParams
from core.specfun import FloatOrArray, lower_incomplete_gamma_regularized


def _log_norm_const(p: AlphaMuParams) -> float:
    # log of alpha mu^mu / (h_bar^{alpha mu} Gamma(mu))
    return (
        math.log(p.alpha)
        + p.mu * math.log(p.mu)
        - p.alpha * p.mu * math.log(p.h_bar)
        - special.gammaln(p.mu)
    )


def alpha_mu_pdf(z: ArrayLike, p: AlphaMuParams) -> FloatOrArray:
    """
    Density of an alpha-mu distributed amplitude.

    Args:
        z: Nonnegative amplitude(s)
        p: Fading parameters

    Returns:
        Density value(s)

    Raises:
        DomainError: If z < 0, or z = 0 with alpha*mu < 1 (unbounded density)

    Examples:
        >>> round(alpha_mu_pdf(1.0, AlphaMuParams(alpha=2, mu=1)), 6)
        0.735759
    """
    scalar = np.ndim(z) == 0
    z = np.asarray(z, dtype=float)
    if np.any(z < 0):
        raise DomainError("alpha-mu density is defined for z >= 0")

    shape = p.alpha * p.mu
    log_c = _log_norm_const(p)
    at_origin = z == 0
    if np.any(at_origin) and shape < 1:
        raise DomainError(f"alpha-mu density is unbounded at 0 for alpha*mu={shape} < 1")

    with np.errstate(divide="ignore"):
        log_z = np.log(np.where(at_origin, 1.0, z))
    values = np.exp(log_c + (shape - 1.0) * log_z - p.mu * (np.where(at_origin, 0.0, z) / p.h_bar) ** p.alpha)
    origin_value = math.exp(log_c) if shape == 1 else 0.0
    values = np.where(at_origin, origin_value, values)
    return float(values) if scalar else values


def alpha_mu_cdf(z: ArrayLike, p: AlphaMuParams) -> FloatOrArray:
    """
    Distribution function P(mu, mu (z/h_bar)^alpha) of an alpha-mu amplitude.

    Examples:
        >>> round(alpha_mu_cdf(1.0, AlphaMuParams(alpha=2, mu=1)), 6)
        0.632121
    """
    scalar = np.ndim(z) == 0
    z = np.asarray(z, dtype=float)
    if np.any(z < 0):
        raise DomainError("alpha-mu distribution is defined for z >= 0")
    values = lower_incomplete_gamma_regularized(p.mu, p.mu * (z / p.h_bar) ** p.alpha)
    return float(values) if scalar else values


def alpha_mu_moment(i: int, p: AlphaMuParams) -> float:
    """
    i-th raw moment Gamma(mu + i/alpha) h_bar^i / (Gamma(mu) mu^{i/alpha}).

    Args:
        i: Moment order (>= 1)
        p: Fading parameters

    Returns:
        E[Y^i]

    Examples:
        >>> alpha_mu_moment(2, AlphaMuParams(alpha=2, mu=1))
        1.0
    """
    if i < 1:
        raise DomainError(f"Moment order must be a positive integer, got {i}")

    ratio = i / p.alpha
    log_moment = (
        special.gammaln(p.mu + ratio)
        - special.gammaln(p.mu)
        + i * math.log(p.h_bar)
        - ratio * math.log(p.mu)
    )
    return math.exp(log_moment)
