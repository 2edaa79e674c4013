"""Samplers for the per-element fading amplitudes and the pointing-error attenuation."""

from typing import Union

import numpy as np

from core.models import AlphaMuParams, PointingErrorParams

Size = Union[int, tuple[int, ...]]


def sample_alpha_mu(size: Size, p: AlphaMuParams, rng: np.random.Generator) -> np.ndarray:
    """
    Draw alpha-mu amplitudes as h_bar (G / mu)^{1/alpha}, G ~ Gamma(mu, 1).

    numpy's gamma sampler handles every shape mu > 0, including mu < 1.

    Args:
        size: Output shape
        p: Fading parameters
        rng: Random stream

    Returns:
        Positive amplitudes
    """
    return p.h_bar * (rng.standard_gamma(p.mu, size) / p.mu) ** (1.0 / p.alpha)


def sample_pe_sq(size: Size, p: PointingErrorParams, rng: np.random.Generator) -> np.ndarray:
    """Draw squared pointing-error attenuations A0^2 U^{2/phi} (inverse CDF), all in [0, A0^2]."""
    return p.a0 ** 2 * rng.random(size) ** (2.0 / p.phi)
