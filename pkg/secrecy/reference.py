"""Adaptive-quadrature reference for the outage integral."""

import logging
from typing import Optional

import numpy as np
from scipy import integrate

from core.models import SeriesControl, SystemConfig
from secrecy.params import secrecy_params
from stats.eve import compute_eve_stats, pdf_h_e_sq
from stats.legit import cdf_h_ell_sq, compute_legit_stats, resolve_series_control

logger = logging.getLogger(__name__)

# The eavesdropper density is negligible beyond this many scales
_TAIL_SCALES = 60.0


def adaptive_outage_reference(cfg: SystemConfig, ctrl: Optional[SeriesControl] = None) -> float:
    """
    Outage probability int_0^inf F_h_ell^2(L + M t) f_|h_e|^2(t) dt by adaptive quadrature.

    The range is split at the knee of the legitimate CDF, where the
    integrand changes fastest, and at the density's effective support.

    Args:
        cfg: Scenario (rs = 0 gives the intercept probability)
        ctrl: Series control; defaults to cfg.series

    Returns:
        Reference probability (unclamped quadrature value)
    """
    ls = compute_legit_stats(cfg.n_elements, cfg.fading, cfg.pe)
    es = compute_eve_stats(cfg.n_elements, cfg.fading, cfg.pe)
    p = secrecy_params(cfg)
    ctrl = resolve_series_control(ctrl or cfg.series, ls)

    def integrand(t: float) -> float:
        return float(cdf_h_ell_sq(p.l_offset + p.m_slope * t, ls, ctrl)) * float(pdf_h_e_sq(t, es))

    t_support = _TAIL_SCALES * es.scale
    t_cut = (ls.knee - p.l_offset) / p.m_slope
    edges = [0.0]
    if 0.0 < t_cut < t_support:
        edges.append(t_cut)
    edges.append(t_support)

    total = 0.0
    for a, b in zip(edges[:-1], edges[1:]):
        value, _ = integrate.quad(integrand, a, b, limit=200, epsabs=1e-12, epsrel=1e-10)
        total += value
    tail, _ = integrate.quad(integrand, t_support, np.inf, limit=100)
    total += tail

    logger.debug(f"Adaptive outage reference {total:.9e} (knee at t={t_cut:.4g})")
    return total
