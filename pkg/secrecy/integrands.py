"""Integrands of the outage integral in its substituted (L > 0) and direct (L = 0) forms."""

import numpy as np
from numpy.typing import ArrayLike

from core.errors import DomainError
from core.models import EveStats, LegitStats, SecrecyParams, SeriesControl
from core.specfun import FloatOrArray, q_function
from stats.eve import pdf_h_e_sq
from stats.legit import legit_series_sum, series_term


def eve_density_at(u: ArrayLike, p: SecrecyParams, es: EveStats) -> np.ndarray:
    """f_|h_e|^2((u - L) / M), taken as 0 where the argument is negative."""
    u = np.atleast_1d(np.asarray(u, dtype=float))
    arg = (u - p.l_offset) / p.m_slope
    values = np.zeros_like(u)
    inside = arg >= 0
    if np.any(inside):
        values[inside] = pdf_h_e_sq(arg[inside], es)
    return values


def _gain_argument(u: np.ndarray, ls: LegitStats) -> np.ndarray:
    return (np.sqrt(u) / ls.pe.a0 - np.sqrt(ls.g_n)) / np.sqrt(ls.psi_n)


def _substitute(z: ArrayLike, p: SecrecyParams) -> tuple[np.ndarray, np.ndarray, bool]:
    """Map the integration variable to u; for L > 0, u = 1/z with Jacobian z^-2."""
    scalar = np.ndim(z) == 0
    z = np.atleast_1d(np.asarray(z, dtype=float))
    if p.l_offset > 0:
        if np.any(z <= 0):
            raise DomainError("Substituted outage integrands need z > 0")
        return 1.0 / z, z ** -2.0, scalar
    if np.any(z < 0):
        raise DomainError("Outage integrands need z >= 0")
    return z, np.ones_like(z), scalar


def _finish(values: np.ndarray, scalar: bool) -> FloatOrArray:
    return float(values[0]) if scalar else values


def sop_integrand_d1(k: int, z: ArrayLike, p: SecrecyParams, ls: LegitStats, es: EveStats) -> FloatOrArray:
    """
    Series integrand of order k: T_k(u) f_|h_e|^2((u - L)/M), substituted when L > 0.

    The B_N factor is applied by the caller.
    """
    u, jacobian, scalar = _substitute(z, p)
    terms = np.zeros_like(u)
    positive = u > 0
    if np.any(positive):
        terms[positive] = series_term(k, u[positive], ls)
    return _finish(jacobian * terms * eve_density_at(u, p, es), scalar)


def sop_integrand_d2(z: ArrayLike, p: SecrecyParams, ls: LegitStats, es: EveStats) -> FloatOrArray:
    """Gaussian-tail integrand Q(arg(u)) f_|h_e|^2((u - L)/M), substituted when L > 0."""
    u, jacobian, scalar = _substitute(z, p)
    return _finish(jacobian * q_function(_gain_argument(u, ls)) * eve_density_at(u, p, es), scalar)


def sop_integrand_complement(z: ArrayLike, p: SecrecyParams, ls: LegitStats, es: EveStats) -> FloatOrArray:
    """Complement of the d2 integrand: Q(-arg(u)) times the same density."""
    u, jacobian, scalar = _substitute(z, p)
    return _finish(jacobian * q_function(-_gain_argument(u, ls)) * eve_density_at(u, p, es), scalar)


def sop_integrand_series(
    z: ArrayLike,
    p: SecrecyParams,
    ls: LegitStats,
    es: EveStats,
    ctrl: SeriesControl,
) -> FloatOrArray:
    """B_N times the sum of the d1 integrands up to the resolved truncation order."""
    u, jacobian, scalar = _substitute(z, p)
    return _finish(jacobian * legit_series_sum(u, ls, ctrl) * eve_density_at(u, p, es), scalar)


def sop_integrand_density(z: ArrayLike, p: SecrecyParams, es: EveStats) -> FloatOrArray:
    """The bare density factor; its integral equals M."""
    u, jacobian, scalar = _substitute(z, p)
    return _finish(jacobian * eve_density_at(u, p, es), scalar)
