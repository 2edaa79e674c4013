"""Secrecy outage and intercept probability evaluators."""

from .integrands import (
    eve_density_at,
    sop_integrand_complement,
    sop_integrand_d1,
    sop_integrand_d2,
    sop_integrand_density,
    sop_integrand_series,
)
from .outage import AsymptoticComponents, asymptotic_components, ip, sop, sop_asymptotic
from .params import AverageSnr, advantage_ratio, avg_snr, secrecy_params
from .reference import adaptive_outage_reference

__all__ = [
    'secrecy_params',
    'avg_snr',
    'advantage_ratio',
    'AverageSnr',
    'eve_density_at',
    'sop_integrand_d1',
    'sop_integrand_d2',
    'sop_integrand_complement',
    'sop_integrand_series',
    'sop_integrand_density',
    'sop',
    'ip',
    'sop_asymptotic',
    'asymptotic_components',
    'AsymptoticComponents',
    'adaptive_outage_reference',
]
