"""End-to-end gain statistics of the legitimate and eavesdropper links."""

from .eve import cdf_h_e_sq, compute_eve_stats, mean_h_e_sq, pdf_h_e_sq
from .legit import (
    ErrorGrowth,
    TruncationBound,
    cdf_h_ell_sq,
    compute_legit_stats,
    error_growth_diagnostic,
    legit_series_sum,
    regional_bound,
    resolve_series_control,
    select_k_max,
    series_tail,
    series_term,
    truncation_bound,
)

__all__ = [
    'compute_legit_stats',
    'series_term',
    'series_tail',
    'legit_series_sum',
    'cdf_h_ell_sq',
    'truncation_bound',
    'regional_bound',
    'select_k_max',
    'resolve_series_control',
    'error_growth_diagnostic',
    'TruncationBound',
    'ErrorGrowth',
    'compute_eve_stats',
    'pdf_h_e_sq',
    'cdf_h_e_sq',
    'mean_h_e_sq',
]
