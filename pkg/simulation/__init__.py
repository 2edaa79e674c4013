"""Monte-Carlo oracle for the channel statistics and outage probabilities."""

from .estimators import Histogram, empirical_cdf, empirical_pdf_hist, histogram_l1_distance, ks_distance
from .montecarlo import LinkSamples, empirical_sop, indicator_estimate, simulate_link
from .sampling import sample_alpha_mu, sample_pe_sq
from .streams import chunk_generator, chunk_sizes

__all__ = [
    'chunk_generator',
    'chunk_sizes',
    'sample_alpha_mu',
    'sample_pe_sq',
    'LinkSamples',
    'simulate_link',
    'empirical_sop',
    'indicator_estimate',
    'Histogram',
    'empirical_cdf',
    'empirical_pdf_hist',
    'histogram_l1_distance',
    'ks_distance',
]
