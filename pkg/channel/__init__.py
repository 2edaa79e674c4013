"""Channel model: alpha-mu fading, pointing error and THz path gain."""

from .fading import alpha_mu_cdf, alpha_mu_moment, alpha_mu_pdf
from .pathloss import absorption_term, db_to_linear, friis_term, linear_to_db, path_gain
from .pointing import pe_cdf, pe_mean_sq, pe_pdf

__all__ = [
    'alpha_mu_pdf',
    'alpha_mu_cdf',
    'alpha_mu_moment',
    'pe_pdf',
    'pe_cdf',
    'pe_mean_sq',
    'path_gain',
    'friis_term',
    'absorption_term',
    'db_to_linear',
    'linear_to_db',
]
