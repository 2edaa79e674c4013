"""RIS Secrecy - outage and intercept probabilities of RIS-aided THz wiretap links."""

__version__ = "1.0.0"
__author__ = "RIS Secrecy Team"

from .secrecy import ip, sop, sop_asymptotic
from .stats import compute_eve_stats, compute_legit_stats
from .utils import load_system_config

__all__ = [
    'sop',
    'ip',
    'sop_asymptotic',
    'compute_legit_stats',
    'compute_eve_stats',
    'load_system_config',
]
