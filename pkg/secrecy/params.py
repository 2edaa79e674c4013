"""Outage-event parameters and average SNRs of a wiretap scenario."""

from typing import NamedTuple

from channel.fading import alpha_mu_moment
from channel.pathloss import path_gain
from channel.pointing import pe_mean_sq
from core.models import SecrecyParams, SystemConfig


class AverageSnr(NamedTuple):
    """Average received SNRs at the legitimate node and the eavesdropper."""

    snr_ell: float
    snr_eve: float


def secrecy_params(cfg: SystemConfig) -> SecrecyParams:
    """
    Slope M and offset L of the outage event h_ell^2 <= M |h_e|^2 + L.

    M = 2^Rs h_l,e^2 sigma_ell^2 / (h_l,ell^2 sigma_e^2) and
    L = sigma_ell^2 (2^Rs - 1) / (P h_l,ell^2), with the noise variances
    expressed through the transmit SNRs P / sigma_x^2.

    Args:
        cfg: Scenario

    Returns:
        SecrecyParams; l_offset is exactly 0 when rs = 0
    """
    gain_ell_sq = path_gain(cfg.geom_ell) ** 2
    gain_eve_sq = path_gain(cfg.geom_eve) ** 2
    rate_factor = 2.0 ** cfg.rs

    m_slope = rate_factor * gain_eve_sq * cfg.snr_tx_eve / (gain_ell_sq * cfg.snr_tx_ell)
    l_offset = (rate_factor - 1.0) / (cfg.snr_tx_ell * gain_ell_sq) if cfg.rs > 0 else 0.0
    return SecrecyParams(m_slope=m_slope, l_offset=l_offset)


def avg_snr(cfg: SystemConfig) -> AverageSnr:
    """Average SNRs P h_l,x^2 E[|h_x|^2] / sigma_x^2 at both receivers."""
    h1 = alpha_mu_moment(1, cfg.fading)
    h2 = alpha_mu_moment(2, cfg.fading)
    n = cfg.n_elements
    pe_mean = pe_mean_sq(cfg.pe)

    snr_ell = cfg.snr_tx_ell * path_gain(cfg.geom_ell) ** 2 * pe_mean * n * (h2 ** 2 + (n - 1) * h1 ** 4)
    snr_eve = cfg.snr_tx_eve * path_gain(cfg.geom_eve) ** 2 * pe_mean * n * h2 ** 2
    return AverageSnr(snr_ell=snr_ell, snr_eve=snr_eve)


def advantage_ratio(cfg: SystemConfig) -> float:
    """
    Average-SNR advantage (1 + (N-1) H1^4 / H2^2) h_l,ell^2 / h_l,e^2 of the legitimate node.

    Equals snr_ell / snr_eve when both noise variances are equal; grows with N.
    """
    h1 = alpha_mu_moment(1, cfg.fading)
    h2 = alpha_mu_moment(2, cfg.fading)
    coherent_gain = 1.0 + (cfg.n_elements - 1) * h1 ** 4 / h2 ** 2
    return coherent_gain * path_gain(cfg.geom_ell) ** 2 / path_gain(cfg.geom_eve) ** 2
