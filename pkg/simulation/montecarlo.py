"""Monte-Carlo simulation of the RIS wiretap link."""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from typing import NamedTuple, Optional

import numpy as np

from channel.pathloss import path_gain
from config.settings import get_monte_carlo_defaults
from core.errors import InsufficientSamplesError
from core.models import McEstimate, McRun, SystemConfig
from simulation.sampling import sample_alpha_mu, sample_pe_sq
from simulation.streams import chunk_generator, chunk_sizes

logger = logging.getLogger(__name__)

_MC = get_monte_carlo_defaults()


class LinkSamples(NamedTuple):
    """Per-trial end-to-end gains and received SNRs at both receivers."""

    h_ell_sq: np.ndarray
    h_eve_sq: np.ndarray
    gamma_ell: np.ndarray
    gamma_eve: np.ndarray

    @property
    def n_trials(self) -> int:
        return len(self.gamma_ell)


def _simulate_chunk(
    cfg: SystemConfig,
    seed: int,
    chunk_index: int,
    size: int,
    align_eve_phases: bool,
) -> LinkSamples:
    rng = chunk_generator(seed, chunk_index)
    shape = (size, cfg.n_elements)

    # Draw order is part of the stream contract
    h = sample_alpha_mu(shape, cfg.fading, rng)
    g_ell = sample_alpha_mu(shape, cfg.fading, rng)
    g_eve = sample_alpha_mu(shape, cfg.fading, rng)
    phases = rng.uniform(0.0, 2.0 * math.pi, shape)
    pe_ell = sample_pe_sq(size, cfg.pe, rng)
    pe_eve = sample_pe_sq(size, cfg.pe, rng)
    if align_eve_phases:
        phases = np.zeros_like(phases)

    # Optimal RIS phases add the legitimate products coherently
    h_f_ell = np.sum(h * g_ell, axis=1)
    products = h * g_eve
    in_phase = np.sum(products * np.cos(phases), axis=1)
    quadrature = np.sum(products * np.sin(phases), axis=1)

    h_ell_sq = pe_ell * h_f_ell ** 2
    h_eve_sq = pe_eve * (in_phase ** 2 + quadrature ** 2)
    return LinkSamples(
        h_ell_sq=h_ell_sq,
        h_eve_sq=h_eve_sq,
        gamma_ell=cfg.snr_tx_ell * path_gain(cfg.geom_ell) ** 2 * h_ell_sq,
        gamma_eve=cfg.snr_tx_eve * path_gain(cfg.geom_eve) ** 2 * h_eve_sq,
    )


def simulate_link(
    cfg: SystemConfig,
    run: McRun,
    workers: Optional[int] = None,
    align_eve_phases: bool = False,
) -> LinkSamples:
    """
    Simulate run.n_trials independent realizations of both links.

    Each chunk draws from its own (seed, chunk) substream and chunks are
    concatenated in index order, so the result is identical for any worker
    count.

    Args:
        cfg: Scenario
        run: Trial count, seed and chunk size
        workers: Thread count (defaults to MC_WORKERS)
        align_eve_phases: Force every eavesdropper phase to zero (testing hook)

    Returns:
        LinkSamples with one entry per trial
    """
    workers = workers or _MC["workers"]
    sizes = chunk_sizes(run.n_trials, run.chunk_size)
    logger.info(f"Simulating {run.n_trials} trials in {len(sizes)} chunks on {workers} workers (seed {run.seed})")

    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [
            pool.submit(_simulate_chunk, cfg, run.seed, index, size, align_eve_phases)
            for index, size in enumerate(sizes)
        ]
        chunks = [future.result() for future in futures]

    return LinkSamples(*(np.concatenate(parts) for parts in zip(*chunks)))


def _require_samples(n: int) -> None:
    if n < _MC["min_trials"]:
        raise InsufficientSamplesError(f"Need at least {_MC['min_trials']} trials for an oracle estimate, got {n}")


def indicator_estimate(events: np.ndarray) -> McEstimate:
    """Mean of a boolean event array with its normal-approximation standard error."""
    n = events.size
    point = float(np.mean(events))
    return McEstimate(point=point, std_err=math.sqrt(point * (1.0 - point) / n), n_trials=n)


def empirical_sop(samples: LinkSamples, rs: float) -> McEstimate:
    """
    Fraction of trials with gamma_ell <= 2^rs (gamma_e + 1) - 1.

    Raises:
        InsufficientSamplesError: Below 10 000 trials
    """
    _require_samples(samples.n_trials)
    threshold = 2.0 ** rs * (samples.gamma_eve + 1.0) - 1.0
    return indicator_estimate(samples.gamma_ell <= threshold)
