"""Empirical distribution estimates used to check the analytic statistics."""

from typing import Callable, NamedTuple, Optional

import numpy as np
from numpy.typing import ArrayLike

from core.errors import DomainError

# Subintervals per refined bracket in the exact KS search
_KS_SPLIT = 16


class Histogram(NamedTuple):
    """Density-normalized histogram: bin edges and per-bin density."""

    edges: np.ndarray
    density: np.ndarray

    @property
    def centers(self) -> np.ndarray:
        return 0.5 * (self.edges[:-1] + self.edges[1:])

    @property
    def widths(self) -> np.ndarray:
        return np.diff(self.edges)


def _nonempty(samples: ArrayLike) -> np.ndarray:
    samples = np.asarray(samples, dtype=float).ravel()
    if samples.size == 0:
        raise DomainError("Empirical estimates need at least one sample")
    return samples


def empirical_cdf(samples: ArrayLike, grid: ArrayLike) -> np.ndarray:
    """
    Fraction of samples <= each grid point.

    Examples:
        >>> empirical_cdf([2.0], [1.0, 3.0]).tolist()
        [0.0, 1.0]
    """
    ordered = np.sort(_nonempty(samples))
    grid = np.asarray(grid, dtype=float)
    if np.any(np.diff(grid) < 0):
        raise DomainError("Evaluation grid must be sorted")
    return np.searchsorted(ordered, grid, side="right") / ordered.size


def empirical_pdf_hist(
    samples: ArrayLike,
    n_bins: int,
    upper: Optional[float] = None,
) -> Histogram:
    """
    Histogram normalized by bin width and total sample count.

    With the default range (the sample span) the bin masses sum to one.
    An explicit upper edge drops the samples above it, so the masses then
    sum to the retained fraction.
    """
    samples = _nonempty(samples)
    if n_bins < 1:
        raise DomainError(f"Histogram needs at least one bin, got {n_bins}")

    low = float(samples.min())
    high = float(samples.max()) if upper is None else upper
    counts, edges = np.histogram(samples, bins=n_bins, range=(low, high))
    return Histogram(edges=edges, density=counts / (np.diff(edges) * samples.size))


def histogram_l1_distance(hist: Histogram, pdf: Callable[[np.ndarray], np.ndarray]) -> float:
    """Binned L1 distance sum |hist - pdf(center)| * width."""
    return float(np.sum(np.abs(hist.density - pdf(hist.centers)) * hist.widths))


def ks_distance(
    samples: ArrayLike,
    cdf: Callable[[np.ndarray], np.ndarray],
    n_points: int = 2000,
) -> float:
    """
    Exact Kolmogorov-Smirnov distance sup |F_n - F| over all samples.

    The model CDF starts on n_points evenly spaced order statistics. Between
    two evaluated indices a < b monotonicity bounds every skipped point by
    max(F_b - (a+1)/n, b/n - F_a); brackets whose bound exceeds the current
    maximum are subdivided until none remain, so the result equals the
    all-point statistic while typically evaluating far fewer points.

    Args:
        samples: Observed values
        cdf: Vectorized model distribution function
        n_points: Size of the initial evaluation grid

    Returns:
        The two-sided statistic max_i max(F_i - i/n, (i+1)/n - F_i)
    """
    ordered = np.sort(_nonempty(samples))
    n = ordered.size
    model = np.full(n, np.nan)

    def evaluate(indices: np.ndarray) -> float:
        points = ordered[indices]
        model[indices] = np.broadcast_to(np.asarray(cdf(points), dtype=float), points.shape)
        return float(np.max(np.maximum(model[indices] - indices / n, (indices + 1) / n - model[indices])))

    known = np.unique(np.linspace(0, n - 1, min(max(n_points, 2), n)).astype(int))
    best = evaluate(known)
    while known.size > 1:
        a, b = known[:-1], known[1:]
        bound = np.maximum(model[b] - (a + 1) / n, b / n - model[a])
        refine = (b - a > 1) & (bound > best)
        if not np.any(refine):
            break
        lo, hi = a[refine], b[refine]
        split = lo[:, None] + ((hi - lo)[:, None] * np.arange(1, _KS_SPLIT)) // _KS_SPLIT
        fresh = np.setdiff1d(split.ravel(), known)
        best = max(best, evaluate(fresh))
        known = np.union1d(known, fresh)
    return best
