"""Statistics of the legitimate end-to-end gain h_ell^2 under the CLT approximation."""

import logging
import math
from typing import NamedTuple, Optional

import numpy as np
from numpy.typing import ArrayLike
from scipy import special

from channel.fading import alpha_mu_moment
from config.settings import get_series_defaults
from core.errors import BoundOverflowError, DomainError
from core.models import AlphaMuParams, LegitStats, PointingErrorParams, SeriesControl
from core.specfun import FloatOrArray, digamma, log_upper_incomplete_gamma, q_function

logger = logging.getLogger(__name__)

_SERIES = get_series_defaults()
_LOG_TWO_SQRT_PI = math.log(2.0 * math.sqrt(math.pi))
_LOG_MAX_FLOAT = math.log(np.finfo(float).max)
_MIN_ACCURATE_ELEMENTS = 10


class TruncationBound(NamedTuple):
    """Bound on the series truncation error: w, and the regional bounds above and below the knee."""

    w: float
    eps_inside: float
    eps_outside: float


class ErrorGrowth(NamedTuple):
    """Phi(alpha, mu) and its partial derivatives."""

    phi_value: float
    d_alpha: float
    d_mu: float


def compute_legit_stats(n: int, fading: AlphaMuParams, pe: PointingErrorParams) -> LegitStats:
    """
    Compute the CLT parameters of h_ell^2 for an N-element RIS.

    The per-element product |h_n||g_n| has mean H1^2 and second moment H2^2,
    so the optimally phased sum is treated as Gaussian with mean N H1^2 and
    variance Psi_N = N (H2^2 - H1^4).

    Args:
        n: Number of RIS elements
        fading: Alpha-mu parameters shared by both hops
        pe: Pointing-error parameters

    Returns:
        LegitStats; diagnostics carry an accuracy warning when n < 10

    Examples:
        >>> s = compute_legit_stats(1, AlphaMuParams(alpha=2, mu=1), PointingErrorParams(phi=25.7404, a0=0.054))
        >>> round(s.psi_n, 6), round(s.g_n, 6)
        (0.38315, 0.61685)
    """
    if n < 1:
        raise DomainError(f"RIS element count must be positive, got {n}")

    h1 = alpha_mu_moment(1, fading)
    h2 = alpha_mu_moment(2, fading)
    psi_n = n * (h2 ** 2 - h1 ** 4)
    g_n = (n * h1 ** 2) ** 2
    if psi_n <= 0:
        raise DomainError(f"Non-positive CLT variance {psi_n} for {fading}")

    log_b_n = -0.5 * pe.phi * math.log(2.0 * psi_n * pe.a0 ** 2) - _LOG_TWO_SQRT_PI - g_n / (2.0 * psi_n)
    mean_h_ell_sq = n * pe.phi * pe.a0 ** 2 * (h2 ** 2 + (n - 1) * h1 ** 4) / (pe.phi + 2.0)

    diagnostics = []
    if n < _MIN_ACCURATE_ELEMENTS:
        message = f"N={n} is below {_MIN_ACCURATE_ELEMENTS}; the CLT approximation may be inaccurate"
        logger.warning(message)
        diagnostics.append(message)

    return LegitStats(
        n_elements=n,
        h1=h1,
        h2=h2,
        psi_n=psi_n,
        g_n=g_n,
        b_n=math.exp(log_b_n),
        log_b_n=log_b_n,
        mean_h_ell_sq=mean_h_ell_sq,
        pe=pe,
        diagnostics=diagnostics,
    )


def _gamma_argument(z: np.ndarray, s: LegitStats) -> np.ndarray:
    return z / (2.0 * s.psi_n * s.pe.a0 ** 2)


def _log_weighted_terms(k: int, z: np.ndarray, s: LegitStats) -> np.ndarray:
    """log(B_N T_k(z)) for z > 0, written in x = z / (2 Psi A0^2) so B_N never under/overflows."""
    x = _gamma_argument(z, s)
    shape = (k - s.pe.phi + 1.0) / 2.0
    return (
        -s.g_n / (2.0 * s.psi_n)
        - _LOG_TWO_SQRT_PI
        + 0.5 * s.pe.phi * np.log(x)
        + 0.5 * k * math.log(2.0 * s.snr_ratio)
        + log_upper_incomplete_gamma(shape, x)
        - special.gammaln(k + 1)
    )


def series_term(k: int, z: ArrayLike, s: LegitStats) -> FloatOrArray:
    """
    k-th term T_k(z) of the legitimate CDF series (without the B_N factor).

    Every term is positive, so it is evaluated as the exponential of a sum of logs.

    Raises:
        DomainError: If k < 0 or any z <= 0
    """
    if k < 0:
        raise DomainError(f"Series index must be nonnegative, got {k}")
    scalar = np.ndim(z) == 0
    z = np.atleast_1d(np.asarray(z, dtype=float))
    if np.any(z <= 0):
        raise DomainError("Series terms are defined for z > 0")

    values = np.exp(_log_weighted_terms(k, z, s) - s.log_b_n)
    return float(values[0]) if scalar else values


def legit_series_sum(
    z: ArrayLike,
    s: LegitStats,
    ctrl: SeriesControl,
    diagnostics: Optional[list[str]] = None,
) -> FloatOrArray:
    """
    B_N * sum_{k <= K} T_k(z), the pointing-error part of the legitimate CDF.

    With ctrl.empirical the sum runs to K = ctrl.k_max but stops early once
    every z has seen a run of decreasing terms below ctrl.tol.

    Args:
        z: Nonnegative argument(s); the sum vanishes at z = 0
        s: Legitimate-link statistics
        ctrl: Resolved series control (k_max set)
        diagnostics: Optional list that receives a note when empirical
            summation reaches k_max before every term run has settled

    Returns:
        Series value(s)
    """
    if ctrl.k_max is None:
        raise DomainError("Series control must be resolved before summation")

    scalar = np.ndim(z) == 0
    z = np.atleast_1d(np.asarray(z, dtype=float))
    if np.any(z < 0):
        raise DomainError("Legitimate CDF argument must be nonnegative")

    out = np.zeros_like(z)
    positive = z > 0
    if not np.any(positive):
        return float(out[0]) if scalar else out

    zp = z[positive]
    if not ctrl.empirical:
        log_terms = np.stack([_log_weighted_terms(k, zp, s) for k in range(ctrl.k_max + 1)])
        out[positive] = np.exp(special.logsumexp(log_terms, axis=0))
        return float(out[0]) if scalar else out

    log_tol = math.log(ctrl.tol)
    total = np.zeros_like(zp)
    previous = np.full_like(zp, np.inf)
    run = np.zeros(zp.shape, dtype=int)
    for k in range(ctrl.k_max + 1):
        log_term = _log_weighted_terms(k, zp, s)
        total += np.exp(log_term)
        settled = (log_term < log_tol) & (log_term < previous)
        run = np.where(settled, run + 1, 0)
        previous = log_term
        if np.all(run >= _SERIES["stable_run"]):
            logger.debug(f"Series stabilized after {k + 1} terms")
            break
    else:
        unsettled = int(np.count_nonzero(run < _SERIES["stable_run"]))
        message = (
            f"Series did not stabilize within K={ctrl.k_max} at {unsettled} of {zp.size} points; "
            f"the CDF may be inaccurate"
        )
        logger.warning(message)
        if diagnostics is not None:
            diagnostics.append(message)
    out[positive] = total
    return float(out[0]) if scalar else out


def cdf_h_ell_sq(
    z: ArrayLike,
    s: LegitStats,
    ctrl: SeriesControl,
    diagnostics: Optional[list[str]] = None,
) -> FloatOrArray:
    """
    Truncated-series CDF of h_ell^2.

    F(z) = 1 - Q((sqrt(z)/A0 - sqrt(G_N))/sqrt(Psi_N)) + B_N sum_k T_k(z),
    with the leading part evaluated as Q(-arg) so the lower tail keeps full
    relative accuracy.

    Args:
        z: Nonnegative argument(s)
        s: Legitimate-link statistics
        ctrl: Series control; k_max=None selects the order from ctrl.tol
        diagnostics: Optional list that receives a note when clamping moved
            a value by more than ctrl.tol or when empirical summation
            does not stabilize

    Returns:
        Probability value(s) clamped to [0, 1]
    """
    ctrl = resolve_series_control(ctrl, s, diagnostics)
    scalar = np.ndim(z) == 0
    z = np.atleast_1d(np.asarray(z, dtype=float))

    arg = (np.sqrt(z) / s.pe.a0 - math.sqrt(s.g_n)) / math.sqrt(s.psi_n)
    raw = q_function(-arg) + legit_series_sum(z, s, ctrl, diagnostics)
    values = np.clip(raw, 0.0, 1.0)

    excursion = float(np.max(np.abs(raw - values)))
    if excursion > ctrl.tol:
        message = f"Legitimate CDF clamped to [0, 1]; largest excursion {excursion:.3e}"
        logger.info(message)
        if diagnostics is not None:
            diagnostics.append(message)

    return float(values[0]) if scalar else values


def _log_truncation_bound(k_max: int, s: LegitStats) -> float:
    i = np.arange(k_max + 2)
    log_summands = (
        0.5 * i * math.log(1.0 / (2.0 * s.snr_ratio))
        - special.gammaln(i / 2.0 + 1.0)
        - special.gammaln(k_max + 2 - i)
    )
    return (k_max + 1) * math.log(s.snr_ratio) + float(special.logsumexp(log_summands))


def truncation_bound(k_max: int, s: LegitStats) -> TruncationBound:
    """
    Series truncation bound W at order k_max, with its regional forms.

    The error is at most W for z >= A0^2 G_N (eps_inside) and at most 2W
    below the knee (eps_outside).

    Raises:
        BoundOverflowError: If W is not representable (vacuous bound)
    """
    if k_max < 0:
        raise DomainError(f"Truncation order must be nonnegative, got {k_max}")

    log_w = _log_truncation_bound(k_max, s)
    if log_w + math.log(2.0) >= _LOG_MAX_FLOAT:
        raise BoundOverflowError(f"Truncation bound at K={k_max} overflows (log W = {log_w:.1f})")

    w = math.exp(log_w)
    return TruncationBound(w=w, eps_inside=w, eps_outside=2.0 * w)


def regional_bound(z: ArrayLike, s: LegitStats, k_max: int) -> FloatOrArray:
    """Truncation bound that applies at z: W above the knee A0^2 G_N, 2W below it."""
    bound = truncation_bound(k_max, s)
    z = np.asarray(z, dtype=float)
    values = np.where(z >= s.knee, bound.eps_inside, bound.eps_outside)
    return float(values) if values.ndim == 0 else values


def _bound_order(tol: float, s: LegitStats) -> Optional[int]:
    """Smallest K <= cap with 2 W_K <= tol, or None."""
    if math.isinf(tol):
        return 0
    log_half_tol = math.log(tol / 2.0)
    for k in range(_SERIES["k_cap"] + 1):
        if _log_truncation_bound(k, s) <= log_half_tol:
            return k
    return None


def select_k_max(tol: float, s: LegitStats, diagnostics: Optional[list[str]] = None) -> int:
    """
    Smallest truncation order whose doubled bound meets tol.

    Args:
        tol: Target bound on the truncation error
        s: Legitimate-link statistics
        diagnostics: Optional list receiving the fallback warning

    Returns:
        K_max in [0, 200]; 200 when the analytic bound cannot reach tol, in
        which case summation falls back to empirical stabilization
    """
    if not tol > 0:
        raise DomainError(f"Series tolerance must be positive, got {tol}")

    k = _bound_order(tol, s)
    if k is not None:
        return k

    message = (
        f"Truncation bound cannot reach tol={tol:g} for G/Psi={s.snr_ratio:.2f}; "
        f"using K={_SERIES['k_cap']} with empirical stabilization"
    )
    logger.warning(message)
    if diagnostics is not None:
        diagnostics.append(message)
    return _SERIES["k_cap"]


def resolve_series_control(
    ctrl: SeriesControl,
    s: LegitStats,
    diagnostics: Optional[list[str]] = None,
) -> SeriesControl:
    """Fill k_max from the truncation bound when unset; an explicit k_max is kept as is."""
    if ctrl.k_max is not None:
        return ctrl

    k = select_k_max(ctrl.tol, s, diagnostics)
    empirical = _bound_order(ctrl.tol, s) is None
    return SeriesControl(k_max=k, tol=ctrl.tol, empirical=empirical)


def error_growth_diagnostic(fading: AlphaMuParams) -> ErrorGrowth:
    """
    Phi(alpha, mu) = Gamma^2(mu + 1/alpha) / (Gamma(mu) Gamma(mu + 2/alpha)) and its partials.

    The truncation bound grows with G/Psi, which is proportional to
    Phi / (1 - Phi); both partials are positive.

    Examples:
        >>> round(error_growth_diagnostic(AlphaMuParams(alpha=1, mu=1)).phi_value, 12)
        0.5
    """
    a, m = fading.alpha, fading.mu
    log_phi = 2.0 * special.gammaln(m + 1.0 / a) - special.gammaln(m) - special.gammaln(m + 2.0 / a)
    phi_value = math.exp(log_phi)

    psi_one = digamma(m + 1.0 / a)
    psi_two = digamma(m + 2.0 / a)
    d_alpha = phi_value * (2.0 / a ** 2) * (psi_two - psi_one)
    d_mu = phi_value * (2.0 * psi_one - digamma(m) - psi_two)
    return ErrorGrowth(phi_value=phi_value, d_alpha=d_alpha, d_mu=d_mu)


def series_tail(z: ArrayLike, s: LegitStats, k_from: int, k_to: int = _SERIES["reference_terms"]) -> FloatOrArray:
    """B_N * sum_{k_from <= k <= k_to} T_k(z); zero when the range is empty."""
    scalar = np.ndim(z) == 0
    z = np.atleast_1d(np.asarray(z, dtype=float))
    if np.any(z <= 0):
        raise DomainError("Series terms are defined for z > 0")
    if k_from > k_to:
        values = np.zeros_like(z)
    else:
        log_terms = np.stack([_log_weighted_terms(k, z, s) for k in range(k_from, k_to + 1)])
        values = np.exp(special.logsumexp(log_terms, axis=0))
    return float(values[0]) if scalar else values
