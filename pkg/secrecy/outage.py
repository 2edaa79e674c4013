"""Secrecy outage and intercept probabilities."""

import logging
import math
from typing import NamedTuple, Optional

import numpy as np

from config.settings import get_quadrature_defaults
from core.errors import BoundOverflowError
from core.models import (
    Branch,
    EveStats,
    LegitStats,
    SecrecyParams,
    SecrecyResult,
    SeriesControl,
    SystemConfig,
)
from core.specfun import gauss_laguerre_integrate, gauss_laguerre_rule, q_function, simpson_sum
from secrecy.integrands import sop_integrand_density
from secrecy.params import secrecy_params
from secrecy.reference import adaptive_outage_reference
from stats.eve import compute_eve_stats, pdf_h_e_sq
from stats.legit import cdf_h_ell_sq, compute_legit_stats, resolve_series_control, truncation_bound

logger = logging.getLogger(__name__)

_QUAD = get_quadrature_defaults()
_MIN_SIMPSON_INTERVALS = 8


class _Context(NamedTuple):
    params: SecrecyParams
    legit: LegitStats
    eve: EveStats
    ctrl: SeriesControl
    diagnostics: list[str]


class AsymptoticComponents(NamedTuple):
    """High-SNR decomposition: sop_asymptotic = floor + l_offset * slope."""

    floor: float
    slope: float
    o_n: float
    l_offset: float


class _SimpsonEstimate(NamedTuple):
    value: float
    normalization: float
    halved: float


def _context(cfg: SystemConfig) -> _Context:
    diagnostics: list[str] = []
    ls = compute_legit_stats(cfg.n_elements, cfg.fading, cfg.pe)
    diagnostics.extend(ls.diagnostics)
    es = compute_eve_stats(cfg.n_elements, cfg.fading, cfg.pe)
    ctrl = resolve_series_control(cfg.series, ls, diagnostics)
    return _Context(secrecy_params(cfg), ls, es, ctrl, diagnostics)


def _bound_value(k_max: int, ls: LegitStats) -> float:
    try:
        return truncation_bound(k_max, ls).w
    except BoundOverflowError:
        return math.inf


def _clamped_result(
    value: float,
    branch: Branch,
    ctx: _Context,
    quad_order: int,
    simpson_value: Optional[float] = None,
    reference: Optional[float] = None,
) -> SecrecyResult:
    clamped = min(max(value, 0.0), 1.0)
    if clamped != value:
        message = f"Outage value {value:.3e} clamped to [0, 1]"
        logger.info(message)
        ctx.diagnostics.append(message)

    reference_gap = None if reference is None else abs(clamped - reference)
    if branch != Branch.SIMPSON and reference_gap is not None and reference_gap > _QUAD["cross_check_tol"]:
        message = f"Reported value {clamped:.6e} differs from adaptive reference {reference:.6e} by {reference_gap:.2e}"
        logger.warning(message)
        ctx.diagnostics.append(message)

    return SecrecyResult(
        value=clamped,
        branch=branch,
        k_max_used=ctx.ctrl.k_max,
        truncation_bound=_bound_value(ctx.ctrl.k_max, ctx.legit),
        quad_order=quad_order,
        simpson_value=simpson_value,
        reference_gap=reference_gap,
        diagnostics=ctx.diagnostics,
    )


def _gauss_laguerre_outage(ctx: _Context, order: int) -> float:
    """int_0^inf F(L + M t) f(t) dt with the rule stretched to the density scale."""
    p, ls, es, ctrl = ctx.params, ctx.legit, ctx.eve, ctx.ctrl

    def integrand(t: np.ndarray) -> np.ndarray:
        return cdf_h_ell_sq(p.l_offset + p.m_slope * t, ls, ctrl) * pdf_h_e_sq(t, es)

    return gauss_laguerre_integrate(integrand, gauss_laguerre_rule(order), scale=es.scale)


def _simpson_outage(ctx: _Context, n_intervals: int) -> _SimpsonEstimate:
    """
    Alternative extended Simpson evaluation of the substituted outage integral.

    Samples z_s = s / (L S), s = 1..S+1, of z^-2 F(1/z) f((1/z - L)/M). Also
    returns the normalization integral (ideally 1) and the estimate on every
    second node, which together tell whether the grid resolves the integrand.
    """
    p, ls, es = ctx.params, ctx.legit, ctx.eve
    step = 1.0 / (p.l_offset * n_intervals)
    nodes = step * np.arange(1, n_intervals + 3)

    density = np.asarray(sop_integrand_density(nodes, p, es))
    cdf = cdf_h_ell_sq(1.0 / nodes, ls, ctx.ctrl, ctx.diagnostics)
    weighted = cdf * density

    value = simpson_sum(weighted[: n_intervals + 1], step) / p.m_slope
    normalization = simpson_sum(density[: n_intervals + 1], step) / p.m_slope

    half = n_intervals // 2
    if half >= _MIN_SIMPSON_INTERVALS:
        halved = simpson_sum(weighted[1 : 2 * half + 2 : 2], 2.0 * step) / p.m_slope
    else:
        halved = value
    return _SimpsonEstimate(value=value, normalization=normalization, halved=halved)


def ip(cfg: SystemConfig) -> SecrecyResult:
    """
    Intercept probability Pr(gamma_e >= gamma_ell).

    Evaluated with the Gauss-Laguerre rule on int F(M t) f(t) dt, the nodes
    stretched to the eavesdropper density scale.

    Args:
        cfg: Scenario; its secrecy rate is ignored

    Returns:
        SecrecyResult on the gauss_laguerre branch
    """
    if cfg.rs != 0:
        cfg = cfg.replace(rs=0.0)
    ctx = _context(cfg)
    value = _gauss_laguerre_outage(ctx, cfg.quad.laguerre_order)
    return _clamped_result(value, Branch.GAUSS_LAGUERRE, ctx, cfg.quad.laguerre_order)


def sop(cfg: SystemConfig) -> SecrecyResult:
    """
    Secrecy outage probability Pr(log2((1 + gamma_ell)/(1 + gamma_e)) <= Rs).

    rs = 0 delegates to ip(). Otherwise the alternative extended Simpson rule
    runs on the 1/u substitution of the outage integral. When the offset L
    is numerically degenerate, or the Simpson grid fails its normalization or
    halving check, the value comes from the Gauss-Laguerre rule on the
    shifted integral instead and the switch is recorded in diagnostics.

    With cfg.quad.cross_check the Simpson value is compared against an
    adaptive-quadrature reference on either branch; a gap above 1e-3 is
    logged and noted. Whenever the Simpson rule ran its value is kept in
    simpson_value, also when the fallback supplies the reported value.

    Args:
        cfg: Scenario with rs >= 0

    Returns:
        SecrecyResult naming the branch that produced the value
    """
    if cfg.rs == 0:
        return ip(cfg)

    ctx = _context(cfg)
    p = ctx.params
    n_intervals = cfg.quad.simpson_order

    if p.l_offset < _QUAD["degenerate_offset"]:
        message = f"Offset L={p.l_offset:.3e} is degenerate; using Gauss-Laguerre"
        logger.info(message)
        ctx.diagnostics.append(message)
        return _gauss_laguerre_fallback(cfg, ctx)

    estimate = _simpson_outage(ctx, n_intervals)
    reference = adaptive_outage_reference(cfg, ctx.ctrl) if cfg.quad.cross_check else None
    if reference is not None:
        simpson_gap = abs(estimate.value - reference)
        if simpson_gap > _QUAD["cross_check_tol"]:
            message = (
                f"Simpson value {estimate.value:.6e} differs from adaptive reference "
                f"{reference:.6e} by {simpson_gap:.2e}"
            )
            logger.warning(message)
            ctx.diagnostics.append(message)

    tol = _QUAD["resolution_tol"]
    normalization_error = abs(estimate.normalization - 1.0)
    halving_error = abs(estimate.value - estimate.halved)
    if normalization_error <= tol and halving_error <= tol:
        return _clamped_result(
            estimate.value, Branch.SIMPSON, ctx, n_intervals, simpson_value=estimate.value, reference=reference
        )

    message = (
        f"Simpson grid with S={n_intervals} does not resolve the integrand "
        f"(value {estimate.value:.6e}, normalization error {normalization_error:.2e}, "
        f"halving error {halving_error:.2e}); using Gauss-Laguerre"
    )
    logger.info(message)
    ctx.diagnostics.append(message)
    return _gauss_laguerre_fallback(cfg, ctx, simpson_value=estimate.value, reference=reference)


def _gauss_laguerre_fallback(
    cfg: SystemConfig,
    ctx: _Context,
    simpson_value: Optional[float] = None,
    reference: Optional[float] = None,
) -> SecrecyResult:
    value = _gauss_laguerre_outage(ctx, cfg.quad.laguerre_order)
    return _clamped_result(
        value, Branch.GAUSS_LAGUERRE, ctx, cfg.quad.laguerre_order, simpson_value=simpson_value, reference=reference
    )


def _asymptotic_components(ctx: _Context, order: int) -> AsymptoticComponents:
    p, ls, es, ctrl = ctx.params, ctx.legit, ctx.eve, ctx.ctrl
    phi = ls.pe.phi
    scale = es.scale
    rule = gauss_laguerre_rule(order)

    def floor_integrand(t: np.ndarray) -> np.ndarray:
        return cdf_h_ell_sq(p.m_slope * t, ls, ctrl) * pdf_h_e_sq(t, es)

    # -f'(t) written so the 1/t singularities of its two parts cancel at the origin
    def slope_integrand(t: np.ndarray) -> np.ndarray:
        density = pdf_h_e_sq(t, es)
        neg_derivative = -(phi / 2.0 - 1.0) * density / t + phi * np.exp(-t / scale) / (2.0 * scale * t)
        return cdf_h_ell_sq(p.m_slope * t, ls, ctrl) * neg_derivative

    floor = gauss_laguerre_integrate(floor_integrand, rule, scale=scale)
    derivative_term = gauss_laguerre_integrate(slope_integrand, rule, scale=scale) / p.m_slope
    o_n = phi * q_function(math.sqrt(ls.snr_ratio)) / (p.m_slope * scale * (phi - 2.0))
    return AsymptoticComponents(floor=floor, slope=derivative_term - o_n, o_n=o_n, l_offset=p.l_offset)


def asymptotic_components(cfg: SystemConfig) -> AsymptoticComponents:
    """
    First-order expansion of the SOP in the offset L.

    floor is the outage value at L = 0 (the intercept probability), slope
    the first-order coefficient, and o_n the boundary term
    phi Q(sqrt(G/Psi)) / (M N H2^2 A0^2 (phi - 2)).
    """
    return _asymptotic_components(_context(cfg), cfg.quad.laguerre_order)


def sop_asymptotic(cfg: SystemConfig) -> SecrecyResult:
    """
    High-SNR SOP: floor + L (derivative term - O_N).

    The deviation from the floor is linear in L, hence in 1/SNR, which gives
    secrecy diversity order one. At rs = 0 the value is the intercept
    probability.
    """
    ctx = _context(cfg)
    parts = _asymptotic_components(ctx, cfg.quad.laguerre_order)
    value = parts.floor + parts.l_offset * parts.slope if parts.l_offset > 0 else parts.floor
    return _clamped_result(value, Branch.ASYMPTOTIC, ctx, cfg.quad.laguerre_order)
