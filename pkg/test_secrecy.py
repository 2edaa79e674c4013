"""Test script for the secrecy metrics: outage parameters, integrands, SOP, IP and the high-SNR expansion."""

import math
from functools import lru_cache

import numpy as np
import pytest
from dotenv import load_dotenv

load_dotenv()

from channel.pathloss import path_gain
from config.presets import EVE_DISTANCE_DR_EVE_M, EVE_DISTANCE_RATES, HIGH_SNR_ELEMENT_COUNTS
from config.settings import MONTE_CARLO_DEFAULTS
from core.models import Branch, McRun, SeriesControl, SystemConfig
from core.specfun import q_function
from secrecy.integrands import (
    eve_density_at,
    sop_integrand_complement,
    sop_integrand_d1,
    sop_integrand_d2,
    sop_integrand_density,
    sop_integrand_series,
)
from secrecy.outage import asymptotic_components, ip, sop, sop_asymptotic
from secrecy.params import advantage_ratio, avg_snr, secrecy_params
from secrecy.reference import adaptive_outage_reference
from simulation.montecarlo import LinkSamples, empirical_sop, simulate_link
from stats.eve import compute_eve_stats, pdf_h_e_sq
from stats.legit import compute_legit_stats
from utils.config_file import load_system_config

FAST = {"cross_check": False}


def _config(preset: str, **overrides) -> SystemConfig:
    return load_system_config(preset=preset, overrides=overrides)


@lru_cache(maxsize=None)
def _eve_distance_samples() -> LinkSamples:
    return simulate_link(_config("eve_distance"), McRun(n_trials=MONTE_CARLO_DEFAULTS["test_trials"], seed=2024))


def _at_eve_distance(samples: LinkSamples, cfg: SystemConfig) -> LinkSamples:
    # gains do not depend on geometry; only the received SNRs are rescaled
    gamma_eve = cfg.snr_tx_eve * path_gain(cfg.geom_eve) ** 2 * samples.h_eve_sq
    return samples._replace(gamma_eve=gamma_eve)


def test_secrecy_params():
    """Test the slope and offset of the outage event."""
    print("=" * 80)
    print("TEST: Outage Event Parameters")
    print("=" * 80)

    assert secrecy_params(_config("baseline", rs=0.0)).l_offset == 0.0

    # identical links: M = 2^Rs
    twin = secrecy_params(_config("baseline", dr_eve_m=20.0, rs=1.0))
    assert twin.m_slope == pytest.approx(2.0, rel=1e-12)
    assert twin.l_offset > 0

    slopes = [secrecy_params(_config("eve_distance", dr_eve_m=d)).m_slope for d in EVE_DISTANCE_DR_EVE_M]
    assert all(later < earlier for earlier, later in zip(slopes, slopes[1:]))
    print(f"  M over d_re: {[f'{m:.3e}' for m in slopes]}")
    print("✓ Outage parameter test passed\n")


def test_average_snr():
    """Test average SNR ordering and the advantage ratio."""
    print("=" * 80)
    print("TEST: Average SNR")
    print("=" * 80)

    cfg = _config("baseline")
    snr = avg_snr(cfg)
    assert snr.snr_ell > snr.snr_eve > 0
    assert snr.snr_ell / snr.snr_eve == pytest.approx(advantage_ratio(cfg), rel=1e-12)

    ratios = [advantage_ratio(_config("baseline", n_elements=n)) for n in (10, 20, 40)]
    assert ratios[0] < ratios[1] < ratios[2]
    print(f"  snr_ell={snr.snr_ell:.4e}, snr_eve={snr.snr_eve:.4e}")
    print("✓ Average SNR test passed\n")


def test_integrands():
    """Test the origin values, positivity and the 1/u substitution of the integrands."""
    print("=" * 80)
    print("TEST: Outage Integrands")
    print("=" * 80)

    cfg = _config("eve_distance")
    ls = compute_legit_stats(cfg.n_elements, cfg.fading, cfg.pe)
    es = compute_eve_stats(cfg.n_elements, cfg.fading, cfg.pe)
    root = math.sqrt(ls.snr_ratio)

    direct = secrecy_params(cfg.replace(rs=0.0))
    origin = pdf_h_e_sq(0.0, es)
    assert sop_integrand_d2(0.0, direct, ls, es) == pytest.approx(q_function(-root) * origin, rel=1e-12)
    assert sop_integrand_complement(0.0, direct, ls, es) == pytest.approx(q_function(root) * origin, rel=1e-12)

    p = secrecy_params(cfg)
    z = np.geomspace(1e-3, 1e3, 200) / p.l_offset
    assert np.all(sop_integrand_d2(z, p, ls, es) >= 0)

    # at z = 1/(2L): u = 2L, Jacobian 4 L^2, density argument L / M
    z_mid = 1.0 / (2.0 * p.l_offset)
    u = 2.0 * p.l_offset
    arg = (math.sqrt(u) / cfg.pe.a0 - math.sqrt(ls.g_n)) / math.sqrt(ls.psi_n)
    expected = 4.0 * p.l_offset ** 2 * q_function(arg) * pdf_h_e_sq(p.l_offset / p.m_slope, es)
    assert sop_integrand_d2(z_mid, p, ls, es) == pytest.approx(expected, rel=1e-12)
    assert sop_integrand_density(z_mid, p, es) == pytest.approx(4.0 * p.l_offset ** 2 * pdf_h_e_sq(p.l_offset / p.m_slope, es), rel=1e-12)

    # below the offset the density factor vanishes
    assert eve_density_at(0.5 * p.l_offset, p, es)[0] == 0.0

    # B_N times the order-k integrands adds up to the series integrand
    ctrl = SeriesControl(k_max=5)
    z = np.linspace(0.05, 0.95, 19) / p.l_offset
    total = math.exp(ls.log_b_n) * sum(sop_integrand_d1(k, z, p, ls, es) for k in range(6))
    series = sop_integrand_series(z, p, ls, es, ctrl)
    assert np.all(series > 0)
    assert np.allclose(total, series, rtol=1e-10, atol=0.0)
    assert sop_integrand_d1(3, 1.5 / p.l_offset, p, ls, es) == 0.0
    for k in range(4):
        assert sop_integrand_d1(k, 0.0, direct, ls, es) == 0.0
        assert sop_integrand_d1(k, 0.5 * ls.knee, direct, ls, es) > 0.0
    print("✓ Integrand test passed\n")


def test_intercept_probability():
    """Test the zero-rate identity, SNR invariance and the decrease in N."""
    print("=" * 80)
    print("TEST: Intercept Probability")
    print("=" * 80)

    cfg = _config("baseline", **FAST)
    base = ip(cfg)
    assert base.branch == Branch.GAUSS_LAGUERRE
    assert sop(cfg.replace(rs=0.0)).value == base.value

    louder = cfg.replace(snr_tx_ell=4 * cfg.snr_tx_ell, snr_tx_eve=4 * cfg.snr_tx_eve)
    assert ip(louder).value == base.value

    values = [ip(_config("baseline", n_elements=n, **FAST)).value for n in (20, 40, 60, 80)]
    assert all(later < earlier for earlier, later in zip(values, values[1:])), values
    print(f"  IP over N: {[f'{v:.3e}' for v in values]}")
    print("✓ Intercept probability test passed\n")


def test_sop_monotone_in_elements():
    """Test that the SOP does not increase with the RIS size."""
    print("=" * 80)
    print("TEST: SOP vs RIS Size")
    print("=" * 80)

    values = [sop(_config("baseline", n_elements=n, **FAST)).value for n in (20, 40, 60, 80)]
    assert all(later <= earlier for earlier, later in zip(values, values[1:])), values
    print(f"  SOP over N: {[f'{v:.3e}' for v in values]}")
    print("✓ SOP monotonicity test passed\n")


def test_simpson_against_adaptive():
    """Test Simpson-branch SOP and Gauss-Laguerre IP against adaptive quadrature."""
    print("=" * 80)
    print("TEST: Simpson vs Adaptive Quadrature")
    print("=" * 80)

    rng = np.random.default_rng(41)
    gaps = []
    for _ in range(40):
        cfg = _config(
            "eve_distance",
            snr_db=float(rng.uniform(25.0, 38.0)),
            dr_eve_m=float(rng.uniform(10.0, 30.0)),
            rs=float(rng.uniform(0.2, 1.0)),
            simpson_order=32768,
        )
        result = sop(cfg)
        assert result.simpson_value is not None and result.reference_gap is not None
        if result.branch != Branch.SIMPSON:
            continue
        assert result.value == result.simpson_value
        assert result.reference_gap <= 1e-3, f"{cfg.rs:.3f} bits: gap {result.reference_gap:.3e}"
        assert not any("adaptive reference" in note for note in result.diagnostics)
        gaps.append(result.reference_gap)
        if len(gaps) == 10:
            break
    assert len(gaps) == 10, f"only {len(gaps)} configurations stayed on the Simpson branch"
    print(f"  ✓ 10 random Simpson configurations, largest gap {max(gaps):.3e}")

    # unresolved grid: the Simpson value is kept next to the reported fallback value
    cfg = _config("eve_distance", dr_eve_m=5.0, cross_check=True)
    result = sop(cfg)
    reference = adaptive_outage_reference(cfg)
    assert result.simpson_value is not None
    assert result.reference_gap == pytest.approx(abs(result.value - reference), abs=1e-15)
    if result.branch == Branch.GAUSS_LAGUERRE:
        assert any(f"value {result.simpson_value:.6e}" in note for note in result.diagnostics)
        assert result.reference_gap <= 1e-3
    if abs(result.simpson_value - reference) > 1e-3:
        assert any(note.startswith("Simpson value") for note in result.diagnostics)
    print(f"  ✓ d_re=5: {result.value:.6e} ({result.branch.value}), Simpson {result.simpson_value:.6e}")

    for cfg in (
        _config("baseline", n_elements=20, **FAST),
        _config("baseline", n_elements=60, **FAST),
        _config("eve_distance", dr_eve_m=5.0, **FAST),
        _config("eve_distance", dr_eve_m=30.0, **FAST),
        _config("high_snr", **FAST),
    ):
        value = ip(cfg).value
        reference = adaptive_outage_reference(cfg.replace(rs=0.0))
        assert abs(value - reference) <= 1e-3, f"{value} vs {reference}"
    print("  ✓ Gauss-Laguerre IP within 1e-3 of adaptive quadrature")
    print("✓ Simpson comparison test passed\n")


def test_sop_monotone_in_rate():
    """Test that the SOP does not decrease with the secrecy rate and IP ignores the SNR."""
    print("=" * 80)
    print("TEST: SOP vs Secrecy Rate")
    print("=" * 80)

    values = [sop(_config("eve_distance", snr_db=30.0, rs=rs, **FAST)).value for rs in (0.0, 0.1, 0.2, 0.5, 1.0)]
    assert all(later >= earlier for earlier, later in zip(values, values[1:])), values
    print(f"  SOP over Rs: {[f'{v:.3e}' for v in values]}")

    intercepts = [ip(_config("baseline", snr_db=snr_db, dr_eve_m=20.0, **FAST)).value for snr_db in (20.0, 40.0, 60.0)]
    assert intercepts[1] == pytest.approx(intercepts[0], rel=1e-12)
    assert intercepts[2] == pytest.approx(intercepts[0], rel=1e-12)
    print(f"  IP at 20/40/60 dB: {intercepts[0]:.6e}")
    print("✓ Secrecy rate test passed\n")


def test_zero_order_series():
    """Test that the leading term alone nearly reproduces the SOP over the eavesdropper distance."""
    print("=" * 80)
    print("TEST: Zero-Order Series")
    print("=" * 80)

    for d in EVE_DISTANCE_DR_EVE_M:
        leading = sop(_config("eve_distance", dr_eve_m=d, **FAST))
        full = sop(_config("eve_distance", dr_eve_m=d, k_max="auto", **FAST))
        assert leading.k_max_used == 0 and full.k_max_used > 0
        assert full.value >= leading.value - 1e-4
        assert full.value - leading.value <= 0.02, f"d_re={d}: {full.value} vs {leading.value}"
        print(f"  ✓ d_re={d}: K=0 {leading.value:.4e}, K={full.k_max_used} {full.value:.4e}")
    print("✓ Zero-order series test passed\n")


def test_high_snr_range():
    """Test that the exact SOP stays finite and above the IP over the high-SNR preset."""
    print("=" * 80)
    print("TEST: High-SNR Preset Range")
    print("=" * 80)

    for snr_db in (20.0, 40.0):
        for n in HIGH_SNR_ELEMENT_COUNTS:
            cfg = _config("high_snr", snr_db=snr_db, n_elements=n, **FAST)
            result = sop(cfg)
            assert math.isfinite(result.value) and 0.0 <= result.value <= 1.0
            assert result.value >= ip(cfg).value
            print(f"  ✓ {snr_db:.0f} dB, N={n}: {result.value:.4e} ({result.branch.value})")
    print("✓ High-SNR range test passed\n")


def test_asymptotic_components():
    """Test the zero-rate identity and the boundary term in N."""
    print("=" * 80)
    print("TEST: Asymptotic Components")
    print("=" * 80)

    cfg = _config("high_snr", rs=0.0)
    assert sop_asymptotic(cfg).value == ip(cfg).value
    assert sop_asymptotic(cfg).branch == Branch.ASYMPTOTIC

    boundary = [asymptotic_components(_config("high_snr", n_elements=n)).o_n for n in (20, 40, 60, 80)]
    assert all(later < earlier for earlier, later in zip(boundary, boundary[1:]))
    assert all(value > 0 for value in boundary)
    print(f"  O_N over N: {[f'{v:.3e}' for v in boundary]}")
    print("✓ Asymptotic component test passed\n")


def test_asymptotic_convergence():
    """Test that the high-SNR expansion approaches the exact SOP with diversity order one."""
    print("=" * 80)
    print("TEST: High-SNR Convergence")
    print("=" * 80)

    for n in HIGH_SNR_ELEMENT_COUNTS:
        gaps = {}
        for snr_db in (40.0, 80.0):
            cfg = _config("high_snr", n_elements=n, snr_db=snr_db, **FAST)
            gaps[snr_db] = abs(sop_asymptotic(cfg).value - sop(cfg).value)
        assert gaps[80.0] <= 0.005
        assert gaps[80.0] <= gaps[40.0]
        print(f"  ✓ N={n}: gap {gaps[40.0]:.3e} at 40 dB, {gaps[80.0]:.3e} at 80 dB")

    snrs = np.array([50.0, 60.0, 70.0, 80.0])
    deviations = []
    for snr_db in snrs:
        cfg = _config("high_snr", snr_db=snr_db)
        deviations.append(abs(sop_asymptotic(cfg).value - asymptotic_components(cfg).floor))
    slope = np.polyfit(snrs / 10.0, np.log10(deviations), 1)[0]
    assert slope == pytest.approx(-1.0, abs=0.1)
    print(f"  log-log slope {slope:.4f}")
    print("✓ High-SNR convergence test passed\n")


def test_outage_against_simulation():
    """Test SOP and IP over the eavesdropper distance against Monte-Carlo."""
    print("=" * 80)
    print("TEST: Outage vs Monte-Carlo")
    print("=" * 80)

    samples = _eve_distance_samples()
    for rs in EVE_DISTANCE_RATES:
        values = []
        for d in EVE_DISTANCE_DR_EVE_M:
            cfg = _config("eve_distance", dr_eve_m=d, rs=rs, **FAST)
            analytic = sop(cfg).value
            estimate = empirical_sop(_at_eve_distance(samples, cfg), rs)
            assert abs(analytic - estimate.point) <= max(0.02, 3 * estimate.std_err), (
                f"rs={rs}, d_re={d}: {analytic:.4e} vs {estimate.point:.4e}"
            )
            if rs > 0:
                assert analytic >= ip(cfg).value
            values.append(analytic)
        assert all(later < earlier for earlier, later in zip(values, values[1:])), values
        print(f"  ✓ rs={rs}: {[f'{v:.2e}' for v in values]}")
    print("✓ Simulation comparison test passed\n")


if __name__ == "__main__":
    print("\n" + "=" * 80)
    print("SECRECY METRICS - TEST SUITE")
    print("=" * 80 + "\n")

    test_secrecy_params()
    test_average_snr()
    test_integrands()
    test_intercept_probability()
    test_sop_monotone_in_elements()
    test_simpson_against_adaptive()
    test_sop_monotone_in_rate()
    test_zero_order_series()
    test_high_snr_range()
    test_asymptotic_components()
    test_asymptotic_convergence()
    test_outage_against_simulation()

    print("=" * 80)
    print("ALL TESTS COMPLETED")
    print("=" * 80)
