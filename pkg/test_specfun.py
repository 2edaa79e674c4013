"""Test script for the numerical kernel: Laguerre rules, Simpson weights and special functions."""

import math

import numpy as np
import pytest
from dotenv import load_dotenv
from numpy.polynomial.laguerre import laggauss
from scipy import integrate

load_dotenv()

from core.errors import DomainError
from core.specfun import (
    alt_extended_simpson_weights,
    digamma,
    gauss_laguerre_integrate,
    gauss_laguerre_rule,
    laguerre_eval,
    log_upper_incomplete_gamma,
    lower_incomplete_gamma_regularized,
    q_function,
    simpson_sum,
    upper_incomplete_gamma,
)


def test_laguerre_polynomials():
    """Test the three-term recurrence on hand-checked values."""
    print("=" * 80)
    print("TEST: Laguerre Polynomials")
    print("=" * 80)

    assert laguerre_eval(0, 7.3) == 1.0
    assert laguerre_eval(1, 2.0) == -1.0
    assert laguerre_eval(2, 1.0) == pytest.approx(-0.5, abs=1e-15)

    x = np.linspace(0.0, 5.0, 11)
    assert np.allclose(laguerre_eval(3, x), (-x ** 3 + 9 * x ** 2 - 18 * x + 6) / 6, atol=1e-12)
    print("✓ Laguerre recurrence test passed\n")


def test_gauss_laguerre_small_orders():
    """Test the one- and two-point rules against their closed forms."""
    print("=" * 80)
    print("TEST: Gauss-Laguerre Closed Forms")
    print("=" * 80)

    one = gauss_laguerre_rule(1)
    assert one.order == 1
    assert one.nodes[0] == pytest.approx(1.0, abs=1e-14)
    assert one.weights[0] == pytest.approx(1.0, abs=1e-14)

    two = gauss_laguerre_rule(2)
    root2 = math.sqrt(2.0)
    assert np.allclose(two.nodes, [2 - root2, 2 + root2], atol=1e-12)
    assert np.allclose(two.weights, [(2 + root2) / 4, (2 - root2) / 4], atol=1e-12)
    print(f"  n=2 nodes {two.nodes}, weights {two.weights}")
    print("✓ Closed-form rule test passed\n")


def test_gauss_laguerre_against_numpy():
    """Test weight sums and agreement with numpy's laggauss."""
    print("=" * 80)
    print("TEST: Gauss-Laguerre Reference Comparison")
    print("=" * 80)

    for n in (2, 8, 32, 64):
        rule = gauss_laguerre_rule(n)
        ref_nodes, ref_weights = laggauss(n)
        assert abs(rule.weights.sum() - 1.0) < 1e-12, f"weights of order {n} do not sum to 1"
        assert np.allclose(rule.nodes, ref_nodes, rtol=1e-10)
        big = ref_weights > 1e-30
        assert np.allclose(rule.weights[big], ref_weights[big], rtol=1e-8)
        print(f"  ✓ n={n}: largest node {rule.nodes[-1]:.6f}")

    assert gauss_laguerre_rule(32) is gauss_laguerre_rule(32), "rules should be cached"

    with pytest.raises(DomainError):
        gauss_laguerre_rule(0)
    with pytest.raises(DomainError):
        gauss_laguerre_rule(257)
    print("✓ Reference comparison test passed\n")


def test_gauss_laguerre_exactness():
    """Test exactness on polynomials times e^-y, plain and stretched."""
    print("=" * 80)
    print("TEST: Gauss-Laguerre Exactness")
    print("=" * 80)

    rule = gauss_laguerre_rule(3)
    # degree 5 = 2n - 1
    value = gauss_laguerre_integrate(lambda y: y ** 5 * np.exp(-y), rule)
    assert value == pytest.approx(120.0, rel=1e-12)

    # int u^2 e^{-u/2} du = 16, exact with the rule stretched by 2
    stretched = gauss_laguerre_integrate(lambda u: u ** 2 * np.exp(-u / 2.0), gauss_laguerre_rule(4), scale=2.0)
    assert stretched == pytest.approx(16.0, rel=1e-12)

    # sum w y^m = m! for every degree m <= 2n - 1
    for n in (4, 8, 16, 32):
        nodes, weights = gauss_laguerre_rule(n)
        for m in range(2 * n):
            assert np.sum(weights * nodes ** m) == pytest.approx(math.factorial(m), rel=1e-8), f"n={n}, degree {m}"
        print(f"  ✓ n={n}: exact through degree {2 * n - 1}")
    print("✓ Exactness test passed\n")


def test_simpson_weights():
    """Test the end pattern, the coefficient sum and exactness on cubics."""
    print("=" * 80)
    print("TEST: Alternative Extended Simpson Rule")
    print("=" * 80)

    for s in (8, 12, 20, 1000):
        coeffs = alt_extended_simpson_weights(s)
        assert len(coeffs) == s + 1
        assert coeffs.sum() == pytest.approx(48.0 * s, abs=1e-12)

    coeffs = alt_extended_simpson_weights(12)
    assert coeffs[:4].tolist() == [17.0, 59.0, 43.0, 49.0]
    assert coeffs[-4:].tolist() == [49.0, 43.0, 59.0, 17.0]
    assert np.all(coeffs[4:-4] == 48.0)

    x = np.linspace(0.0, 2.0, 17)
    assert simpson_sum(x ** 3 - 2 * x + 1, x[1] - x[0]) == pytest.approx(2.0, abs=1e-12)

    with pytest.raises(DomainError):
        alt_extended_simpson_weights(7)
    print("✓ Simpson weight test passed\n")


def test_q_function():
    """Test the Gaussian tail on symmetric, saturated and tabulated points."""
    print("=" * 80)
    print("TEST: Q Function")
    print("=" * 80)

    assert q_function(0.0) == 0.5
    assert abs(q_function(-30.0) - 1.0) < 1e-15
    assert round(q_function(1.0), 6) == 0.158655
    assert q_function(30.0) == pytest.approx(4.906713927148187e-198, rel=1e-10)
    assert isinstance(q_function(np.array([0.0, 1.0])), np.ndarray)

    x = np.linspace(-6.0, 6.0, 241)
    assert np.allclose(q_function(x) + q_function(-x), 1.0, rtol=0.0, atol=1e-15)
    assert np.all(np.diff(q_function(x)) < 0)
    print("✓ Q function test passed\n")


def test_upper_incomplete_gamma_examples():
    """Test positive, zero-argument and negative-shape values."""
    print("=" * 80)
    print("TEST: Upper Incomplete Gamma Examples")
    print("=" * 80)

    assert upper_incomplete_gamma(1.0, 1.0) == pytest.approx(math.exp(-1.0), rel=1e-12)
    assert upper_incomplete_gamma(0.5, 0.0) == pytest.approx(math.sqrt(math.pi), rel=1e-12)
    assert round(upper_incomplete_gamma(-0.5, 1.0), 6) == 0.178148
    assert upper_incomplete_gamma(-2.0, 0.5) == pytest.approx(
        integrate.quad(lambda t: t ** -3.0 * math.exp(-t), 0.5, np.inf)[0], rel=1e-8
    )

    with pytest.raises(DomainError):
        upper_incomplete_gamma(-0.5, 0.0)
    with pytest.raises(DomainError):
        upper_incomplete_gamma(1.0, -1.0)
    print("✓ Incomplete gamma example test passed\n")


def test_incomplete_gamma_recurrence():
    """Test Gamma(a+1, x) = a Gamma(a, x) + x^a e^-x on random shapes and arguments."""
    print("=" * 80)
    print("TEST: Incomplete Gamma Recurrence")
    print("=" * 80)

    rng = np.random.default_rng(2024)
    shapes = rng.uniform(-15.0, 5.0, 500)
    args = rng.uniform(1e-3, 50.0, 500)

    failures = 0
    for a, x in zip(shapes, args):
        lhs = upper_incomplete_gamma(a + 1.0, x)
        rhs = a * upper_incomplete_gamma(a, x) + math.exp(a * math.log(x) - x)
        tolerance = 1e-12 if abs(lhs) < 1e-3 else 1e-9 * abs(lhs)
        if abs(lhs - rhs) > tolerance:
            failures += 1
            print(f"  ✗ a={a:.4f}, x={x:.4f}: {lhs:.12e} vs {rhs:.12e}")

    assert failures == 0
    print("✓ Recurrence test passed (500 points)\n")


def _log_gamma_by_quadrature(a: float, x: float) -> float:
    # t = x e^s turns the integral into x^a int_0^inf exp(a s - x e^s) ds
    upper = math.log((abs(a) + 60.0) / x) + 2.0
    points = [math.log(a / x)] if a > 0 and 0 < math.log(a / x) < upper else None
    value, _ = integrate.quad(
        lambda s: math.exp(a * s - x * math.exp(s) + x), 0.0, upper, points=points, limit=200, epsabs=0.0, epsrel=1e-12
    )
    return a * math.log(x) - x + math.log(value)


def test_incomplete_gamma_oracle():
    """Test Gamma(a, x) against adaptive integration on the oracle grid."""
    print("=" * 80)
    print("TEST: Incomplete Gamma Integration Oracle")
    print("=" * 80)

    for a in (-12.37, -5.5, -0.5, 0.3, 1.0, 4.0):
        for x in (0.01, 0.1, 1.0, 10.0):
            ours = log_upper_incomplete_gamma(a, x)
            reference = _log_gamma_by_quadrature(a, x)
            assert math.exp(ours - reference) == pytest.approx(1.0, abs=1e-8), f"a={a}, x={x}"
        print(f"  ✓ a={a}")
    print("✓ Integration oracle test passed\n")


def test_incomplete_gamma_large_array():
    """Test that a long mixed array converges and matches element-wise evaluation."""
    print("=" * 80)
    print("TEST: Incomplete Gamma on Large Arrays")
    print("=" * 80)

    # shape of the eavesdropper density at phi = 25.7404
    a = 1.0 - 25.7404 / 2.0
    rng = np.random.default_rng(77)
    x = np.concatenate([rng.uniform(1.0, 2.0, 2000), np.geomspace(1.0, 800.0, 6000), rng.uniform(1e-6, 1.0, 2000)])
    rng.shuffle(x)

    values = log_upper_incomplete_gamma(a, x)
    assert values.shape == x.shape
    assert np.all(np.isfinite(values))
    for i in range(0, x.size, 97):
        assert values[i] == pytest.approx(log_upper_incomplete_gamma(a, float(x[i])), rel=1e-13, abs=1e-13)

    for shape in (-5.8702, 3.5, 40.0):
        assert np.all(np.isfinite(log_upper_incomplete_gamma(shape, np.geomspace(1.0, 500.0, 10_000))))
    print(f"  ✓ {x.size} arguments at a={a:.4f}")
    print("✓ Large array test passed\n")


def test_lower_incomplete_gamma_regularized():
    """Test P(a, x) examples, monotonicity and the domain error."""
    print("=" * 80)
    print("TEST: Regularized Lower Incomplete Gamma")
    print("=" * 80)

    assert lower_incomplete_gamma_regularized(1.0, 1.0) == pytest.approx(1 - math.exp(-1.0), rel=1e-12)
    assert lower_incomplete_gamma_regularized(2.5, 0.0) == 0.0
    assert lower_incomplete_gamma_regularized(2.0, 2.0) == pytest.approx(1 - 3 * math.exp(-2.0), rel=1e-12)
    values = lower_incomplete_gamma_regularized(1.7, np.linspace(0.0, 20.0, 50))
    assert np.all(np.diff(values) >= 0)

    with pytest.raises(DomainError):
        lower_incomplete_gamma_regularized(0.0, 1.0)
    print("✓ Regularized lower incomplete gamma test passed\n")


def test_digamma():
    """Test digamma on the classical constants."""
    print("=" * 80)
    print("TEST: Digamma")
    print("=" * 80)

    euler = 0.5772156649015329
    assert digamma(1.0) == pytest.approx(-euler, abs=1e-10)
    assert digamma(2.0) == pytest.approx(1.0 - euler, abs=1e-10)
    assert digamma(0.5) == pytest.approx(-euler - 2 * math.log(2.0), abs=1e-10)

    with pytest.raises(DomainError):
        digamma(0.0)
    print("✓ Digamma test passed\n")


if __name__ == "__main__":
    print("\n" + "=" * 80)
    print("NUMERICAL KERNEL - TEST SUITE")
    print("=" * 80 + "\n")

    test_laguerre_polynomials()
    test_gauss_laguerre_small_orders()
    test_gauss_laguerre_against_numpy()
    test_gauss_laguerre_exactness()
    test_simpson_weights()
    test_q_function()
    test_upper_incomplete_gamma_examples()
    test_incomplete_gamma_recurrence()
    test_incomplete_gamma_oracle()
    test_incomplete_gamma_large_array()
    test_lower_incomplete_gamma_regularized()
    test_digamma()

    print("=" * 80)
    print("ALL TESTS COMPLETED")
    print("=" * 80)
