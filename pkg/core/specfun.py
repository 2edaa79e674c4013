"""Special functions and quadrature rules used by the statistics and secrecy layers."""

import logging
import math
from typing import Callable, NamedTuple, Union

import numpy as np
from numpy.typing import ArrayLike
from scipy import special

from core.errors import ConvergenceError, DomainError

logger = logging.getLogger(__name__)

FloatOrArray = Union[float, np.ndarray]

_SQRT2 = math.sqrt(2.0)
_EPS = np.finfo(float).eps
_FPMIN = 1e-300
_CF_MAX_ITER = 2000
_NEWTON_MAX_STEPS = 100
_LAGUERRE_MAX_ORDER = 256

# Gauss-Laguerre rules are cached by order
_rule_cache: dict[int, "LaguerreRule"] = {}


class LaguerreRule(NamedTuple):
    """Nodes and weights of an n-point Gauss-Laguerre rule (weight e^-y on [0, inf))."""

    nodes: np.ndarray
    weights: np.ndarray

    @property
    def order(self) -> int:
        return len(self.nodes)


def _as_output(values: np.ndarray, scalar: bool) -> FloatOrArray:
    return float(values) if scalar else values


# Laguerre polynomials and the Gauss-Laguerre rule

def laguerre_eval(n: int, x: ArrayLike) -> FloatOrArray:
    """
    Evaluate the Laguerre polynomial L_n by the three-term recurrence.

    Args:
        n: Polynomial degree (>= 0)
        x: Point or array of points

    Returns:
        L_n(x), a float for scalar input

    Examples:
        >>> laguerre_eval(2, 1.0)
        -0.5
    """
    if n < 0:
        raise DomainError(f"Laguerre degree must be nonnegative, got {n}")

    scalar = np.ndim(x) == 0
    x = np.asarray(x, dtype=float)
    prev = np.ones_like(x)
    if n == 0:
        return _as_output(prev, scalar)

    curr = 1.0 - x
    for k in range(1, n):
        prev, curr = curr, ((2 * k + 1 - x) * curr - k * prev) / (k + 1)
    return _as_output(curr, scalar)


def _laguerre_with_derivative(n: int, x: float) -> tuple[float, float]:
    """L_n(x) and L_n'(x) from the recurrence and x L_n' = n (L_n - L_{n-1})."""
    prev, curr = 1.0, 1.0 - x
    for k in range(1, n):
        prev, curr = curr, ((2 * k + 1 - x) * curr - k * prev) / (k + 1)
    return curr, n * (curr - prev) / x


def _initial_guess(i: int, n: int, roots: list[float]) -> float:
    # Standard Laguerre root estimates: closed forms for the first two roots,
    # then extrapolation from the previous pair.
    if i == 0:
        return 3.0 / (1.0 + 2.4 * n)
    if i == 1:
        return roots[0] + 15.0 / (1.0 + 2.5 * n)
    ai = i - 1
    return roots[i - 1] + (1.0 + 2.55 * ai) / (1.9 * ai) * (roots[i - 1] - roots[i - 2])


def _newton_root(n: int, guess: float, lower: float) -> float:
    z = guess
    for _ in range(_NEWTON_MAX_STEPS):
        value, slope = _laguerre_with_derivative(n, z)
        if abs(value) < 1e-13 * max(1.0, abs(slope)):
            return z
        step = value / slope
        candidate = z - step
        # Keep the iterate above the previous root so no root is found twice
        if candidate <= lower:
            candidate = 0.5 * (z + lower)
        if abs(candidate - z) <= 4.0 * _EPS * max(1.0, abs(candidate)):
            return candidate
        z = candidate
    raise ConvergenceError(f"Laguerre root {guess:.6g} of order {n} did not converge in {_NEWTON_MAX_STEPS} steps")


def gauss_laguerre_rule(n: int) -> LaguerreRule:
    """
    Build the n-point Gauss-Laguerre rule.

    Roots of L_n come from safeguarded Newton iteration started at the
    standard estimates; weights are y / [(n+1) L_{n+1}(y)]^2, evaluated in
    log space so large orders do not overflow.

    Args:
        n: Number of nodes, 1 <= n <= 256

    Returns:
        LaguerreRule with ascending nodes and positive weights

    Raises:
        DomainError: If n is out of range
        ConvergenceError: If a Newton iteration exceeds 100 steps

    Examples:
        >>> gauss_laguerre_rule(1)
        LaguerreRule(nodes=array([1.]), weights=array([1.]))
    """
    if not 1 <= n <= _LAGUERRE_MAX_ORDER:
        raise DomainError(f"Gauss-Laguerre order must be in [1, {_LAGUERRE_MAX_ORDER}], got {n}")

    if n in _rule_cache:
        return _rule_cache[n]

    roots: list[float] = []
    for i in range(n):
        lower = roots[-1] if roots else 0.0
        roots.append(_newton_root(n, _initial_guess(i, n, roots), lower))

    nodes = np.array(roots)
    next_poly = np.abs(laguerre_eval(n + 1, nodes))
    log_weights = np.log(nodes) - 2.0 * (math.log(n + 1) + np.log(next_poly))
    weights = np.exp(log_weights)

    if np.any(np.diff(nodes) <= 0):
        raise ConvergenceError(f"Gauss-Laguerre roots of order {n} are not strictly increasing")

    rule = LaguerreRule(nodes=nodes, weights=weights)
    _rule_cache[n] = rule
    logger.debug(f"Built Gauss-Laguerre rule of order {n} (weight sum {weights.sum():.15f})")
    return rule


def gauss_laguerre_integrate(
    integrand: Callable[[np.ndarray], np.ndarray],
    rule: LaguerreRule,
    scale: float = 1.0,
) -> float:
    """
    Integrate a function over [0, inf) with a stretched Gauss-Laguerre rule.

    Uses  int_0^inf g(u) du = scale * sum_s w_s e^{y_s} g(scale * y_s),
    which is exact when g(scale*y) e^y is a polynomial of degree < 2n.

    Args:
        integrand: Vectorized function g(u)
        rule: Gauss-Laguerre rule
        scale: Stretch applied to the nodes (1.0 gives the plain rule)

    Returns:
        Quadrature estimate of the integral
    """
    nodes, weights = rule
    values = integrand(scale * nodes)
    return float(scale * np.sum(weights * np.exp(nodes) * values))


# Alternative extended Simpson rule

_SIMPSON_ENDS = np.array([17.0, 59.0, 43.0, 49.0])


def alt_extended_simpson_weights(n_intervals: int) -> np.ndarray:
    """
    Coefficients c_1..c_{S+1} of the alternative extended Simpson rule.

    The rule reads int f ~ (h/48) * sum_s c_s f_s with end pattern
    17, 59, 43, 49 and interior weight 48.

    Args:
        n_intervals: Number of subintervals S (>= 8)

    Returns:
        Array of S+1 coefficients; they sum to 48*S
    """
    if n_intervals < 8:
        raise DomainError(f"Alternative extended Simpson rule needs at least 8 subintervals, got {n_intervals}")

    coeffs = np.full(n_intervals + 1, 48.0)
    coeffs[:4] = _SIMPSON_ENDS
    coeffs[-4:] = _SIMPSON_ENDS[::-1]
    return coeffs


def simpson_sum(values: np.ndarray, step: float) -> float:
    """Apply the alternative extended Simpson rule to S+1 equally spaced samples."""
    coeffs = alt_extended_simpson_weights(len(values) - 1)
    return float(step * np.dot(coeffs, values) / 48.0)


# Gaussian tail

def q_function(x: ArrayLike) -> FloatOrArray:
    """
    Gaussian tail probability Q(x) = P(Z > x) for a standard normal Z.

    Examples:
        >>> q_function(0.0)
        0.5
    """
    scalar = np.ndim(x) == 0
    values = 0.5 * special.erfc(np.asarray(x, dtype=float) / _SQRT2)
    return _as_output(values, scalar)


# Incomplete gamma functions

def _log_gamma_continued_fraction(a: float, x: np.ndarray) -> np.ndarray:
    """
    log Gamma(a, x) from the Legendre continued fraction (modified Lentz), any real a.

    Each argument leaves the iteration once its own update factor has
    converged; only the still-active arguments are carried forward.
    """
    b = x + 1.0 - a
    c = np.full_like(x, 1.0 / _FPMIN)
    d = 1.0 / b
    h = d.copy()
    active = np.arange(x.size)
    for i in range(1, _CF_MAX_ITER):
        an = -i * (i - a)
        b_i = b[active] + 2.0 * i
        d_i = an * d[active] + b_i
        d_i = np.where(np.abs(d_i) < _FPMIN, _FPMIN, d_i)
        c_i = b_i + an / c[active]
        c_i = np.where(np.abs(c_i) < _FPMIN, _FPMIN, c_i)
        d_i = 1.0 / d_i
        delta = d_i * c_i
        d[active] = d_i
        c[active] = c_i
        h[active] *= delta
        active = active[np.abs(delta - 1.0) >= 2.0 * _EPS]
        if active.size == 0:
            break
    else:
        raise ConvergenceError(
            f"Incomplete gamma continued fraction stalled for a={a} "
            f"({active.size} of {x.size} arguments unconverged)"
        )
    return -x + a * np.log(x) + np.log(h)


def _log_gamma_downward(a: float, x: np.ndarray) -> np.ndarray:
    """log Gamma(a, x) for a <= 0 by downward recurrence from a shape in [0, 1)."""
    steps = math.ceil(-a)
    b = a + steps
    log_x = np.log(x)
    if b == 0.0:
        log_value = np.log(special.exp1(x))
    else:
        log_value = special.gammaln(b) + np.log(special.gammaincc(b, x))

    # Gamma(b-1, x) = (x^{b-1} e^{-x} - Gamma(b, x)) / (1 - b); both terms positive, first larger
    for _ in range(steps):
        log_lead = (b - 1.0) * log_x - x
        log_value = log_lead + np.log1p(-np.exp(log_value - log_lead)) - math.log(1.0 - b)
        b -= 1.0
    return log_value


def log_upper_incomplete_gamma(a: float, x: ArrayLike) -> FloatOrArray:
    """
    Logarithm of the non-regularized upper incomplete gamma function.

    Args:
        a: Shape, any real number
        x: Nonnegative argument (strictly positive when a <= 0)

    Returns:
        log Gamma(a, x)

    Raises:
        DomainError: If x < 0, or a <= 0 with x = 0
    """
    scalar = np.ndim(x) == 0
    x = np.atleast_1d(np.asarray(x, dtype=float))
    if np.any(x < 0):
        raise DomainError("Incomplete gamma argument must be nonnegative")
    if a <= 0 and np.any(x == 0):
        raise DomainError(f"Gamma(a, 0) diverges for a={a} <= 0")

    out = np.empty_like(x)
    use_cf = x >= max(1.0, a + 1.0)
    if np.any(use_cf):
        out[use_cf] = _log_gamma_continued_fraction(a, x[use_cf])

    rest = ~use_cf
    if np.any(rest):
        if a > 0:
            out[rest] = special.gammaln(a) + np.log(special.gammaincc(a, x[rest]))
        else:
            out[rest] = _log_gamma_downward(a, x[rest])

    return _as_output(out[0] if scalar else out, scalar)


def upper_incomplete_gamma(a: float, x: ArrayLike) -> FloatOrArray:
    """
    Non-regularized upper incomplete gamma function Gamma(a, x) for any real a.

    Args:
        a: Shape, including negative non-integer values
        x: Nonnegative argument (strictly positive when a <= 0)

    Returns:
        Gamma(a, x)

    Examples:
        >>> round(upper_incomplete_gamma(-0.5, 1.0), 6)
        0.178148
    """
    log_value = log_upper_incomplete_gamma(a, x)
    return float(np.exp(log_value)) if np.ndim(log_value) == 0 else np.exp(log_value)


def lower_incomplete_gamma_regularized(a: float, x: ArrayLike) -> FloatOrArray:
    """
    Regularized lower incomplete gamma P(a, x) = gamma(a, x) / Gamma(a).

    Raises:
        DomainError: If a <= 0 or x < 0
    """
    if a <= 0:
        raise DomainError(f"Regularized lower incomplete gamma needs a > 0, got {a}")

    scalar = np.ndim(x) == 0
    x = np.asarray(x, dtype=float)
    if np.any(x < 0):
        raise DomainError("Incomplete gamma argument must be nonnegative")
    return _as_output(special.gammainc(a, x), scalar)


def digamma(x: ArrayLike) -> FloatOrArray:
    """
    Digamma function psi(x) for x > 0.

    Raises:
        DomainError: If any x <= 0
    """
    scalar = np.ndim(x) == 0
    x = np.asarray(x, dtype=float)
    if np.any(x <= 0):
        raise DomainError("Digamma is only provided for positive arguments")
    return _as_output(special.psi(x), scalar)
