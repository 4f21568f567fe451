"""Gamma-family special functions in double precision.

Covers exactly what the eigenvalue formulas and their asymptotic coefficients
consume: gamma, log-gamma, reciprocal gamma (entire, exact zeros at the
poles), digamma with a closed-form path for half-integer arguments, rising
factorials, and the Euler-Mascheroni constant.
"""

from __future__ import annotations

import math

from .xprec import Precision, XReal

EULER_GAMMA = 0.5772156649015328606065120900824024

_LN2 = math.log(2.0)

# psi(x) ~ ln x - 1/(2x) - sum B_2k/(2k x^2k); coefficients of u = x^-2
_DIGAMMA_ASYMPTOTIC = (
    -1.0 / 12.0,
    1.0 / 120.0,
    -1.0 / 252.0,
    1.0 / 240.0,
    -1.0 / 132.0,
    691.0 / 32760.0,
    -1.0 / 12.0,
)

_DIGAMMA_SHIFT = 8.0


class GammaPoleError(ValueError):
    """Gamma evaluated at a nonpositive integer."""


def euler_gamma() -> float:
    """Euler-Mascheroni constant gamma = -psi(1)."""
    return EULER_GAMMA


def _is_nonpositive_integer(x: float) -> bool:
    return x <= 0.0 and x == math.floor(x)


def gamma(x: float) -> float:
    """Gamma function for real x away from the nonpositive integers.

    Raises ``GammaPoleError`` at poles and ``OverflowError`` when the result
    exceeds the double range (|x| beyond ~171.6).
    """
    if math.isnan(x):
        raise ValueError("gamma argument is NaN")
    if _is_nonpositive_integer(x):
        raise GammaPoleError(f"gamma pole at x = {x}")
    return math.gamma(x)  # C library Lanczos-type kernel with reflection


def log_gamma(x: float) -> float:
    """ln |Gamma(x)|; raises ``GammaPoleError`` at the poles."""
    if math.isnan(x):
        raise ValueError("log_gamma argument is NaN")
    if _is_nonpositive_integer(x):
        raise GammaPoleError(f"gamma pole at x = {x}")
    return math.lgamma(x)


def reciprocal_gamma(x: float) -> float:
    """1/Gamma(x), entire in x; exactly 0 at the nonpositive integers."""
    if math.isnan(x):
        raise ValueError("reciprocal_gamma argument is NaN")
    if _is_nonpositive_integer(x):
        return 0.0
    if x >= 0.5:
        # Gamma(x) > 0 here; going through lgamma keeps x > 171 from overflowing.
        return math.exp(-math.lgamma(x))
    # reflection: 1/Gamma(x) = sin(pi x) Gamma(1-x) / pi
    s = _sin_pi(x)
    try:
        return s * math.exp(math.lgamma(1.0 - x)) / math.pi
    except OverflowError:
        # |1/Gamma| genuinely exceeds the double range below x ~ -171
        return math.copysign(math.inf, s)


def _sin_pi(x: float) -> float:
    # sin(pi*x) with the argument reduced in exact arithmetic, so integers map
    # to exactly 0 and half-integers to exactly +-1.
    r = x - 2.0 * math.floor(x / 2.0)  # r in [0, 2)
    if r == math.floor(r):
        return 0.0
    if r == 0.5:
        return 1.0
    if r == 1.5:
        return -1.0
    return math.sin(math.pi * r) if r < 1.0 else -math.sin(math.pi * (r - 1.0))


def digamma(x: float) -> float:
    """Digamma psi(x) for x > 0.

    Half-integer and integer arguments (the only ones the asymptotic formulas
    need) take the exact closed-form path psi(1) = -gamma,
    psi(1/2) = -gamma - 2 ln 2, psi(x+1) = psi(x) + 1/x.  Other arguments are
    recurrence-shifted above 8 and finished with the asymptotic expansion.
    """
    if not x > 0.0:
        raise ValueError(f"digamma requires x > 0, got {x}")
    two_x = 2.0 * x
    if two_x == math.floor(two_x) and x <= 128.0:
        m = int(two_x)
        if m % 2 == 0:  # integer argument
            return -EULER_GAMMA + math.fsum(1.0 / j for j in range(1, m // 2))
        # half-integer argument
        return -EULER_GAMMA - 2.0 * _LN2 + math.fsum(2.0 / (2 * j - 1) for j in range(1, (m + 1) // 2))
    acc = 0.0
    t = x
    while t < _DIGAMMA_SHIFT:
        acc -= 1.0 / t
        t += 1.0
    u = 1.0 / (t * t)
    tail = 0.0
    for coeff in reversed(_DIGAMMA_ASYMPTOTIC):
        tail = u * (coeff + tail)
    return acc + math.log(t) - 0.5 / t + tail


def pochhammer(a: float, k: int) -> float:
    """Rising factorial (a)_k = a (a+1) ... (a+k-1), with (a)_0 = 1.

    Raises ``OverflowError`` when the product leaves the double range; series
    code should use the term-ratio recurrence instead of large direct values.
    """
    if k < 0 or k != int(k):
        raise ValueError(f"pochhammer index must be a nonnegative integer, got {k!r}")
    result = 1.0
    for j in range(int(k)):
        result *= a + j
        if math.isinf(result):
            raise OverflowError(f"pochhammer({a}, {k}) exceeds the double range")
    return result


def pochhammer_x(a: float, k: int, precision: Precision) -> XReal:
    """Rising factorial accumulated in extended precision."""
    if k < 0 or k != int(k):
        raise ValueError(f"pochhammer index must be a nonnegative integer, got {k!r}")
    result = XReal(1, precision)
    for j in range(int(k)):
        result = result * (XReal(a, precision) + j)
    return result
