"""Closed-form large-wavenumber approximations of the eigenvalues.

Each eigenvalue splits, for large z = delta*||nu||/2, into an algebraic part
(two Mellin-Barnes residues, at s = -1 and s = -a) and exponentially
oscillating terms ~ e^(+-2iz) that decay like a fixed power of z.  The
algebraic part is:

    lambda2   ~ -4 mu a b / (delta^2 (a-1))
                - Gamma(b+1)Gamma(a+1) / (((beta-n)/2) Gamma((beta+2)/2))
                  * (4 mu / delta^2) * z^(beta-n)                (beta != n)
    lambda2   ~ -(4 mu a b / delta^2) (2 log z + euler_gamma - psi(b))
                                                                 (beta = n)

and analogously for lambda11 (coefficient (n-beta-1)/(n-beta), prefactor
8 mu/delta^2, log-branch constant shifted by +2) and lambda12
(pure power z^(2(beta-n-1))).  At beta = n the two power-branch terms merge
into the double-pole logarithm; within ``BRANCH_TOLERANCE`` of that point the
power branch subtracts two nearly identical huge terms, so the logarithmic
branch is used instead.

The discarded oscillatory terms give the error envelopes: absolute error
~ C * z^(-(n+3)/2) for lambda2 and ~ C * z^(-(n+1)/2) for lambda1 (dominated
by its dyadic part), which is what the envelope-slope validations fit.
"""

from __future__ import annotations

import enum
import math
import warnings
from dataclasses import dataclass
from typing import Optional

from .eigenvalues import MaterialParams, WaveNumber, derive
from .special import EULER_GAMMA, digamma, gamma, reciprocal_gamma

#: Width of the logarithmic-branch window around beta = n.
BRANCH_TOLERANCE = 1e-9

_SQRT_PI = math.sqrt(math.pi)


class BranchInstabilityWarning(RuntimeWarning):
    """beta is so close to n that the power branch would cancel catastrophically."""


class AsymptoticBranch(enum.Enum):
    POWER_LAW = "power_law"
    LOGARITHMIC = "logarithmic"


@dataclass(frozen=True)
class ErrorEnvelope:
    """Decay law of the neglected oscillatory terms for one eigenvalue."""

    decay_exponent: float
    prefactor_note: str


@dataclass(frozen=True)
class GrowthClass:
    """Large-wavenumber growth classification of the spectrum."""

    kind: str  # "bounded" | "log_divergent" | "power_divergent"
    rate: Optional[float] = None  # z-exponent, for the power-divergent case


def _require_subcritical(params: MaterialParams) -> None:
    if not params.beta < params.n + 2:
        raise ValueError(
            f"asymptotic formulas require beta < n+2, got beta = {params.beta} with n = {params.n}"
        )


def _z_of(params: MaterialParams, nu_norm: float) -> float:
    w = WaveNumber.of(params, nu_norm)
    if w.z <= 0.0:
        raise ValueError("asymptotic forms need nu_norm > 0 (log z and negative powers)")
    return w.z


def branch_for(params: MaterialParams) -> AsymptoticBranch:
    """Logarithmic branch within BRANCH_TOLERANCE of beta = n, else power law."""
    _require_subcritical(params)
    gap = params.beta - params.n
    if abs(gap) < BRANCH_TOLERANCE:
        if gap != 0.0:
            warnings.warn(
                f"beta - n = {gap:.3e} lies inside the branch tolerance "
                f"{BRANCH_TOLERANCE:g}; using the logarithmic branch",
                BranchInstabilityWarning,
                stacklevel=2,
            )
        return AsymptoticBranch.LOGARITHMIC
    return AsymptoticBranch.POWER_LAW


def _shared_constant(params: MaterialParams) -> float:
    # Residue at s = -1, common to lambda2 and lambda11 (power branch only).
    d = derive(params)
    return -4.0 * params.mu * d.a * d.b / (params.delta ** 2 * (d.a - 1.0))


def asym_lambda2(params: MaterialParams, nu_norm: float) -> float:
    z = _z_of(params, nu_norm)
    d = derive(params)
    mu, delta, beta, n = params.mu, params.delta, params.beta, params.n
    if branch_for(params) is AsymptoticBranch.LOGARITHMIC:
        return -(4.0 * mu * d.a * d.b / delta ** 2) * (2.0 * math.log(z) + EULER_GAMMA - digamma(d.b))
    coeff = gamma(d.b + 1.0) * gamma(d.a + 1.0) * reciprocal_gamma(0.5 * (beta + 2.0)) / (0.5 * (beta - n))
    return _shared_constant(params) - coeff * (4.0 * mu / delta ** 2) * z ** (beta - n)


def asym_lambda11(params: MaterialParams, nu_norm: float) -> float:
    z = _z_of(params, nu_norm)
    d = derive(params)
    mu, delta, beta, n = params.mu, params.delta, params.beta, params.n
    if branch_for(params) is AsymptoticBranch.LOGARITHMIC:
        return -(4.0 * mu * d.a * d.b / delta ** 2) * (2.0 * math.log(z) + EULER_GAMMA + 2.0 - digamma(d.b))
    coeff = (
        (n - beta - 1.0)
        / (n - beta)
        * gamma(d.b + 1.0)
        * gamma(d.a + 1.0)
        * reciprocal_gamma(0.5 * (beta + 2.0))
    )
    return _shared_constant(params) - coeff * (8.0 * mu / delta ** 2) * z ** (beta - n)


def asym_lambda12(params: MaterialParams, nu_norm: float) -> float:
    z = _z_of(params, nu_norm)
    _require_subcritical(params)
    if params.lambda_star == params.mu:
        return 0.0
    d = derive(params)
    # reciprocal_gamma makes beta in {0, -2, -4, ...} an exact zero, not a pole error
    coeff = gamma(d.b) * gamma(d.a + 1.0) * reciprocal_gamma(0.5 * params.beta)
    power = z ** (2.0 * (params.beta - (params.n + 1.0)))
    return -(params.lambda_star - params.mu) * coeff * coeff * (4.0 / params.delta ** 2) * power


def asym_lambda1(params: MaterialParams, nu_norm: float) -> float:
    # composed exactly as the sum of the two parts, on the same floating path
    return asym_lambda12(params, nu_norm) + asym_lambda11(params, nu_norm)


def envelope_for(which: str, params: MaterialParams) -> ErrorEnvelope:
    """Decay law of |exact - asymptotic| for 'lambda1' or 'lambda2'.

    The oscillatory terms of the underlying series decay like
    |z|^(-(n+7)/2) (transverse) and |z|^(-(n+5)/2) (longitudinal dyadic);
    the ||nu||^2 ~ z^2 prefactor shifts both by +2.
    """
    n = params.n
    if which == "lambda2":
        return ErrorEnvelope(
            decay_exponent=-(n + 3.0) / 2.0,
            prefactor_note="leading oscillatory coefficient of the transverse 2F3, c0 = 1 only",
        )
    if which == "lambda1":
        return ErrorEnvelope(
            decay_exponent=-(n + 1.0) / 2.0,
            prefactor_note="leading oscillatory coefficient of the dyadic 3F4, c0 = 1 only",
        )
    raise ValueError(f"which must be 'lambda1' or 'lambda2', got {which!r}")


def error_envelope(which: str, params: MaterialParams, nu_norm: float) -> float:
    """Conservative magnitude C * z^decay of the neglected oscillation.

    The prefactor collapses to 4 mu a Gamma(b+1) / (delta^2 sqrt(pi)) for
    lambda2 (assembled from (2 pi)^(-1/2) 2^(b+3) (2z)^(-(n+7)/2) times the
    series prefactor mu ||nu||^2 a Gamma(b+1)) and twice that for lambda1.
    Used to gate regression fits, not as a hard bound.
    """
    z = _z_of(params, nu_norm)
    env = envelope_for(which, params)
    d = derive(params)
    base = 4.0 * params.mu * d.a * gamma(d.b + 1.0) / (params.delta ** 2 * _SQRT_PI)
    if which == "lambda1":
        base *= 2.0
    return base * z ** env.decay_exponent


def classify_growth(params: MaterialParams) -> GrowthClass:
    """Bounded for beta < n, logarithmically divergent at beta = n, else
    divergent like z^(beta-n) (the slower z^(2(beta-n-1)) part never wins
    below beta = n+2)."""
    _require_subcritical(params)
    gap = params.beta - params.n
    if abs(gap) < BRANCH_TOLERANCE:
        return GrowthClass(kind="log_divergent")
    if gap < 0:
        return GrowthClass(kind="bounded")
    return GrowthClass(kind="power_divergent", rate=gap)
