"""Generalized hypergeometric series pFq at negative real argument -z^2.

For p <= q these series are entire, but at large z they are dominated by
catastrophic cancellation: the terms peak near e^(2z) while the sum is O(1).
``eval_pfq`` sums the term recurrence in extended precision sized by
``xprec.required_bits`` and certifies the result with an explicit error
estimate.  ``eval_pfq_float64`` is the deliberately naive double-precision
summation kept around to demonstrate (and regression-test) why the extended
path exists.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .xprec import Precision, XReal, required_bits

#: Hard ceiling on working precision; beyond it evaluation refuses to run.
MAX_PRECISION_BITS = 1 << 20

#: Floor for the adaptive term cap.  Terms of a pFq series at -z^2 start
#: decreasing near k ~ z and are negligible by k ~ e*z, so the cap scales
#: with z instead of silently mis-summing long series.
MIN_TERM_CAP = 10_000

_REL_ERR_RANGE = (1e-15, 1e-2)


class InvalidSeriesError(ValueError):
    """Series parameters violate the pFq preconditions."""


class PrecisionExhaustedError(ArithmeticError):
    """Evaluation would exceed the configured precision or term budget."""


def default_max_terms(z: float) -> int:
    return max(MIN_TERM_CAP, math.ceil(3.3 * z) + 200)


@dataclass(frozen=True)
class HypergeometricSeries:
    """A pFq specification: numerator a_1..a_p and denominator b_1..b_q."""

    numerator_params: tuple
    denominator_params: tuple

    def __post_init__(self):
        nums = tuple(float(a) for a in self.numerator_params)
        dens = tuple(float(b) for b in self.denominator_params)
        object.__setattr__(self, "numerator_params", nums)
        object.__setattr__(self, "denominator_params", dens)
        if len(nums) > len(dens):
            raise InvalidSeriesError(
                f"need p <= q for an entire series, got p={len(nums)}, q={len(dens)}"
            )
        for b in dens:
            if b <= 0.0 and b == math.floor(b):
                raise InvalidSeriesError(f"denominator parameter {b} is a nonpositive integer")

    @property
    def p(self) -> int:
        return len(self.numerator_params)

    @property
    def q(self) -> int:
        return len(self.denominator_params)


@dataclass(frozen=True)
class EvalResult:
    """A computed value with its certified error and evaluation bookkeeping."""

    value: float
    abs_error_estimate: float
    terms_used: int
    precision_bits_used: int

    def __post_init__(self):
        if self.terms_used < 1:
            raise ValueError("terms_used must be >= 1")
        if self.abs_error_estimate < 0:
            raise ValueError("abs_error_estimate must be >= 0")


def eval_pfq(
    series: HypergeometricSeries,
    z_sq: float,
    target_rel_err: float = 1e-12,
    *,
    precision: Optional[Precision] = None,
    max_terms: Optional[int] = None,
) -> EvalResult:
    """Sum pFq(a_1..a_p; b_1..b_q; -z_sq) in extended precision.

    Terms follow the recurrence
    t_{k+1} = t_k * (-z_sq) * prod(a_i + k) / (prod(b_j + k) * (k + 1)),
    summed at ``required_bits(sqrt(z_sq))`` unless ``precision`` overrides it.
    Truncation requires |t_k| < target_rel_err * |sum| for three consecutive
    terms *after* the term-magnitude peak; a single small term before the peak
    of an alternating series proves nothing.

    Raises ``PrecisionExhaustedError`` when the required precision exceeds
    ``MAX_PRECISION_BITS`` or the term budget runs out.
    """
    if not (z_sq >= 0.0 and math.isfinite(z_sq)):
        raise ValueError(f"z_sq must be finite and >= 0, got {z_sq}")
    lo, hi = _REL_ERR_RANGE
    if not (lo <= target_rel_err <= hi):
        raise ValueError(f"target_rel_err must lie in [{lo}, {hi}], got {target_rel_err}")

    z = math.sqrt(z_sq)
    bits = precision.bits if precision is not None else required_bits(z)
    if bits > MAX_PRECISION_BITS:
        raise PrecisionExhaustedError(
            f"z = {z:g} needs {bits} bits > MAX_PRECISION_BITS = {MAX_PRECISION_BITS}"
        )
    prec = Precision(bits)
    cap = max_terms if max_terms is not None else default_max_terms(z)

    nums = [XReal(a, prec) for a in series.numerator_params]
    dens = [XReal(b, prec) for b in series.denominator_params]
    neg_zsq = -XReal(z_sq, prec)
    tol = XReal(target_rel_err, prec)

    term = XReal(1, prec)
    total = XReal(1, prec)
    prev_mag = abs(term)
    peak_mag = prev_mag
    past_peak = False
    terminated = False
    consecutive_small = 0
    terms_used = 1
    last_mag = 0.0

    for k in range(cap):
        num = neg_zsq
        for a in nums:
            num = num * (a + k)
        den = XReal(k + 1, prec)
        for b in dens:
            den = den * (b + k)
        term = term * num / den
        mag = abs(term)
        if mag.is_zero():
            terminated = True  # a numerator parameter hit a nonpositive integer
            break
        total = total + term
        terms_used = k + 2
        if mag > peak_mag:
            peak_mag = mag
        if mag < prev_mag:
            past_peak = True
        prev_mag = mag
        if past_peak and mag < tol * abs(total):
            consecutive_small += 1
            if consecutive_small >= 3:
                last_mag = float(mag)
                break
        else:
            consecutive_small = 0
    else:
        raise PrecisionExhaustedError(
            f"series did not converge within {cap} terms at z = {z:g} "
            f"(past_peak={past_peak}); raise max_terms if the argument is legitimate"
        )

    value = float(total)
    rounding = float(peak_mag * (XReal(2, prec) ** (1 - bits)) * (terms_used + 2))
    if terminated:
        abs_err = rounding
    else:
        abs_err = target_rel_err * abs(value) + last_mag + rounding
    return EvalResult(
        value=value,
        abs_error_estimate=abs_err,
        terms_used=terms_used,
        precision_bits_used=bits,
    )


def eval_1f2(a: float, b1: float, b2: float, z_sq: float, tol: float = 1e-12, **kwargs) -> EvalResult:
    return eval_pfq(HypergeometricSeries((a,), (b1, b2)), z_sq, tol, **kwargs)


def eval_2f3(
    a1: float, a2: float, b1: float, b2: float, b3: float, z_sq: float, tol: float = 1e-12, **kwargs
) -> EvalResult:
    return eval_pfq(HypergeometricSeries((a1, a2), (b1, b2, b3)), z_sq, tol, **kwargs)


def eval_3f4(
    a1: float,
    a2: float,
    a3: float,
    b1: float,
    b2: float,
    b3: float,
    b4: float,
    z_sq: float,
    tol: float = 1e-12,
    **kwargs,
) -> EvalResult:
    return eval_pfq(HypergeometricSeries((a1, a2, a3), (b1, b2, b3, b4)), z_sq, tol, **kwargs)


def eval_pfq_float64(series: HypergeometricSeries, z_sq: float, target_rel_err: float = 1e-12) -> float:
    """Naive double-precision summation of the same recurrence.

    Useless beyond small z (the e^(2z) term peak eats the 53-bit mantissa);
    exists so tests can measure exactly how wrong it goes.
    """
    if not (z_sq >= 0.0 and math.isfinite(z_sq)):
        raise ValueError(f"z_sq must be finite and >= 0, got {z_sq}")
    cap = default_max_terms(math.sqrt(z_sq))
    term = 1.0
    total = 1.0
    prev_mag = 1.0
    past_peak = False
    consecutive_small = 0
    for k in range(cap):
        num = -z_sq
        for a in series.numerator_params:
            num *= a + k
        den = k + 1.0
        for b in series.denominator_params:
            den *= b + k
        term = term * num / den
        mag = abs(term)
        if mag == 0.0:
            break
        total += term
        if mag < prev_mag:
            past_peak = True
        prev_mag = mag
        if past_peak and mag < target_rel_err * abs(total):
            consecutive_small += 1
            if consecutive_small >= 3:
                break
        else:
            consecutive_small = 0
    return total
