"""Fixed-precision big-float scalars for cancellation-safe series summation.

The alternating hypergeometric series evaluated at argument -z^2 have terms
peaking near e^(2z) while the sum stays O(1), so roughly 2z*log2(e) mantissa
bits cancel.  ``required_bits`` sizes the working precision for that loss;
``XReal`` wraps mpmath's raw mpf layer (pure functions over value tuples, no
global context) so arithmetic is correctly rounded at a stated precision and
safe to use concurrently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from mpmath.libmp import (
    from_float,
    from_int,
    from_str,
    mpf_abs,
    mpf_add,
    mpf_div,
    mpf_eq,
    mpf_ge,
    mpf_gt,
    mpf_le,
    mpf_lt,
    mpf_mul,
    mpf_neg,
    mpf_pow_int,
    mpf_sub,
    repr_dps,
    to_float,
    to_str,
)

_LOG2_E = math.log2(math.e)
_RND = "n"  # round to nearest even

DOUBLE_BITS = 53


@dataclass(frozen=True)
class Precision:
    """Binary mantissa precision for ``XReal`` values (at least 53 bits)."""

    bits: int

    def __post_init__(self):
        if not isinstance(self.bits, int) or self.bits < DOUBLE_BITS:
            raise ValueError(f"precision must be an integer >= {DOUBLE_BITS} bits, got {self.bits!r}")

    def doubled(self) -> "Precision":
        return Precision(2 * self.bits)


def required_bits(z: float, headroom: int = 40) -> int:
    """Working precision for summing a pFq series at argument -z^2.

    53 base bits, plus ceil(2*z*log2(e)) bits lost to cancellation against the
    e^(2z) term peak, plus fixed headroom.
    """
    if z < 0 or not math.isfinite(z):
        raise ValueError(f"z must be finite and >= 0, got {z}")
    return DOUBLE_BITS + math.ceil(2.0 * z * _LOG2_E) + headroom


class XReal:
    """An extended-precision real carrying its own working precision.

    Binary operations round to the larger precision of the two operands;
    int/float operands are converted exactly.  Conversion back to double via
    ``float()`` is a single correct rounding.
    """

    __slots__ = ("_v", "precision")

    def __init__(self, value, precision: Precision):
        if isinstance(value, XReal):
            raw = value._v
        elif isinstance(value, tuple):
            raw = value
        elif isinstance(value, int):
            raw = from_int(value)
        elif isinstance(value, float):
            if not math.isfinite(value):
                raise ValueError(f"cannot represent non-finite value {value!r}")
            raw = from_float(value)
        elif isinstance(value, str):
            raw = from_str(value, precision.bits, _RND)
        else:
            raise TypeError(f"cannot build XReal from {type(value).__name__}")
        object.__setattr__(self, "_v", raw)
        object.__setattr__(self, "precision", precision)

    def __setattr__(self, name, value):
        raise AttributeError("XReal is immutable")

    # -- conversions ------------------------------------------------------

    def __float__(self) -> float:
        return to_float(self._v, rnd=_RND)

    def to_decimal(self) -> str:
        """Decimal string that round-trips at this value's precision."""
        return to_str(self._v, repr_dps(self.precision.bits))

    @classmethod
    def from_decimal(cls, s: str, precision: Precision) -> "XReal":
        return cls(from_str(s, precision.bits, _RND), precision)

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, XReal):
            return other._v, Precision(max(self.precision.bits, other.precision.bits))
        if isinstance(other, int):
            return from_int(other), self.precision
        if isinstance(other, float):
            return from_float(other), self.precision
        return None, None

    def __add__(self, other):
        raw, prec = self._coerce(other)
        if raw is None:
            return NotImplemented
        return XReal(mpf_add(self._v, raw, prec.bits, _RND), prec)

    __radd__ = __add__

    def __sub__(self, other):
        raw, prec = self._coerce(other)
        if raw is None:
            return NotImplemented
        return XReal(mpf_sub(self._v, raw, prec.bits, _RND), prec)

    def __rsub__(self, other):
        raw, prec = self._coerce(other)
        if raw is None:
            return NotImplemented
        return XReal(mpf_sub(raw, self._v, prec.bits, _RND), prec)

    def __mul__(self, other):
        raw, prec = self._coerce(other)
        if raw is None:
            return NotImplemented
        return XReal(mpf_mul(self._v, raw, prec.bits, _RND), prec)

    __rmul__ = __mul__

    def __truediv__(self, other):
        raw, prec = self._coerce(other)
        if raw is None:
            return NotImplemented
        return XReal(mpf_div(self._v, raw, prec.bits, _RND), prec)

    def __rtruediv__(self, other):
        raw, prec = self._coerce(other)
        if raw is None:
            return NotImplemented
        return XReal(mpf_div(raw, self._v, prec.bits, _RND), prec)

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return XReal(mpf_pow_int(self._v, k, self.precision.bits, _RND), self.precision)

    def __neg__(self):
        return XReal(mpf_neg(self._v), self.precision)

    def __abs__(self):
        return XReal(mpf_abs(self._v), self.precision)

    # -- comparisons (exact, precision-independent) ------------------------

    def __eq__(self, other):
        raw, _ = self._coerce(other)
        if raw is None:
            return NotImplemented
        return mpf_eq(self._v, raw)

    def __lt__(self, other):
        raw, _ = self._coerce(other)
        if raw is None:
            return NotImplemented
        return mpf_lt(self._v, raw)

    def __le__(self, other):
        raw, _ = self._coerce(other)
        if raw is None:
            return NotImplemented
        return mpf_le(self._v, raw)

    def __gt__(self, other):
        raw, _ = self._coerce(other)
        if raw is None:
            return NotImplemented
        return mpf_gt(self._v, raw)

    def __ge__(self, other):
        raw, _ = self._coerce(other)
        if raw is None:
            return NotImplemented
        return mpf_ge(self._v, raw)

    def __hash__(self):
        return hash(self._v)

    def is_zero(self) -> bool:
        return mpf_eq(self._v, from_int(0))

    def __repr__(self):
        return f"XReal({float(self)!r}, bits={self.precision.bits})"
