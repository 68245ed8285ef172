"""Two-term extended-precision scalars (~32 significant digits).

``ExtendedScalar`` is an immutable, normalized (hi, lo) pair of binary64
values: hi carries the leading digits, lo the trailing correction, with
|lo| <= ulp(hi)/2 and hi + lo equal to the represented value in exact
arithmetic.  Arithmetic is delegated to the error-free-transformation
kernels in :mod:`gammaenc._kernels`; this layer adds validation, operator
sugar and the range/domain error contracts.

Accuracy contracts (measured worst cases are 1-3 decimal orders better):

=============  =======================================================
operation      relative error bound
=============  =======================================================
add/sub        2**-100 (away from full cancellation of trailing terms;
               the additive error is always below 2**-103 (|a|+|b|))
mul            2**-98  (operand magnitudes below ~1.3e300, where the
               split multiply stays finite)
div            2**-96
ln             1e-28 over the whole positive binary64 range
exp            1e-28 on [-600, 709.78]; below -600 the trailing term
               underflows and accuracy decays toward plain binary64
log1p          1e-28 including |u| <= 1e-10 via a dedicated series
=============  =======================================================
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Integral, Real

from . import _kernels as _k

__all__ = [
    "ExtendedScalar",
    "dd_add",
    "dd_sub",
    "dd_mul",
    "dd_div",
    "dd_ln",
    "dd_exp",
    "dd_log1p",
    "EXP_MAX_ARG",
    "LN2",
    "PI",
]

EXP_MAX_ARG = _k.EXP_MAX_ARG


class ExtendedScalar:
    """Normalized two-term binary64 value hi + lo."""

    __slots__ = ("_hi", "_lo")

    def __init__(self, hi, lo=0.0):
        hi = float(hi)
        lo = float(lo)
        if not (math.isfinite(hi) and math.isfinite(lo)):
            raise ValueError("ExtendedScalar components must be finite")
        h, l = _k.two_sum(hi, lo)
        if not math.isfinite(h):
            raise OverflowError("ExtendedScalar out of binary64 range")
        object.__setattr__(self, "_hi", h)
        object.__setattr__(self, "_lo", l)

    @property
    def hi(self) -> float:
        return self._hi

    @property
    def lo(self) -> float:
        return self._lo

    @classmethod
    def from_fraction(cls, value: Fraction) -> "ExtendedScalar":
        """Round an exact rational to the nearest two-term value."""
        return cls(*_k.split_fraction(Fraction(value)))

    def to_fraction(self) -> Fraction:
        """Exact rational value of the pair (both components are exact)."""
        return Fraction(self._hi) + Fraction(self._lo)

    def __setattr__(self, name, value):
        raise AttributeError("ExtendedScalar is immutable")

    # -- conversions --------------------------------------------------------

    def __float__(self) -> float:
        return self._hi

    def __repr__(self) -> str:
        return f"ExtendedScalar({self._hi!r}, {self._lo!r})"

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, ExtendedScalar):
            return other
        if isinstance(other, (Real, Integral)) and not isinstance(other, bool):
            return ExtendedScalar(float(other))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return _wrap(_k.dd_add(self._hi, self._lo, o._hi, o._lo))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return _wrap(_k.dd_sub(self._hi, self._lo, o._hi, o._lo))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return _wrap(_k.dd_sub(o._hi, o._lo, self._hi, self._lo))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = _k.dd_mul(self._hi, self._lo, o._hi, o._lo)
        _check_mul_range(out)
        return _wrap(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o._hi == 0.0:
            raise ZeroDivisionError("ExtendedScalar division by zero")
        return _wrap(_k.dd_div(self._hi, self._lo, o._hi, o._lo))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o.__truediv__(self)

    def __neg__(self):
        return _wrap((-self._hi, -self._lo))

    def __abs__(self):
        return -self if self._hi < 0.0 else self

    # -- total order (valid because pairs are normalized) -------------------

    def _cmp_key(self, other):
        o = self._coerce(other)
        if o is None:
            return None
        d = _k.dd_sub(self._hi, self._lo, o._hi, o._lo)
        return d[0] + d[1]

    def __eq__(self, other):
        key = self._cmp_key(other)
        return NotImplemented if key is None else key == 0.0

    def __lt__(self, other):
        key = self._cmp_key(other)
        return NotImplemented if key is None else key < 0.0

    def __le__(self, other):
        key = self._cmp_key(other)
        return NotImplemented if key is None else key <= 0.0

    def __gt__(self, other):
        key = self._cmp_key(other)
        return NotImplemented if key is None else key > 0.0

    def __ge__(self, other):
        key = self._cmp_key(other)
        return NotImplemented if key is None else key >= 0.0

    def __hash__(self):
        # matches hash(float)/hash(Fraction) so mixed-type equality is safe
        return hash(self.to_fraction())


def _wrap(pair) -> ExtendedScalar:
    hi, lo = float(pair[0]), float(pair[1])  # numpy scalars leak in pure mode
    if not math.isfinite(hi):
        raise OverflowError("extended-precision result out of binary64 range")
    out = ExtendedScalar.__new__(ExtendedScalar)
    object.__setattr__(out, "_hi", hi)
    object.__setattr__(out, "_lo", lo)
    return out


_DBL_MIN = 2.2250738585072014e-308


def _check_mul_range(pair):
    hi = pair[0]
    if hi != 0.0 and abs(hi) < _DBL_MIN:
        raise OverflowError("extended-precision product underflowed to subnormal")


def _as_pair(x) -> tuple[float, float]:
    if isinstance(x, ExtendedScalar):
        return x.hi, x.lo
    xf = float(x)
    if not math.isfinite(xf):
        raise ValueError("argument must be finite")
    return xf, 0.0


def dd_add(a, b) -> ExtendedScalar:
    ah, al = _as_pair(a)
    bh, bl = _as_pair(b)
    return _wrap(_k.dd_add(ah, al, bh, bl))


def dd_sub(a, b) -> ExtendedScalar:
    ah, al = _as_pair(a)
    bh, bl = _as_pair(b)
    return _wrap(_k.dd_sub(ah, al, bh, bl))


def dd_mul(a, b) -> ExtendedScalar:
    ah, al = _as_pair(a)
    bh, bl = _as_pair(b)
    out = _k.dd_mul(ah, al, bh, bl)
    _check_mul_range(out)
    return _wrap(out)


def dd_div(a, b) -> ExtendedScalar:
    ah, al = _as_pair(a)
    bh, bl = _as_pair(b)
    if bh == 0.0:
        raise ZeroDivisionError("extended-precision division by zero")
    return _wrap(_k.dd_div(ah, al, bh, bl))


def dd_ln(a) -> ExtendedScalar:
    ah, al = _as_pair(a)
    if ah <= 0.0:
        raise ValueError("dd_ln requires a positive argument")
    return _wrap(_k.dd_ln(ah, al))


def dd_exp(a) -> ExtendedScalar:
    ah, al = _as_pair(a)
    if abs(ah) > EXP_MAX_ARG:
        raise OverflowError("dd_exp argument outside the binary64-exp range")
    return _wrap(_k.dd_exp(ah, al))


def dd_log1p(a) -> ExtendedScalar:
    ah, al = _as_pair(a)
    if ah <= -1.0:
        raise ValueError("dd_log1p requires an argument greater than -1")
    return _wrap(_k.dd_log1p(ah, al))


LN2 = ExtendedScalar(_k.LN2_HI, _k.LN2_LO)
PI = ExtendedScalar(_k.PI_HI, _k.PI_LO)
