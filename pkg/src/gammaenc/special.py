"""Extended-precision log-gamma / digamma oracle and slow series cross-checks.

The oracle raises the argument until it clears ``shift_target``, applies the
Stirling asymptotic series with an exact-rational Bernoulli table there, and
removes the raising logs.  With the default configuration the first omitted
Bernoulli term is below 1e-29 and the measured end-to-end absolute error on
(0, 2e3] stays under 1e-28; ``ORACLE_EPS = 1e-25`` is the documented margin
every containment check uses.

The canonical-product partial sums (``lgamma_series_partial`` /
``digamma_series_partial``) are deliberately plain binary64 with compensated
summation: they are independence checks for the oracle, not precision
anchors, and each reports a rigorous bound on its truncated tail.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Union

import numpy as np

from . import _kernels as _k
from ._accel import NUMBA_ENABLED
from .extprec import ExtendedScalar, _as_pair, _wrap

__all__ = [
    "ORACLE_EPS",
    "EULER_GAMMA",
    "HALF_LN_2PI",
    "HALF_LN_PI",
    "BERNOULLI_2K",
    "OracleConfig",
    "DEFAULT_CONFIG",
    "PartialSum",
    "lgamma_ref",
    "digamma_ref",
    "lgamma_series_partial",
    "digamma_series_partial",
]

#: Worst-case absolute error claimed for the reference evaluators; single
#: source of truth for the "with margin" semantics of containment tests.
ORACLE_EPS = 1e-25

EULER_GAMMA = ExtendedScalar(_k.EULER_GAMMA_HI, _k.EULER_GAMMA_LO)
HALF_LN_2PI = ExtendedScalar(_k.HALF_LN_2PI_HI, _k.HALF_LN_2PI_LO)
HALF_LN_PI = ExtendedScalar(_k.HALF_LN_PI_HI, _k.HALF_LN_PI_LO)

#: Exact Bernoulli numbers B_2 .. B_26 backing the Stirling tails.
BERNOULLI_2K = _k.BERNOULLI_2K

_TRUNCATION_LIMIT = 1e-29


def _stirling_truncation_bound(shift_target: float, series_terms: int) -> float:
    """Magnitude of the first omitted Bernoulli term at the shifted argument.

    Both asymptotic tails (log-gamma and digamma) are evaluated; the larger
    first-omitted term is returned.
    """
    m = series_terms
    b_next = abs(BERNOULLI_2K[m])  # B_{2(m+1)}
    y = Fraction(shift_target)
    lgamma_term = Fraction(b_next) / ((2 * m + 2) * (2 * m + 1) * y ** (2 * m + 1))
    psi_term = Fraction(b_next) / ((2 * m + 2) * y ** (2 * m + 2))
    return float(max(lgamma_term, psi_term))


@dataclass(frozen=True)
class OracleConfig:
    """Argument-raising threshold and Stirling term count for the oracle."""

    shift_target: float = 24.0
    series_terms: int = 12
    euler_gamma: ExtendedScalar = field(default=EULER_GAMMA)

    def __post_init__(self):
        if not (math.isfinite(self.shift_target) and self.shift_target >= 10.0):
            raise ValueError("shift_target must be finite and >= 10")
        if not 6 <= self.series_terms <= _k.MAX_SERIES_TERMS:
            raise ValueError(
                f"series_terms must be in [6, {_k.MAX_SERIES_TERMS}]"
            )
        bound = _stirling_truncation_bound(self.shift_target, self.series_terms)
        if bound > _TRUNCATION_LIMIT:
            raise ValueError(
                "Stirling truncation too coarse: first omitted term "
                f"{bound:.3e} exceeds {_TRUNCATION_LIMIT:.0e}; raise "
                "shift_target or series_terms"
            )

    @property
    def truncation_bound(self) -> float:
        return _stirling_truncation_bound(self.shift_target, self.series_terms)


DEFAULT_CONFIG = OracleConfig()

Argument = Union[float, int, ExtendedScalar]


def _positive_pair(x: Argument, name: str) -> tuple[float, float]:
    xh, xl = _as_pair(x)
    if xh <= 0.0:
        raise ValueError(f"{name} requires a positive argument, got {xh!r}")
    return xh, xl


def lgamma_ref(x: Argument, config: OracleConfig = DEFAULT_CONFIG) -> ExtendedScalar:
    """log Gamma(x) for x > 0 with absolute error <= 1e-26 on (0, 2e3].

    Accepts an ``ExtendedScalar`` argument so shifted points like x + 1/3
    can be evaluated without rounding the argument to binary64 first.
    """
    xh, xl = _positive_pair(x, "lgamma_ref")
    return _wrap(_k.dd_lgamma(xh, xl, config.shift_target, config.series_terms))


def digamma_ref(x: Argument, config: OracleConfig = DEFAULT_CONFIG) -> ExtendedScalar:
    """psi(x) for x > 0 with absolute error <= 1e-26 on (0, 2e3]."""
    xh, xl = _positive_pair(x, "digamma_ref")
    return _wrap(_k.dd_digamma(xh, xl, config.shift_target, config.series_terms))


class PartialSum(NamedTuple):
    """Partial-sum approximation plus a rigorous truncated-tail bound."""

    value: float
    tail: float


_CHUNK = 1 << 18


def _series_sum_numpy(x: float, k_max: int, which: str) -> float:
    # chunked vectorized terms, pairwise-summed per chunk, Kahan across chunks
    total = 0.0
    comp = 0.0
    for start in range(1, k_max + 1, _CHUNK):
        stop = min(start + _CHUNK, k_max + 1)
        k = np.arange(start, stop, dtype=np.float64)
        if which == "lgamma":
            z = x / k
            chunk = float(np.sum(z - np.log1p(z)))
        else:
            chunk = float(np.sum(x / (k * (k + x))))
        y = chunk - comp
        t = total + y
        comp = (t - total) - y
        total = t
    return total


def _series_sum(x: float, k_max: int, which: str) -> float:
    if NUMBA_ENABLED:
        if which == "lgamma":
            return _k.lgamma_series_sum(x, k_max)
        return _k.digamma_series_sum(x, k_max)
    return _series_sum_numpy(x, k_max, which)


def _series_args(x, k_max: int) -> tuple[float, int]:
    xf = float(x)
    if not math.isfinite(xf) or xf <= -1.0:
        raise ValueError("series argument must be finite and greater than -1")
    k_max = int(k_max)
    if k_max < 1:
        raise ValueError("term count must be at least 1")
    return xf, k_max


def lgamma_series_partial(x, k_max: int) -> PartialSum:
    """Canonical-product partial sum for log Gamma(x+1), plus tail bound.

    value = -gamma*x + sum_{k<=K} [x/k - log(1 + x/k)]; the omitted tail is
    below |x|(|x|+1)/(2K) in magnitude.
    """
    xf, k_max = _series_args(x, k_max)
    s = _series_sum(xf, k_max, "lgamma")
    value = -_k.EULER_GAMMA_HI * xf + s
    tail = abs(xf) * (abs(xf) + 1.0) / (2.0 * k_max)
    return PartialSum(value, tail)


def digamma_series_partial(x, k_max: int) -> PartialSum:
    """Series partial sum for psi(x+1): -gamma + sum [1/k - 1/(k+x)]."""
    xf, k_max = _series_args(x, k_max)
    s = _series_sum(xf, k_max, "digamma")
    value = -_k.EULER_GAMMA_HI + s
    tail = abs(xf) / k_max
    return PartialSum(value, tail)
