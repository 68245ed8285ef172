"""Log-space enclosures of log Gamma(x+1) for the seven bound families.

Every family is normalized to bracket log Gamma(x+1) so widths are directly
comparable: the two digamma-shift families (``AB2005``, ``BATIR_DELTA``)
natively bound Gamma(x) and are shifted by ln x through the functional
equation.  All results live in log space; exponentiation happens only on
explicit request in the CLI.

Best-possible constants are computed at import time from their closed forms
in two-term arithmetic.  One constant needs care: the factorial enclosure
uses the *attained* lower constant ``e * (18/25)**(1/4)`` (equality at
n = 1) rather than the commonly printed
``(e/sqrt(2pi)) * (18/25)**(1/4) = 0.998936...``, which is that same
constant divided by sqrt(2pi) and is valid but loose by exactly that
factor; the printed digits remain available as
``CONSTANTS.beta_lo_normalized``.  The analogous printed global-quartic
lower constant 0.821728... is kept as is, so its nominal equality point
x = 0 is a calibration point of the sqrt(2pi)-normalized ratio rather than
a point where the log-space gap vanishes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import _kernels as _k
from .extprec import ExtendedScalar, _wrap, dd_exp, dd_ln, dd_log1p
from .special import (
    DEFAULT_CONFIG,
    HALF_LN_2PI,
    HALF_LN_PI,
    ORACLE_EPS,
    OracleConfig,
    digamma_ref,
    lgamma_ref,
)

__all__ = [
    "DomainError",
    "BoundFamily",
    "Enclosure",
    "Constants",
    "CONSTANTS",
    "FAMILIES",
    "FAMILY_IDS",
    "delta_star",
    "enclose_lgamma",
    "enclose_factorial",
    "tightness",
    "TightnessRecord",
    "quartic_excess",
]


class DomainError(ValueError):
    """Argument outside a bound family's validity domain."""


@dataclass(frozen=True)
class BoundFamily:
    """Identifier, validity domain and strictness metadata for one family."""

    id: str
    domain_min: float
    strict_lower: bool
    strict_upper: bool
    equality_points: tuple[float, ...] = ()
    #: domain excludes domain_min itself (digamma blows up at 0)
    open_min: bool = False
    #: natural-number grid is the family's native statement (CLI factorial)
    integer_grid: bool = False


FAMILIES: dict[str, BoundFamily] = {
    f.id: f
    for f in (
        BoundFamily("AB2005", 0.0, True, True, open_min=True),
        BoundFamily("BATIR_DELTA", 0.0, True, True, open_min=True),
        BoundFamily("QUARTIC_SHARP", 1.0, False, True, equality_points=(1.0,)),
        BoundFamily("QUARTIC_GLOBAL", 0.0, True, True, equality_points=(0.0,)),
        BoundFamily("CUBIC_REF2", 0.0, True, True),
        BoundFamily("DIGAMMA_ARG", 0.0, False, False, equality_points=(0.0,)),
        BoundFamily(
            "FACTORIAL", 1.0, False, True, equality_points=(1.0,), integer_grid=True
        ),
    )
}

FAMILY_IDS = tuple(FAMILIES)

_THIRD = ExtendedScalar(_k.THIRD_HI, _k.THIRD_LO)
_ONE_18 = ExtendedScalar.from_fraction(Fraction(1, 18))
_ONE_30 = ExtendedScalar.from_fraction(Fraction(1, 30))
_ONE_100 = ExtendedScalar.from_fraction(Fraction(1, 100))
_LN_18 = dd_ln(18)
_LN_25_18 = dd_ln(ExtendedScalar.from_fraction(Fraction(25, 18)))


def _make_constants():
    e4 = dd_exp(4)
    pi = ExtendedScalar(_k.PI_HI, _k.PI_LO)
    a_star_lo = e4 / (pi * pi * 4) - ExtendedScalar.from_fraction(Fraction(4, 3))
    ln_alpha_lo = _LN_18 * 0.25 - HALF_LN_2PI
    ln_beta_lo = 1 - _LN_25_18 * 0.25
    return Constants(
        a_star_lo=a_star_lo,
        a_star_hi=_ONE_18,
        alpha_lo=dd_exp(ln_alpha_lo),
        alpha_hi=dd_exp(HALF_LN_2PI),
        beta_lo=dd_exp(ln_beta_lo),
        beta_hi=dd_exp(HALF_LN_2PI),
        beta_lo_normalized=dd_exp(ln_beta_lo - HALF_LN_2PI),
        ln_alpha_lo=ln_alpha_lo,
        ln_alpha_hi=HALF_LN_2PI,
        ln_beta_lo=ln_beta_lo,
        ln_beta_hi=HALF_LN_2PI,
    )


@dataclass(frozen=True)
class Constants:
    """Best-possible constants of the quartic/factorial families.

    a_star_lo = e^4/(4 pi^2) - 4/3     (quartic-sharp lower, equality x=1)
    a_star_hi = 1/18                   (quartic-sharp upper, limit x->inf)
    alpha_lo  = 18^(1/4)/sqrt(2 pi)    (published global-quartic lower)
    alpha_hi  = sqrt(2 pi)             (global-quartic upper, Stirling limit)
    beta_lo   = e (18/25)^(1/4)        (factorial lower, equality n=1)
    beta_hi   = sqrt(2 pi)             (factorial upper, Stirling limit)
    beta_lo_normalized = beta_lo/sqrt(2 pi) = 0.998936...  (published form)
    """

    a_star_lo: ExtendedScalar
    a_star_hi: ExtendedScalar
    alpha_lo: ExtendedScalar
    alpha_hi: ExtendedScalar
    beta_lo: ExtendedScalar
    beta_hi: ExtendedScalar
    beta_lo_normalized: ExtendedScalar
    ln_alpha_lo: ExtendedScalar
    ln_alpha_hi: ExtendedScalar
    ln_beta_lo: ExtendedScalar
    ln_beta_hi: ExtendedScalar


CONSTANTS = _make_constants()


@dataclass(frozen=True)
class Enclosure:
    """Log-space lower/upper pair bracketing log Gamma(x+1)."""

    lo: ExtendedScalar
    hi: ExtendedScalar
    x: float
    family: str

    def contains(self, value: ExtendedScalar, margin: float = ORACLE_EPS) -> bool:
        return self.lo - margin <= value <= self.hi + margin

    @property
    def width(self) -> ExtendedScalar:
        return self.hi - self.lo


@dataclass(frozen=True)
class TightnessRecord:
    """Per-point gap report of one enclosure against the oracle."""

    x: float
    family: str
    log_lower: ExtendedScalar
    log_upper: ExtendedScalar
    log_ref: ExtendedScalar
    gap_lower: ExtendedScalar
    gap_upper: ExtendedScalar
    width: ExtendedScalar


def delta_star(x: float) -> ExtendedScalar:
    """The improved digamma shift delta*(x) = 1/2/((x+1)log(1+1/x) - 1).

    Evaluated without cancellation (see the kernel) and via the asymptotic
    form x + 1/3 - 1/(18x) beyond 1e12.  Satisfies x < delta*(x) < x + 1/3.
    """
    x = float(x)
    if not x > 0.0:
        raise DomainError(f"delta_star requires x > 0, got {x!r}")
    return _wrap(_k.dd_delta_star(x))


def _xlnx_minus_x(x: float) -> ExtendedScalar:
    if x == 0.0:
        return ExtendedScalar(0.0)
    return dd_ln(x) * x - x


def _quartic_log(x: float, c: ExtendedScalar) -> ExtendedScalar:
    # (1/4) ln(x^2 + x/3 + c); x^2 enters exactly via two_prod
    x2 = ExtendedScalar(*_k.two_prod(x, x))
    return dd_ln(x2 + _THIRD * x + c) * 0.25


def _cubic_log(x: float, c: ExtendedScalar) -> ExtendedScalar:
    # (1/6) ln(8x^3 + 4x^2 + x + c) by Horner
    p = ExtendedScalar(8.0) * x + 4.0
    p = p * x + 1.0
    p = p * x
    return dd_ln(p + c) / 6


def _resolve(family) -> BoundFamily:
    if isinstance(family, BoundFamily):
        return family
    try:
        return FAMILIES[str(family)]
    except KeyError:
        raise DomainError(f"unknown bound family {family!r}") from None


def enclose_lgamma(
    family, x: float, config: OracleConfig = DEFAULT_CONFIG
) -> Enclosure:
    """Log-space enclosure of log Gamma(x+1) for one bound family."""
    fam = _resolve(family)
    x = float(x)
    if not math.isfinite(x) or x < fam.domain_min or (fam.open_min and x == fam.domain_min):
        bound = f"> {fam.domain_min:g}" if fam.open_min else f">= {fam.domain_min:g}"
        raise DomainError(f"family {fam.id} requires x {bound}, got {x!r}")

    if fam.id in ("AB2005", "BATIR_DELTA"):
        base = _xlnx_minus_x(x) + HALF_LN_2PI + dd_ln(x)
        lo = base - digamma_ref(ExtendedScalar(x) + _THIRD, config) * 0.5
        if fam.id == "AB2005":
            hi = base - digamma_ref(x, config) * 0.5
        else:
            hi = base - digamma_ref(delta_star(x), config) * 0.5
    elif fam.id == "QUARTIC_SHARP":
        base = _xlnx_minus_x(x) + HALF_LN_2PI
        lo = base + _quartic_log(x, CONSTANTS.a_star_lo)
        hi = base + _quartic_log(x, CONSTANTS.a_star_hi)
    elif fam.id == "QUARTIC_GLOBAL":
        base = _xlnx_minus_x(x) + _quartic_log(x, _ONE_18)
        lo = base + CONSTANTS.ln_alpha_lo
        hi = base + CONSTANTS.ln_alpha_hi
    elif fam.id == "CUBIC_REF2":
        base = _xlnx_minus_x(x) + HALF_LN_PI
        lo = base + _cubic_log(x, _ONE_100)
        hi = base + _cubic_log(x, _ONE_30)
    elif fam.id == "DIGAMMA_ARG":
        if x == 0.0:
            zero = ExtendedScalar(0.0)
            return Enclosure(zero, zero, x, fam.id)
        lo = digamma_ref(ExtendedScalar(x) / dd_log1p(x), config) * x
        hi = digamma_ref(ExtendedScalar(0.5 * x) + 1, config) * x
    else:  # FACTORIAL
        base = _xlnx_minus_x(x) + _quartic_log(x, _ONE_18)
        lo = base + CONSTANTS.ln_beta_lo
        hi = base + CONSTANTS.ln_beta_hi
    return Enclosure(lo, hi, x, fam.id)


def enclose_factorial(n: int, config: OracleConfig = DEFAULT_CONFIG) -> Enclosure:
    """Enclosure of ln n! for a natural number n >= 1 (upper via Stirling
    limit, lower attained at n = 1)."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DomainError(f"enclose_factorial requires an integer n >= 1, got {n!r}")
    return enclose_lgamma("FACTORIAL", float(n), config)


def tightness(
    family, x: float, config: OracleConfig = DEFAULT_CONFIG
) -> TightnessRecord:
    """Enclosure gaps against the oracle at one point."""
    enc = enclose_lgamma(family, x, config)
    ref = lgamma_ref(ExtendedScalar(enc.x) + 1, config)
    return TightnessRecord(
        x=enc.x,
        family=enc.family,
        log_lower=enc.lo,
        log_upper=enc.hi,
        log_ref=ref,
        gap_lower=ref - enc.lo,
        gap_upper=enc.hi - ref,
        width=enc.hi - enc.lo,
    )


def quartic_excess(x: float, config: OracleConfig = DEFAULT_CONFIG) -> ExtendedScalar:
    """(Gamma(x+1) / (sqrt(2 pi) x^x e^-x))^4 - x^2 - x/3, oracle-backed.

    Strictly increasing on [1, inf) from a_star_lo (x = 1) to 1/18; the
    calibration function behind the quartic-sharp constants.
    """
    x = float(x)
    if not x > 0.0:
        raise DomainError(f"quartic_excess requires x > 0, got {x!r}")
    arg = (
        lgamma_ref(ExtendedScalar(x) + 1, config)
        - HALF_LN_2PI
        - _xlnx_minus_x(x)
    ) * 4
    x2 = ExtendedScalar(*_k.two_prod(x, x))
    return dd_exp(arg) - x2 - _THIRD * x
