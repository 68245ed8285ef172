"""Numerical and exact-rational verification of the proof-support objects.

Two kinds of checks live here.  Quantities defined through logs or the
oracle (theta, f, h, g, phi, the Theta normalization and the Raabe
integral) are evaluated in two-term arithmetic with cancellation-safe
kernels.  Claims that reduce to polynomial signs (the degree-44 sharpness
polynomial, the p/q curvature pair, the psi tail coefficients) are settled
in exact big-integer rational arithmetic -- no rounding, no tolerance.

Continuous-range positivity/negativity claims are verified by dense
sampling plus exact evaluation at rational points, not symbolically; the
verification suites report the densest grid checked.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import _kernels as _k
from ._quad import integrate
from .extprec import ExtendedScalar, _wrap, dd_ln
from .special import (
    DEFAULT_CONFIG,
    EULER_GAMMA,
    HALF_LN_2PI,
    ORACLE_EPS,
    OracleConfig,
    digamma_ref,
    lgamma_ref,
)

__all__ = [
    "RationalPoly",
    "theta",
    "f_fn",
    "h_fn",
    "g_fn",
    "phi",
    "eq18_sign",
    "eq18_value",
    "EQ18_POLY",
    "EQ18_CROSSOVER_BRACKET",
    "psi_tail_check",
    "psi_tail_margin",
    "PSI_TAIL_COEFFICIENTS",
    "theta_cap",
    "theta_cap_prime",
    "pq_values",
    "pq_positivity",
    "pq_identity_residual",
    "raabe_check",
    "eq10_residual",
]


# ---------------------------------------------------------------------------
# exact rational polynomials
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RationalPoly:
    """Dense polynomial with exact rational coefficients, ascending degree."""

    coefficients: tuple[Fraction, ...]

    @classmethod
    def of(cls, *coefficients) -> "RationalPoly":
        coeffs = [Fraction(c) for c in coefficients]
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        return cls(tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __add__(self, other: "RationalPoly") -> "RationalPoly":
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RationalPoly.of(*out)

    def __neg__(self) -> "RationalPoly":
        return RationalPoly(tuple(-c for c in self.coefficients))

    def __sub__(self, other: "RationalPoly") -> "RationalPoly":
        return self + (-other)

    def __mul__(self, other) -> "RationalPoly":
        if isinstance(other, (int, Fraction)):
            return RationalPoly.of(*(c * other for c in self.coefficients))
        out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return RationalPoly.of(*out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "RationalPoly":
        if exponent < 0:
            raise ValueError("negative polynomial powers are not defined")
        result = RationalPoly.of(1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def compose(self, inner: "RationalPoly") -> "RationalPoly":
        result = RationalPoly.of(0)
        for c in reversed(self.coefficients):
            result = result * inner + RationalPoly.of(c)
        return result

    def __call__(self, x) -> Fraction:
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc


def _monomial(coefficient, degree: int) -> RationalPoly:
    return RationalPoly.of(*([0] * degree + [coefficient]))


# sharpness polynomial: (8x^3+4x^2+x+1/100)^2 p1^3 - p2^3 (2x+1/3)^3, with
# p1, p2 the common-denominator numerators of the truncated psi-tail bound
# over 720720 x^14.  The x^45..x^43 terms cancel exactly; degree 42.
_P1 = RationalPoly.of(
    -60060, 0, 15202, 0, -5460, 0, 3003, 0, -2860, 0, 6006, 0, -60060, 360360
)
_P2 = _monomial(720720, 14)
_CUBIC_LOW = RationalPoly.of(Fraction(1, 100), 1, 4, 8)
_LINEAR = RationalPoly.of(Fraction(1, 3), 2)
EQ18_POLY = _CUBIC_LOW ** 2 * _P1 ** 3 - _P2 ** 3 * _LINEAR ** 3

#: Exact-bisection bracket of the sign change of EQ18_POLY: the expression
#: is negative on [1, lo] and positive from hi on.  (The claimed positivity
#: on all of [1, 50] is numerically false; see the verification suites.)
EQ18_CROSSOVER_BRACKET = (
    Fraction(14799810007, 10**10),
    Fraction(14799810008, 10**10),
)


def eq18_value(x) -> Fraction:
    """Exact value of the sharpness polynomial at a rational x >= 1."""
    x = Fraction(x)
    if x < 1:
        raise ValueError(f"eq18 is stated for x >= 1, got {x}")
    return EQ18_POLY(x)


def eq18_sign(x) -> int:
    """Exact sign (-1, 0, 1) of the sharpness polynomial at rational x >= 1."""
    value = eq18_value(x)
    return (value > 0) - (value < 0)


# curvature pair: Theta''(x+1) - Theta''(x) = p(x)/q(x)
_P_POLY = RationalPoly.of(625, 9816, 42516, 63936, 38556, 7776)


def _q_value(x: Fraction) -> Fraction:
    return (
        x
        * (1 + x) ** 2
        * (1 + 6 * x + 18 * x**2) ** 2
        * (25 + 42 * x + 18 * x**2) ** 2
    )


def pq_values(x) -> tuple[Fraction, Fraction]:
    """Exact values of the curvature numerator p and denominator q."""
    x = Fraction(x)
    if x < 0:
        raise ValueError(f"p, q are stated for x >= 0, got {x}")
    return _P_POLY(x), _q_value(x)


def pq_positivity(x) -> tuple[int, int]:
    """Exact signs of p(x) and q(x) for rational x >= 0."""
    p, q = pq_values(x)
    return ((p > 0) - (p < 0), (q > 0) - (q < 0))


def pq_identity_residual(x) -> Fraction:
    """Exact residual of the telescoping identity behind p and q.

    The second derivative of the Theta normalization shifts by the rational
    function -1/(x+1)^2 - 1/(x+1) + 1/x + R(x+1) - R(x), where
    R(x) = (162x^2 + 54x)/(18x^2 + 6x + 1)^2 collects the algebraic part of
    Theta''.  That combination must equal p(x)/q(x) identically; the
    residual is zero for every rational x > 0.
    """
    x = Fraction(x)
    if x <= 0:
        raise ValueError(f"identity residual requires x > 0, got {x}")

    def r(y: Fraction) -> Fraction:
        return (162 * y**2 + 54 * y) / (18 * y**2 + 6 * y + 1) ** 2

    lhs = -1 / (x + 1) ** 2 - 1 / (x + 1) + 1 / x + r(x + 1) - r(x)
    p, q = pq_values(x)
    return lhs - p / q


# ---------------------------------------------------------------------------
# Stirling-remainder shift theta and its relatives
# ---------------------------------------------------------------------------


def theta(k: int, x: float) -> ExtendedScalar:
    """Remainder shift theta(k) for the Stirling-type telescoping at x.

    theta(k) = 1/2 / ((x+k) log((x+k)/(x+k-1)) - 1) - (x + k - 1), i.e.
    f(x + k - 1); lies in (0, 1), strictly increasing in k with limit 1/3.
    """
    if k != int(k) or int(k) < 1:
        raise ValueError(f"theta requires an integer k >= 1, got {k!r}")
    k = int(k)
    x = float(x)
    if not x > 0.0:
        raise ValueError(f"theta requires x > 0, got {x!r}")
    return f_fn(x + (k - 1))


def f_fn(u: float) -> ExtendedScalar:
    """f(u) = 1/2/((u+1) log1p(1/u) - 1) - u, increasing to 1/3."""
    u = float(u)
    if not u > 0.0:
        raise ValueError(f"f_fn requires u > 0, got {u!r}")
    return _wrap(_k.dd_theta_f(u))


def h_fn(t: float) -> ExtendedScalar:
    """h(t) = t^2 log1p(t) - t^3 + 2((t+1) log1p(t) - t)^2, negative for t > 0."""
    t = float(t)
    if not t > 0.0:
        raise ValueError(f"h_fn requires t > 0, got {t!r}")
    return _wrap(_k.dd_h_aux(t))


def g_fn(t: float) -> ExtendedScalar:
    """g(t) = 8 log1p(t) - (6t^3 + 12t^2 + 8t)/(t+1)^2, strictly decreasing."""
    t = float(t)
    if not t > 0.0:
        raise ValueError(f"g_fn requires t > 0, got {t!r}")
    return _wrap(_k.dd_g_aux(t))


def phi(k: float, x: float) -> ExtendedScalar:
    """Mean-value shift phi(k) = x/log(1 + x/k) - k, in (0, x), limit x/2."""
    k = float(k)
    x = float(x)
    if k < 1.0:
        raise ValueError(f"phi requires k >= 1, got {k!r}")
    if not x > 0.0:
        raise ValueError(f"phi requires x > 0, got {x!r}")
    return _wrap(_k.dd_phi_mvt(k, x))


# ---------------------------------------------------------------------------
# psi tail bound
# ---------------------------------------------------------------------------

#: (numerator, denominator, power): the truncated alternating envelope
#: 1/(2x) + 1/(12x^2) - 1/(120x^4) + ... + 1/(12x^14), an upper bound for
#: log x - psi(x) on x >= 1.  Signs follow the Bernoulli envelope property
#: (truncation after a positive term overshoots).
PSI_TAIL_COEFFICIENTS = (
    (1, 2, 1),
    (1, 12, 2),
    (-1, 120, 4),
    (1, 252, 6),
    (-1, 240, 8),
    (1, 132, 10),
    (-691, 32760, 12),
    (1, 12, 14),
)


def psi_tail_margin(x: float, config: OracleConfig = DEFAULT_CONFIG) -> ExtendedScalar:
    """rhs - (log x - psi(x)); positive when the tail bound holds."""
    x = float(x)
    if x < 1.0:
        raise ValueError(f"psi tail bound is stated for x >= 1, got {x!r}")
    xq = Fraction(x)
    rhs = sum(Fraction(n, d) / xq**p for n, d, p in PSI_TAIL_COEFFICIENTS)
    lhs = dd_ln(x) - digamma_ref(x, config)
    return ExtendedScalar.from_fraction(rhs) - lhs


def psi_tail_check(x: float, config: OracleConfig = DEFAULT_CONFIG) -> bool:
    """True iff log x - psi(x) stays below the truncated envelope (with the
    oracle margin)."""
    return psi_tail_margin(x, config) > -ORACLE_EPS


# ---------------------------------------------------------------------------
# Theta normalization of the global quartic bound
# ---------------------------------------------------------------------------

_THIRD = ExtendedScalar(_k.THIRD_HI, _k.THIRD_LO)
_ONE_18 = ExtendedScalar.from_fraction(Fraction(1, 18))


def theta_cap(x: float, config: OracleConfig = DEFAULT_CONFIG) -> ExtendedScalar:
    """Theta(x) = log Gamma(x+1) - x log x + x - ln(2 pi)/2
    - ln(x^2 + x/3 + 1/18)/4; increasing from 1/4 ln 18 - 1/2 ln 2pi to 0."""
    x = float(x)
    if not x > 0.0:
        raise ValueError(f"theta_cap requires x > 0, got {x!r}")
    x2 = ExtendedScalar(*_k.two_prod(x, x))
    quart = dd_ln(x2 + _THIRD * x + _ONE_18) * 0.25
    return (
        lgamma_ref(ExtendedScalar(x) + 1, config)
        - dd_ln(x) * x
        + x
        - HALF_LN_2PI
        - quart
    )


def theta_cap_prime(x: float, config: OracleConfig = DEFAULT_CONFIG) -> ExtendedScalar:
    """Theta'(x) = psi(x+1) - log x - (18x+3)/(36x^2+12x+2); positive,
    strictly decreasing to 0."""
    x = float(x)
    if not x > 0.0:
        raise ValueError(f"theta_cap_prime requires x > 0, got {x!r}")
    x2 = ExtendedScalar(*_k.two_prod(x, x))
    num = ExtendedScalar(18.0) * x + 3
    den = x2 * 36 + ExtendedScalar(12.0) * x + 2
    return digamma_ref(ExtendedScalar(x) + 1, config) - dd_ln(x) - num / den


# ---------------------------------------------------------------------------
# Raabe integral identity and the telescoped canonical-product identity
# ---------------------------------------------------------------------------


def raabe_check(x: float, nodes: int = 64, config: OracleConfig = DEFAULT_CONFIG) -> float:
    """|GL quadrature of log Gamma over [x, x+1] - (x ln x - x + ln(2pi)/2)|.

    The integrand is analytic on the closed interval for x > 0, so with
    two-term nodes the 64-point rule's truncation is far below the oracle
    error; the residual is <= 1e-20 for x >= 0.5 (<= 1e-18 up to x = 100,
    where the integrand magnitude grows).
    """
    x = float(x)
    if not x > 0.0:
        raise ValueError(f"raabe_check requires x > 0, got {x!r}")
    integral = integrate(lambda u: lgamma_ref(u, config), x, ExtendedScalar(x) + 1, nodes)
    closed = dd_ln(x) * x - x + HALF_LN_2PI
    diff = integral - closed
    return abs(float(diff.hi) + float(diff.lo))


def eq10_residual(x: float, k_max: int = 10**5, config: OracleConfig = DEFAULT_CONFIG):
    """Residual and tail bound of the telescoped canonical-product identity.

    x ln x - x + ln(2pi)/2 - log Gamma(x) equals
    (1/2)(-gamma + sum_k [1/k - 1/(k + x - 1 + theta(k))]); the partial sum
    to K has remainder below (x - 2/3)/(2K) because theta(k) < 1/3.
    Returns (|lhs - rhs_partial|, tail_bound); requires x >= 2/3.
    """
    x = float(x)
    if x < 2.0 / 3.0:
        raise ValueError(f"eq10_residual requires x >= 2/3, got {x!r}")
    k_max = int(k_max)
    lhs = dd_ln(x) * x - x + HALF_LN_2PI - lgamma_ref(x, config)
    partial = _k.theta_partial_sum(x, k_max)
    rhs = (ExtendedScalar(partial) - EULER_GAMMA) * 0.5
    diff = lhs - rhs
    residual = abs(diff.hi + diff.lo)
    tail = 0.5 * (x - 2.0 / 3.0) / k_max
    return residual, tail
