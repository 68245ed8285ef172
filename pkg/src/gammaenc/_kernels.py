"""Scalar two-term (double-double) kernels.

Every function here works on raw ``(hi, lo)`` float pairs so that numba can
compile the whole call graph in nopython mode; ``gammaenc.extprec`` wraps
them in the validated ``ExtendedScalar`` object API.  The building blocks
are the classical error-free transformations (two-sum, Dekker split
two-product); products use the split form unconditionally so the compiled
and pure-Python paths are bit-identical.

Transcendental kernels follow one pattern: binary64 seed, one Newton (or
argument-reduced series) refinement carried out in two-term arithmetic.
Measured relative accuracy is ~1e-30 on the ranges this package uses,
comfortably inside the 1e-28 contract of the extprec module.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from ._accel import njit

# ---------------------------------------------------------------------------
# exact-rational helpers used only at import time to bake constants
# ---------------------------------------------------------------------------


def split_fraction(value: Fraction) -> tuple[float, float]:
    """Round an exact rational to a normalized (hi, lo) pair."""
    hi = float(value)
    lo = float(value - Fraction(hi))
    return hi, lo


def _dd_const(decimal_digits: str) -> tuple[float, float]:
    return split_fraction(Fraction(decimal_digits))


# 36-digit decimal expansions; the conversion through Fraction is exact and
# the resulting pair carries ~32 correct digits.
LN2_HI, LN2_LO = _dd_const("0.693147180559945309417232121458176568")
PI_HI, PI_LO = _dd_const("3.14159265358979323846264338327950288")
EULER_GAMMA_HI, EULER_GAMMA_LO = _dd_const("0.577215664901532860606512090082402431")
HALF_LN_2PI_HI, HALF_LN_2PI_LO = _dd_const("0.918938533204672741780329736405617639")
HALF_LN_PI_HI, HALF_LN_PI_LO = _dd_const("0.572364942924700087071713675676529356")
THIRD_HI, THIRD_LO = split_fraction(Fraction(1, 3))

# Bernoulli numbers B_2 .. B_26 (exact).  The oracle uses at most twelve
# Stirling terms; B_26 exists only to bound the first omitted term.
BERNOULLI_2K = (
    Fraction(1, 6),
    Fraction(-1, 30),
    Fraction(1, 42),
    Fraction(-1, 30),
    Fraction(5, 66),
    Fraction(-691, 2730),
    Fraction(7, 6),
    Fraction(-3617, 510),
    Fraction(43867, 798),
    Fraction(-174611, 330),
    Fraction(854513, 138),
    Fraction(-236364091, 2730),
    Fraction(8553103, 6),
)

MAX_SERIES_TERMS = 12


def _bake(values) -> tuple[np.ndarray, np.ndarray]:
    his = np.empty(len(values), dtype=np.float64)
    los = np.empty(len(values), dtype=np.float64)
    for i, v in enumerate(values):
        his[i], los[i] = split_fraction(v)
    return his, los


# Stirling tail coefficients B_2k / (2k (2k-1)) for log-gamma and
# B_2k / (2k) for digamma, k = 1..12.
STIR_HI, STIR_LO = _bake(
    [BERNOULLI_2K[k - 1] / (2 * k * (2 * k - 1)) for k in range(1, MAX_SERIES_TERMS + 1)]
)
PSI_HI, PSI_LO = _bake(
    [BERNOULLI_2K[k - 1] / (2 * k) for k in range(1, MAX_SERIES_TERMS + 1)]
)

# 1/(2j+1) for the atanh-form log1p series; 1/n for the exp Taylor kernel
# and the log1p-remainder series (which needs terms up to t^110 at t=1/2).
_LOG1P_TERMS = 40
INV_ODD_HI, INV_ODD_LO = _bake([Fraction(1, 2 * j + 1) for j in range(_LOG1P_TERMS)])
_EXP_TERMS = 26
_REM_TERMS = 112
INV_NAT_HI, INV_NAT_LO = _bake([Fraction(1, n) for n in range(1, _REM_TERMS + 3)])

_SPLITTER = 134217729.0  # 2**27 + 1
EXP_MAX_ARG = 709.782712893384  # ln(DBL_MAX); the ln kernel needs the full range

# ---------------------------------------------------------------------------
# error-free transformations
# ---------------------------------------------------------------------------


@njit
def two_sum(a, b):
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


@njit
def quick_two_sum(a, b):
    # requires |a| >= |b| or a == 0
    s = a + b
    return s, b - (s - a)


@njit
def two_prod(a, b):
    p = a * b
    ca = _SPLITTER * a
    ahi = ca - (ca - a)
    alo = a - ahi
    cb = _SPLITTER * b
    bhi = cb - (cb - b)
    blo = b - bhi
    return p, ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo


# ---------------------------------------------------------------------------
# double-double arithmetic
# ---------------------------------------------------------------------------


@njit
def dd_add(xh, xl, yh, yl):
    sh, sl = two_sum(xh, yh)
    th, tl = two_sum(xl, yl)
    sl += th
    sh, sl = quick_two_sum(sh, sl)
    sl += tl
    return quick_two_sum(sh, sl)


@njit
def dd_sub(xh, xl, yh, yl):
    return dd_add(xh, xl, -yh, -yl)


@njit
def dd_mul(xh, xl, yh, yl):
    ph, pl = two_prod(xh, yh)
    pl += xh * yl + xl * yh + xl * yl
    return quick_two_sum(ph, pl)


@njit
def dd_mul_f(xh, xl, y):
    # dd times exact binary64
    ph, pl = two_prod(xh, y)
    pl += xl * y
    return quick_two_sum(ph, pl)


@njit
def dd_div(xh, xl, yh, yl):
    q1 = xh / yh
    th, tl = dd_mul_f(yh, yl, q1)
    rh, rl = dd_add(xh, xl, -th, -tl)
    q2 = rh / yh
    th, tl = dd_mul_f(yh, yl, q2)
    rh, rl = dd_add(rh, rl, -th, -tl)
    q3 = rh / yh
    qh, ql = quick_two_sum(q1, q2)
    return dd_add(qh, ql, q3, 0.0)


@njit
def dd_sqr(xh, xl):
    return dd_mul(xh, xl, xh, xl)


# ---------------------------------------------------------------------------
# transcendental kernels
# ---------------------------------------------------------------------------


@njit
def _log1p_series(uh, ul):
    # ln(1+u) = 2 atanh(z), z = u/(2+u); converges for |u| <= 0.5 where
    # z^2 <= 1/9.  Fixed iteration count keeps the path deterministic.
    dh, dl = dd_add(uh, ul, 2.0, 0.0)
    zh, zl = dd_div(uh, ul, dh, dl)
    z2h, z2l = dd_sqr(zh, zl)
    sh = INV_ODD_HI[_LOG1P_TERMS - 1]
    sl = INV_ODD_LO[_LOG1P_TERMS - 1]
    for j in range(_LOG1P_TERMS - 2, -1, -1):
        sh, sl = dd_mul(sh, sl, z2h, z2l)
        sh, sl = dd_add(sh, sl, INV_ODD_HI[j], INV_ODD_LO[j])
    th, tl = dd_mul(zh, zl, sh, sl)
    return dd_mul_f(th, tl, 2.0)


@njit
def dd_exp(xh, xl):
    # argument reduction by ln 2, fixed-length Taylor kernel, exact rescale.
    # Out-of-range arguments return inf/0; the wrapper layer raises.
    if xh > EXP_MAX_ARG:
        return math.inf, 0.0
    if xh < -EXP_MAX_ARG:
        return 0.0, 0.0
    kf = math.floor(xh / LN2_HI + 0.5)
    t1h, t1l = two_prod(LN2_HI, kf)
    t2h, t2l = two_prod(LN2_LO, kf)
    rh, rl = dd_add(xh, xl, -t1h, -t1l)
    rh, rl = dd_add(rh, rl, -t2h, -t2l)
    # exp(r) via nested Taylor: p_n = 1 + (r/n) p_{n+1}
    ph, pl = 1.0, 0.0
    for n in range(_EXP_TERMS, 0, -1):
        sh, sl = dd_mul(rh, rl, INV_NAT_HI[n - 1], INV_NAT_LO[n - 1])
        ph, pl = dd_mul(sh, sl, ph, pl)
        ph, pl = dd_add(ph, pl, 1.0, 0.0)
    k = int(kf)
    return math.ldexp(ph, k), math.ldexp(pl, k)


@njit
def _ln_newton(ah, al):
    # one Newton step y <- y0 + (a e^-y0 - 1) from the binary64 seed
    y0 = math.log(ah)
    eh, el = dd_exp(-y0, 0.0)
    ph, pl = dd_mul(ah, al, eh, el)
    dh, dl = dd_add(ph, pl, -1.0, 0.0)
    return dd_add(y0, 0.0, dh, dl)


@njit
def dd_ln(ah, al):
    # pre: a > 0 (guarded by wrappers).  Near 1 the Newton step would lose
    # relative accuracy to cancellation, so route through the series; at
    # extreme magnitudes rescale by an exact power of two first (the split
    # multiply overflows past ~1.3e300 and exp underflows below ~1e-300).
    if 0.5 < ah < 1.5:
        uh, ul = dd_add(ah, al, -1.0, 0.0)
        if abs(uh) <= 0.5:
            return _log1p_series(uh, ul)
    if ah > 1e150 or ah < 1e-150:
        _, e = math.frexp(ah)
        mh = math.ldexp(ah, -e)  # exact; mantissa in [0.5, 1)
        ml = math.ldexp(al, -e)
        lh, ll = _ln_newton(mh, ml)
        t1h, t1l = two_prod(LN2_HI, float(e))
        t2h, t2l = two_prod(LN2_LO, float(e))
        rh, rl = dd_add(lh, ll, t1h, t1l)
        return dd_add(rh, rl, t2h, t2l)
    return _ln_newton(ah, al)


@njit
def dd_log1p(uh, ul):
    # pre: u > -1
    if abs(uh) <= 0.5:
        return _log1p_series(uh, ul)
    oh, ol = dd_add(uh, ul, 1.0, 0.0)
    return dd_ln(oh, ol)


@njit
def _log1p_remainder(th, tl):
    # log1p(t) - t = -t^2 (1/2 - t/3 + t^2/4 - ...) with full relative
    # accuracy for |t| <= 0.5, where the subtraction form would floor at the
    # two-term representation of log1p(t).
    sh = INV_NAT_HI[_REM_TERMS + 1]
    sl = INV_NAT_LO[_REM_TERMS + 1]
    for j in range(_REM_TERMS - 1, -1, -1):
        sh, sl = dd_mul(sh, sl, -th, -tl)
        sh, sl = dd_add(sh, sl, INV_NAT_HI[j + 1], INV_NAT_LO[j + 1])
    t2h, t2l = dd_sqr(th, tl)
    sh, sl = dd_mul(sh, sl, t2h, t2l)
    return -sh, -sl


# ---------------------------------------------------------------------------
# oracle kernels: log-gamma and digamma by argument raising + Stirling tail
# ---------------------------------------------------------------------------


@njit
def dd_lgamma(xh, xl, shift_target, terms):
    # pre: x > 0.  Raise by n until x+n >= shift_target, apply the Stirling
    # series there, subtract the raising logs.
    n = 0
    if xh < shift_target:
        n = int(math.ceil(shift_target - xh))
    yh, yl = dd_add(xh, xl, float(n), 0.0)
    lyh, lyl = dd_ln(yh, yl)
    ah, al = dd_add(yh, yl, -0.5, 0.0)
    th, tl = dd_mul(ah, al, lyh, lyl)
    th, tl = dd_add(th, tl, -yh, -yl)
    th, tl = dd_add(th, tl, HALF_LN_2PI_HI, HALF_LN_2PI_LO)
    ih, il = dd_div(1.0, 0.0, yh, yl)
    wh, wl = dd_sqr(ih, il)
    sh = STIR_HI[terms - 1]
    sl = STIR_LO[terms - 1]
    for k in range(terms - 2, -1, -1):
        sh, sl = dd_mul(sh, sl, wh, wl)
        sh, sl = dd_add(sh, sl, STIR_HI[k], STIR_LO[k])
    sh, sl = dd_mul(sh, sl, ih, il)
    th, tl = dd_add(th, tl, sh, sl)
    for k in range(n):
        gh, gl = dd_add(xh, xl, float(k), 0.0)
        lgh, lgl = dd_ln(gh, gl)
        th, tl = dd_add(th, tl, -lgh, -lgl)
    return th, tl


@njit
def dd_digamma(xh, xl, shift_target, terms):
    # pre: x > 0.  psi(x) = psi(x+n) - sum 1/(x+k); asymptotic series at x+n.
    n = 0
    if xh < shift_target:
        n = int(math.ceil(shift_target - xh))
    yh, yl = dd_add(xh, xl, float(n), 0.0)
    th, tl = dd_ln(yh, yl)
    ih, il = dd_div(1.0, 0.0, yh, yl)
    th, tl = dd_add(th, tl, -0.5 * ih, -0.5 * il)
    wh, wl = dd_sqr(ih, il)
    sh = PSI_HI[terms - 1]
    sl = PSI_LO[terms - 1]
    for k in range(terms - 2, -1, -1):
        sh, sl = dd_mul(sh, sl, wh, wl)
        sh, sl = dd_add(sh, sl, PSI_HI[k], PSI_LO[k])
    sh, sl = dd_mul(sh, sl, wh, wl)
    th, tl = dd_add(th, tl, -sh, -sl)
    for k in range(n):
        gh, gl = dd_add(xh, xl, float(k), 0.0)
        rh, rl = dd_div(1.0, 0.0, gh, gl)
        th, tl = dd_add(th, tl, -rh, -rl)
    return th, tl


# ---------------------------------------------------------------------------
# stabilized evaluators for the bound machinery
# ---------------------------------------------------------------------------


@njit
def dd_theta_f(u):
    """f(u) = 1/2 / ((u+1) log1p(1/u) - 1) - u, i.e. delta*(u) - u.

    Direct evaluation at fixed u cannot resolve the denominator past the
    rounding of 1/u, which costs ~u^2 * 2^-107 of absolute accuracy in
    delta*.  For u >= 2 the kernel therefore evaluates at the perturbed
    argument u' = 1/t with t the two-term reciprocal (so every piece is
    consistent in t) and restores u - u' -- which is exactly computable --
    through the derivative d(delta*)/du ~= 1.
    """
    if u < 2.0:
        th, tl = dd_div(1.0, 0.0, u, 0.0)
        lh, ll = dd_log1p(th, tl)
        sh, sl = two_sum(u, 1.0)
        ph, pl = dd_mul(sh, sl, lh, ll)
        dh, dl = dd_add(ph, pl, -1.0, 0.0)
        qh, ql = dd_div(0.5, 0.0, dh, dl)
        return dd_add(qh, ql, -u, 0.0)
    th, tl = dd_div(1.0, 0.0, u, 0.0)
    mh, ml = _log1p_remainder(th, tl)  # m = log1p(t) - t ~= -t^2/2
    # denominator at u' = 1/t:  (1/t + 1)(t + m) - 1 = m/t + t + m
    dh, dl = dd_div(mh, ml, th, tl)
    dh, dl = dd_add(dh, dl, th, tl)
    dh, dl = dd_add(dh, dl, mh, ml)
    qh, ql = dd_div(0.5, 0.0, dh, dl)  # = delta*(u')
    # u - u' = (u*t - 1)/t with the numerator assembled exactly
    p1h, p1l = two_prod(u, th)
    p2h, p2l = two_prod(u, tl)
    ah, al = two_sum(p1h, -1.0)
    ah, al = dd_add(ah, al, p1l, 0.0)
    ah, al = dd_add(ah, al, p2h, p2l)
    ch, cl = dd_div(ah, al, th, tl)
    # f(u) = delta*(u') + (u - u') - u = delta*(u') - u'
    qh, ql = dd_add(qh, ql, ch, cl)
    return dd_add(qh, ql, -u, 0.0)


@njit
def dd_delta_star(x):
    """delta*(x) = 1/2 / ((x+1) log(1+1/x) - 1); asymptotic form past 1e12."""
    if x > 1e12:
        # x + 1/3 - 1/(18 x) from the 1/x expansion of the closed form
        th, tl = dd_div(1.0, 0.0, x, 0.0)
        th, tl = dd_div(th, tl, 18.0, 0.0)
        rh, rl = dd_add(x, 0.0, THIRD_HI, THIRD_LO)
        return dd_add(rh, rl, -th, -tl)
    fh, fl = dd_theta_f(x)
    return dd_add(fh, fl, x, 0.0)


@njit
def dd_phi_mvt(k, x):
    """phi(k) = x / log(1 + x/k) - k from the mean-value rewriting."""
    zh, zl = dd_div(x, 0.0, k, 0.0)
    lh, ll = dd_log1p(zh, zl)
    qh, ql = dd_div(x, 0.0, lh, ll)
    return dd_add(qh, ql, -k, 0.0)


@njit
def dd_h_aux(t):
    """h(t) = t^2 log1p(t) - t^3 + 2((t+1) log1p(t) - t)^2."""
    lh, ll = dd_log1p(t, 0.0)
    mh, ml = dd_add(lh, ll, -t, 0.0)
    t2h, t2l = two_prod(t, t)
    ah, al = dd_mul(t2h, t2l, mh, ml)  # t^2 (log1p(t) - t)
    oh, ol = two_sum(t, 1.0)
    wh, wl = dd_mul(oh, ol, lh, ll)
    wh, wl = dd_add(wh, wl, -t, 0.0)
    sh, sl = dd_sqr(wh, wl)
    sh, sl = dd_mul_f(sh, sl, 2.0)
    return dd_add(ah, al, sh, sl)


@njit
def dd_g_aux(t):
    """g(t) = 8 log1p(t) - (6t^3 + 12t^2 + 8t)/(t+1)^2."""
    lh, ll = dd_log1p(t, 0.0)
    lh, ll = dd_mul_f(lh, ll, 8.0)
    # numerator t (6t^2 + 12t + 8) by Horner
    nh, nl = dd_mul_f(t, 0.0, 6.0)
    nh, nl = dd_add(nh, nl, 12.0, 0.0)
    nh, nl = dd_mul_f(nh, nl, t)
    nh, nl = dd_add(nh, nl, 8.0, 0.0)
    nh, nl = dd_mul_f(nh, nl, t)
    oh, ol = two_sum(t, 1.0)
    dh, dl = dd_sqr(oh, ol)
    qh, ql = dd_div(nh, nl, dh, dl)
    return dd_add(lh, ll, -qh, -ql)


# ---------------------------------------------------------------------------
# binary64 canonical-product partial sums (compensated; independence checks)
# ---------------------------------------------------------------------------


@njit
def lgamma_series_sum(x, k_max):
    # sum_{k=1..K} [x/k - log1p(x/k)], Kahan-compensated binary64
    s = 0.0
    c = 0.0
    for k in range(1, k_max + 1):
        z = x / k
        term = z - math.log1p(z)
        y = term - c
        t = s + y
        c = (t - s) - y
        s = t
    return s


@njit
def digamma_series_sum(x, k_max):
    # sum_{k=1..K} [1/k - 1/(k+x)] = sum x/(k(k+x)), Kahan-compensated
    s = 0.0
    c = 0.0
    for k in range(1, k_max + 1):
        term = x / (k * (k + x))
        y = term - c
        t = s + y
        c = (t - s) - y
        s = t
    return s


@njit
def theta_partial_sum(x, k_max):
    # sum_{k=1..K} [1/k - 1/(k + x - 1 + theta(k))] in binary64, where
    # theta(k) = f(x + k - 1) from the Stirling-remainder analysis.
    s = 0.0
    c = 0.0
    for k in range(1, k_max + 1):
        u = x + k - 1.0
        fh, fl = dd_theta_f(u)
        term = 1.0 / k - 1.0 / (u + fh)
        y = term - c
        t = s + y
        c = (t - s) - y
        s = t
    return s
