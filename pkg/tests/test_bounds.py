"""Enclosure-family tests: constants, containment, sharpness, tightness."""

from fractions import Fraction

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gammaenc.bounds import (
    CONSTANTS,
    FAMILIES,
    FAMILY_IDS,
    DomainError,
    delta_star,
    enclose_factorial,
    enclose_lgamma,
    quartic_excess,
    tightness,
)
from gammaenc.extprec import ExtendedScalar, dd_ln
from gammaenc.special import ORACLE_EPS, lgamma_ref

mp.mp.dps = 45


def mpv(x: ExtendedScalar):
    return mp.mpf(x.hi) + mp.mpf(x.lo)


# ---------------------------------------------------------------------------
# constants
# ---------------------------------------------------------------------------


def test_a_star_lower_closed_form_and_digits():
    want = mp.e**4 / (4 * mp.pi**2) - mp.mpf(4) / 3
    assert abs(mpv(CONSTANTS.a_star_lo) - want) <= 1e-30
    assert mp.nstr(mpv(CONSTANTS.a_star_lo), 11).startswith("0.049653963176"[:12])


def test_a_star_upper_is_one_eighteenth():
    assert abs(CONSTANTS.a_star_hi.to_fraction() - Fraction(1, 18)) <= Fraction(1, 10**32)


def test_alpha_constants():
    lo_want = mp.root(18, 4) / mp.sqrt(2 * mp.pi)
    hi_want = mp.sqrt(2 * mp.pi)
    assert abs(mpv(CONSTANTS.alpha_lo) - lo_want) <= 1e-30
    assert abs(mpv(CONSTANTS.alpha_hi) - hi_want) <= 1e-30
    assert mp.nstr(mpv(CONSTANTS.alpha_lo), 6) == "0.821728"
    assert mp.nstr(mpv(CONSTANTS.alpha_hi), 6) == "2.50663"


def test_beta_constants():
    lo_want = mp.e * mp.root(mp.mpf(18) / 25, 4)
    assert abs(mpv(CONSTANTS.beta_lo) - lo_want) <= 1e-30
    assert abs(mpv(CONSTANTS.beta_hi) - mp.sqrt(2 * mp.pi)) <= 1e-30
    # published normalized form of the attained lower constant
    norm_want = mp.e / mp.sqrt(2 * mp.pi) * mp.root(mp.mpf(18) / 25, 4)
    assert abs(mpv(CONSTANTS.beta_lo_normalized) - norm_want) <= 1e-30
    assert mp.nstr(mpv(CONSTANTS.beta_lo_normalized), 6) == "0.998936"


def test_factorial_equality_constant_identity():
    # ln(beta_lo) + ln(25/18)/4 - 1 == 0: the n = 1 equality in closed form
    residual = (
        CONSTANTS.ln_beta_lo
        + dd_ln(ExtendedScalar.from_fraction(Fraction(25, 18))) * 0.25
        - 1
    )
    assert abs(residual.hi + residual.lo) <= 1e-25


# ---------------------------------------------------------------------------
# delta_star
# ---------------------------------------------------------------------------


def test_delta_star_at_one():
    want = mp.mpf(1) / 2 / (2 * mp.log(2) - 1)
    got = delta_star(1.0)
    assert abs(mpv(got) - want) <= 1e-28
    assert mp.nstr(mpv(got), 20) == "1.2943497247810449154"


def test_delta_star_limit_third():
    gap = mpv(delta_star(1e6)) - 1e6
    assert 0.333 < gap < 0.334


def test_delta_star_sandwich_sampled():
    for x in [0.1, 1.0, 10.0, 1e3]:
        d = mpv(delta_star(x))
        assert x < d < x + mp.mpf(1) / 3, x


def test_delta_star_asymptotic_overlap():
    # direct evaluation at 1e10 pins the 1/x coefficient of the expansion
    direct = mpv(delta_star(1e10))
    asym = mp.mpf(1e10) + mp.mpf(1) / 3 - 1 / (18 * mp.mpf(1e10))
    assert abs(direct - asym) <= 1e-17
    # a wrong coefficient would sit ~5.6e-12 away
    assert abs(direct - (mp.mpf(1e10) + mp.mpf(1) / 3)) > 1e-13


def test_delta_star_asymptotic_branch():
    got = mpv(delta_star(1e13))
    want = mp.mpf(1e13) + mp.mpf(1) / 3 - 1 / (18 * mp.mpf(1e13))
    assert abs(got - want) <= 1e-18


def test_delta_star_domain():
    with pytest.raises(DomainError):
        delta_star(0.0)
    with pytest.raises(DomainError):
        delta_star(-1.0)


# ---------------------------------------------------------------------------
# enclosures
# ---------------------------------------------------------------------------


def test_quartic_sharp_equality_at_one():
    enc = enclose_lgamma("QUARTIC_SHARP", 1.0)
    assert abs(enc.lo.hi + enc.lo.lo) <= 1e-25  # log Gamma(2) = 0 attained
    assert enc.hi > 0


def test_ab2005_contains_ln24():
    enc = enclose_lgamma("AB2005", 4.0)
    ln24 = mp.log(24)
    assert mpv(enc.lo) < ln24 < mpv(enc.hi)


def test_digamma_arg_brackets_zero_at_one():
    enc = enclose_lgamma("DIGAMMA_ARG", 1.0)
    assert mpv(enc.lo) < 0 < mpv(enc.hi)
    assert abs(mpv(enc.lo) - mp.digamma(1 / mp.log(2))) <= 1e-25
    assert abs(mpv(enc.hi) - mp.digamma(mp.mpf(3) / 2)) <= 1e-25


def test_digamma_arg_degenerate_at_zero():
    enc = enclose_lgamma("DIGAMMA_ARG", 0.0)
    assert enc.lo.hi == 0.0 and enc.lo.lo == 0.0
    assert enc.hi.hi == 0.0 and enc.hi.lo == 0.0


def test_quartic_sharp_domain_error():
    with pytest.raises(DomainError, match="QUARTIC_SHARP"):
        enclose_lgamma("QUARTIC_SHARP", 0.5)


def test_positive_only_families_reject_zero():
    for fam in ("AB2005", "BATIR_DELTA"):
        with pytest.raises(DomainError):
            enclose_lgamma(fam, 0.0)


def test_families_defined_at_zero():
    for fam in ("QUARTIC_GLOBAL", "CUBIC_REF2"):
        enc = enclose_lgamma(fam, 0.0)
        assert mpv(enc.lo) <= 0.0 <= mpv(enc.hi), fam


def test_unknown_family():
    with pytest.raises(DomainError):
        enclose_lgamma("NO_SUCH", 1.0)


def test_containment_sampled_all_families():
    for fam_id in FAMILY_IDS:
        fam = FAMILIES[fam_id]
        lo = max(fam.domain_min, 1e-3)
        for x in np.geomspace(lo, 1e3, 500):
            rec = tightness(fam_id, float(x))
            assert rec.gap_lower.hi >= -ORACLE_EPS, (fam_id, x)
            assert rec.gap_upper.hi >= -ORACLE_EPS, (fam_id, x)


def test_enclosure_ordering_lo_le_hi():
    for fam_id in FAMILY_IDS:
        fam = FAMILIES[fam_id]
        lo = max(fam.domain_min, 1e-3)
        for x in np.geomspace(lo, 1e3, 50):
            enc = enclose_lgamma(fam_id, float(x))
            assert enc.lo <= enc.hi
            assert enc.lo < enc.hi  # strict away from the degenerate point


def test_family_metadata():
    assert FAMILIES["QUARTIC_SHARP"].equality_points == (1.0,)
    assert FAMILIES["QUARTIC_GLOBAL"].equality_points == (0.0,)
    assert FAMILIES["DIGAMMA_ARG"].equality_points == (0.0,)
    assert FAMILIES["FACTORIAL"].equality_points == (1.0,)
    assert FAMILIES["FACTORIAL"].integer_grid
    assert FAMILIES["AB2005"].open_min and FAMILIES["BATIR_DELTA"].open_min


# ---------------------------------------------------------------------------
# factorial enclosure
# ---------------------------------------------------------------------------


def _ln_factorial_sum(n: int) -> ExtendedScalar:
    # independent oracle: sum of extended-precision logs
    total = ExtendedScalar(0.0)
    for k in range(2, n + 1):
        total = total + dd_ln(k)
    return total


def test_factorial_equality_at_one():
    enc = enclose_factorial(1)
    assert abs(enc.lo.hi + enc.lo.lo) <= 1e-25  # attained side
    assert mpv(enc.hi) > 0


def test_factorial_encloses_ten():
    enc = enclose_factorial(10)
    ln_10fact = mp.log(3628800)
    assert mpv(enc.lo) < ln_10fact <= mpv(enc.hi)


def test_factorial_encloses_170_vs_log_sum():
    enc = enclose_factorial(170)
    exact = mpv(_ln_factorial_sum(170))
    assert mpv(enc.lo) < exact < mpv(enc.hi)


def test_factorial_domain():
    for bad in (0, -3):
        with pytest.raises(DomainError):
            enclose_factorial(bad)
    with pytest.raises(DomainError):
        enclose_factorial(2.0)  # non-integer input is rejected


# ---------------------------------------------------------------------------
# tightness records
# ---------------------------------------------------------------------------


def test_tightness_equality_point():
    rec = tightness("QUARTIC_SHARP", 1.0)
    assert abs(rec.gap_lower.hi) <= 1e-25


def test_batir_width_beats_ab2005():
    wide = tightness("AB2005", 2.0).width
    narrow = tightness("BATIR_DELTA", 2.0).width
    assert narrow < wide


def test_quartic_sharp_width_far_out():
    rec = tightness("QUARTIC_SHARP", 1e6)
    width = rec.width.hi
    assert width <= 2e-14
    x = mp.mpf(1e6)
    first_order = (mpv(CONSTANTS.a_star_hi) - mpv(CONSTANTS.a_star_lo)) / (
        4 * (x * x + x / 3)
    )
    assert abs(width - first_order) <= 1e-6 * width


def test_quartic_excess_at_one_is_a_star():
    diff = quartic_excess(1.0) - CONSTANTS.a_star_lo
    assert abs(diff.hi + diff.lo) <= 1e-25


def test_quartic_excess_increasing_sample():
    xs = np.geomspace(1.0, 1e6, 200)
    values = [mpv(quartic_excess(float(x))) for x in xs]
    assert all(b > a for a, b in zip(values, values[1:]))
    assert values[-1] < mp.mpf(1) / 18


def test_upper_ordering_sample():
    for x in np.geomspace(1e-3, 1e3, 200):
        ab = enclose_lgamma("AB2005", float(x))
        bd = enclose_lgamma("BATIR_DELTA", float(x))
        assert bd.hi < ab.hi
        assert bd.lo.to_fraction() == ab.lo.to_fraction()  # shared lower bound


def test_width_decreasing_sample():
    for fam_id in ("QUARTIC_SHARP", "CUBIC_REF2"):
        fam = FAMILIES[fam_id]
        xs = np.geomspace(max(fam.domain_min, 1e-3), 1e3, 300)
        widths = [enclose_lgamma(fam_id, float(x)).width.hi for x in xs]
        assert all(b < a for a, b in zip(widths, widths[1:])), fam_id


def test_enclosure_contains_helper():
    enc = enclose_lgamma("CUBIC_REF2", 3.0)
    ref = lgamma_ref(4.0)
    assert enc.contains(ref)


@given(
    x=st.floats(min_value=1e-3, max_value=1e3, allow_nan=False),
    fam_id=st.sampled_from(FAMILY_IDS),
)
@settings(max_examples=150, deadline=None)
def test_containment_property(x, fam_id):
    fam = FAMILIES[fam_id]
    if x < fam.domain_min:
        with pytest.raises(DomainError):
            enclose_lgamma(fam_id, x)
        return
    rec = tightness(fam_id, x)
    assert rec.gap_lower.hi >= -ORACLE_EPS
    assert rec.gap_upper.hi >= -ORACLE_EPS
    assert rec.width.hi >= 0.0


def test_public_api_importable():
    import gammaenc

    missing = [name for name in gammaenc.__all__ if not hasattr(gammaenc, name)]
    assert not missing
