"""Acceptance gate: every stated criterion at its stated tolerance.

Each test prints one PASS/FAIL line (run with ``pytest -s`` to stream them).
Criterion 6c is marked strict-xfail: the all-positive claim for the
sharpness polynomial on [1, 50] is false below x = 1.4799810008, settled by
exact rational arithmetic (its value at x = 1 is exactly
-19117962330309366477309/10000), so the faithful test must fail.
Everything else is green.
"""

import math
import time
from fractions import Fraction

import mpmath as mp
import numpy as np
import pytest

import gammaenc.harness as harness
from gammaenc.bounds import (
    CONSTANTS,
    FAMILIES,
    FAMILY_IDS,
    delta_star,
    enclose_factorial,
    enclose_lgamma,
    quartic_excess,
    tightness,
)
from gammaenc.extprec import ExtendedScalar, dd_ln
from gammaenc.proofcheck import (
    eq18_sign,
    g_fn,
    h_fn,
    phi,
    pq_positivity,
    psi_tail_check,
    raabe_check,
    theta,
    theta_cap,
)
from gammaenc.special import lgamma_ref, lgamma_series_partial

mp.mp.dps = 45

MARGIN = -1e-25


def mpv(x: ExtendedScalar):
    return mp.mpf(x.hi) + mp.mpf(x.lo)


def report(criterion: str, passed: bool, detail: str) -> bool:
    print(f"{'PASS' if passed else 'FAIL'} criterion {criterion}: {detail}")
    return passed


def _family_grid(fam_id: str, points: int = 10_000) -> list[float]:
    lo = max(FAMILIES[fam_id].domain_min, 1e-3)
    return [float(x) for x in np.geomspace(lo, 1e3, points)]


def test_criterion_1_containment():
    worst_overall = math.inf
    for fam_id in FAMILY_IDS:
        for x in _family_grid(fam_id):
            rec = tightness(fam_id, x)
            worst_overall = min(worst_overall, rec.gap_lower.hi, rec.gap_upper.hi)
    ok = worst_overall >= MARGIN
    assert report(
        "1 (containment, 7 families x 1e4 points)",
        ok,
        f"worst gap {worst_overall:.3e} vs margin {MARGIN:.0e}",
    )


def test_criterion_2_upper_bound_improvement():
    ordering_margin = math.inf
    sandwich = True
    for x in _family_grid("AB2005"):
        ab = enclose_lgamma("AB2005", x)
        bd = enclose_lgamma("BATIR_DELTA", x)
        ordering_margin = min(ordering_margin, (ab.hi - bd.hi).hi)
        d = float(delta_star(x).hi)
        if not (x < d < x + 1.0 / 3.0):
            sandwich = False
    limit_gap = abs(mpv(delta_star(1e6)) - 1e6 - mp.mpf(1) / 3)
    ok = ordering_margin > 0.0 and sandwich and limit_gap <= 1e-6
    assert report(
        "2 (improved upper bound)",
        ok,
        f"min upper-gap {ordering_margin:.3e}, sandwich={sandwich}, "
        f"|delta*(1e6)-1e6-1/3|={float(limit_gap):.3e}",
    )


def test_criterion_3_quartic_sharpness():
    gap_at_one = abs(tightness("QUARTIC_SHARP", 1.0).gap_lower.hi)
    a_star_digits = mp.nstr(mpv(CONSTANTS.a_star_lo), 11)
    digits_ok = a_star_digits.startswith("0.0496539631")
    xs = [float(v) for v in np.geomspace(1.0, 1e6, 1000)]
    excess = [float(quartic_excess(x).hi) for x in xs]
    increasing = all(b > a for a, b in zip(excess, excess[1:]))
    a_lo = float(CONSTANTS.a_star_lo.hi)
    in_window = all(a_lo - 1e-25 <= v < 1.0 / 18.0 for v in excess)
    tail_1e6 = float(mpv(quartic_excess(1e6)) - mp.mpf(1) / 18)
    tail_1e3 = float(mpv(quartic_excess(1e3)) - mp.mpf(1) / 18)
    ratio = tail_1e3 / (-2.0 / (405.0 * 1e3))
    ok = (
        gap_at_one <= 1e-25
        and digits_ok
        and increasing
        and in_window
        and -1e-5 < tail_1e6 < 0.0
        and 1 / 1.1 <= ratio <= 1.1
    )
    assert report(
        "3 (quartic-sharp constants)",
        ok,
        f"gap(1)={gap_at_one:.2e}, a*={a_star_digits}, increasing={increasing}, "
        f"excess(1e6)-1/18={tail_1e6:.2e}, asymptotic ratio={ratio:.4f}",
    )


def test_criterion_4_global_quartic_and_factorial():
    xs = [float(v) for v in np.geomspace(1e-8, 1e4, 1000)]
    caps = [float(theta_cap(x).hi) for x in xs]
    increasing = all(b > a for a, b in zip(caps, caps[1:]))
    increasing &= float(theta_cap(1e6).hi) > caps[-1]
    limit0 = abs(mpv(theta_cap(1e-8)) - (mp.log(18) / 4 - mp.log(2 * mp.pi) / 2))
    at_inf = abs(float(theta_cap(1e6).hi))
    fact_ok = True
    for n in range(1, 171):
        enc = enclose_factorial(n)
        exact = harness._exact_ln_factorial(n)
        if (exact - enc.lo).hi < MARGIN or (enc.hi - exact).hi < MARGIN:
            fact_ok = False
    # equality at n = 1 is attained on the lower side; the published
    # 0.998936... is that constant divided by sqrt(2 pi)
    eq_gap = abs((harness._exact_ln_factorial(1) - enclose_factorial(1).lo).hi)
    published = mp.nstr(mpv(CONSTANTS.beta_lo_normalized), 6)
    ok = (
        increasing
        and limit0 <= 1e-6
        and at_inf <= 1e-7
        and fact_ok
        and eq_gap <= 1e-25
        and published == "0.998936"
    )
    assert report(
        "4 (global quartic + factorial)",
        ok,
        f"Theta increasing={increasing}, |Theta(0+)-limit|={float(limit0):.2e}, "
        f"|Theta(1e6)|={at_inf:.2e}, factorial n<=170 ok={fact_ok}, "
        f"n=1 equality gap={eq_gap:.2e}, beta published={published}",
    )


def test_criterion_5_digamma_argument_bounds():
    worst = math.inf
    for x in _family_grid("DIGAMMA_ARG"):
        rec = tightness("DIGAMMA_ARG", x)
        worst = min(worst, rec.gap_lower.hi, rec.gap_upper.hi)
    enc0 = enclose_lgamma("DIGAMMA_ARG", 0.0)
    degenerate = (enc0.lo.hi, enc0.lo.lo, enc0.hi.hi, enc0.hi.lo) == (0.0,) * 4
    ok = worst >= MARGIN and degenerate
    assert report(
        "5 (digamma-argument bounds)",
        ok,
        f"worst gap {worst:.3e} on (0,1e3]; degenerate equality at 0={degenerate}",
    )


def test_criterion_6a_h_and_g():
    hs = [float(h_fn(float(t)).hi) for t in np.geomspace(1e-3, 1e2, 1000)]
    h_ok = all(v < 0.0 for v in hs)
    gs = [float(g_fn(float(t)).hi) for t in np.geomspace(1e-3, 1e2, 1000)]
    g_ok = all(b < a for a, b in zip(gs, gs[1:]))
    ok = h_ok and g_ok
    assert report(
        "6a (h negative, g decreasing)",
        ok,
        f"h<0 on 1000 pts={h_ok}, g strictly decreasing={g_ok}",
    )


def test_criterion_6b_theta_phi_limits():
    theta_mono = True
    for x in (0.5, 1.0, 10.0):
        values = [float(theta(k, x).hi) for k in (1, 2, 5, 20, 100, 1000, 10000)]
        theta_mono &= all(b > a for a, b in zip(values, values[1:]))
    theta_limit = abs(float(theta(10**8, 1.0).hi) - 1.0 / 3.0)
    phi_mono = True
    for x in (0.5, 3.0, 10.0):
        values = [float(phi(float(k), x).hi) for k in (1, 2, 5, 20, 100, 1000, 10000)]
        phi_mono &= all(b > a for a, b in zip(values, values[1:]))
    phi_limit = abs(float(phi(1e8, 3.0).hi) - 1.5)
    ok = theta_mono and phi_mono and theta_limit <= 1e-6 and phi_limit <= 1e-6
    assert report(
        "6b (theta/phi monotone with limits)",
        ok,
        f"theta monotone={theta_mono} |theta(1e8)-1/3|={theta_limit:.2e}; "
        f"phi monotone={phi_mono} |phi(1e8;3)-3/2|={phi_limit:.2e}",
    )


@pytest.mark.xfail(
    strict=True,
    reason="the degree-42 sharpness polynomial is negative on [1, 1.4799810008); "
    "exact rational evaluation refutes the claimed positivity at the "
    "Chebyshev points below the crossover",
)
def test_criterion_6c_eq18_positive_on_1_50():
    points = harness._chebyshev_rationals(200, 1.0, 50.0)
    signs = [eq18_sign(p) for p in points]
    negative = sum(1 for s in signs if s <= 0)
    ok = negative == 0
    report(
        "6c (eq18 positivity on [1,50])",
        ok,
        f"{negative}/200 exact rational points have a negative sign "
        "(all below the 1.4799810008 crossover)",
    )
    assert ok


def test_criterion_6d_pq_positivity():
    signs = [pq_positivity(Fraction(i, 2)) for i in range(1, 201)]
    ok = all(sp > 0 and sq > 0 for sp, sq in signs)
    assert report(
        "6d (p and q positive on (0,100])", ok, "exact signs at 200 rational points"
    )


def test_criterion_6e_psi_tail():
    xs = [1.0] + [float(v) for v in np.geomspace(1.0, 1e3, 200)]
    ok = all(psi_tail_check(x) for x in xs)
    assert report("6e (psi tail envelope on [1,1e3])", ok, f"{len(xs)} points checked")


def test_criterion_6f_raabe():
    residuals = {x: raabe_check(x) for x in (0.5, 1.0, 10.0, 100.0)}
    ok = all(r <= 1e-20 for r in residuals.values())
    assert report(
        "6f (Raabe integral identity)",
        ok,
        "; ".join(f"x={x:g}: {r:.2e}" for x, r in residuals.items()),
    )


def test_criterion_7_oracle_quality():
    worst = 0.0
    for x in np.geomspace(1e-3, 1e3, 1000):
        x = float(x)
        r = lgamma_ref(ExtendedScalar(x) + 1) - lgamma_ref(x) - dd_ln(x)
        worst = max(worst, abs(r.hi + r.lo))
    start = time.perf_counter()
    ratios = []
    for x in (0.5, 1.0, 2.0, 4.0, 8.0):
        ps = lgamma_series_partial(x, 10**7)
        ratios.append(abs(float(mpv(lgamma_ref(ExtendedScalar(x) + 1))) - ps.value) / ps.tail)
    elapsed = time.perf_counter() - start
    ok = worst <= 1e-25 and max(ratios) <= 10.0 and elapsed < 30.0
    assert report(
        "7 (oracle quality)",
        ok,
        f"functional-eq residual {worst:.2e}; series ratio {max(ratios):.2f} "
        f"(limit 10); 5x1e7-term series in {elapsed:.2f}s",
    )


def test_criterion_8_csv_contract(tmp_path, monkeypatch):
    args = [
        "sweep", "--families", "all", "--x-min", "1", "--x-max", "100",
        "--points", "50", "--spacing", "logarithmic",
    ]
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    rc_a = harness.main(args + ["--output", str(a)])
    rc_b = harness.main(args + ["--output", str(b)])
    identical = a.read_bytes() == b.read_bytes()

    import dataclasses

    real = tightness

    def corrupted(family, x):
        rec = real(family, x)
        if rec.family == "CUBIC_REF2":
            rec = dataclasses.replace(rec, gap_upper=ExtendedScalar(-1e-3))
        return rec

    monkeypatch.setattr(harness, "tightness", corrupted)
    rc_bad = harness.main(args + ["--output", str(tmp_path / "c.csv")])
    monkeypatch.undo()
    ok = rc_a == 0 and rc_b == 0 and identical and rc_bad == 1
    assert report(
        "8 (CSV determinism + exit contract)",
        ok,
        f"reruns byte-identical={identical}; injected violation exit={rc_bad}",
    )
