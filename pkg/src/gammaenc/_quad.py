"""Gauss-Legendre nodes and weights refined to two-term precision.

binary64 nodes (numpy's ``leggauss``) are only good to ~1e-16, which would
dominate the Raabe-identity residual; two Newton steps on the Legendre
recurrence carried out in two-term arithmetic push node and weight error to
the representation floor (~1e-32), after which quadrature residuals are
limited by the oracle, not the rule.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from . import _kernels as _k
from .extprec import ExtendedScalar, _wrap


def _legendre_and_derivative(n: int, xh: float, xl: float):
    # three-term recurrence for P_n, then P'_n = n (x P_n - P_{n-1})/(x^2-1)
    pm1h, pm1l = 1.0, 0.0  # P_0
    ph, pl = xh, xl  # P_1
    for k in range(1, n):
        th, tl = _k.dd_mul(ph, pl, xh, xl)
        th, tl = _k.dd_mul_f(th, tl, float(2 * k + 1))
        sh, sl = _k.dd_mul_f(pm1h, pm1l, float(k))
        th, tl = _k.dd_sub(th, tl, sh, sl)
        th, tl = _k.dd_div(th, tl, float(k + 1), 0.0)
        pm1h, pm1l = ph, pl
        ph, pl = th, tl
    numh, numl = _k.dd_mul(ph, pl, xh, xl)
    numh, numl = _k.dd_sub(numh, numl, pm1h, pm1l)
    numh, numl = _k.dd_mul_f(numh, numl, float(n))
    denh, denl = _k.dd_mul(xh, xl, xh, xl)
    denh, denl = _k.dd_add(denh, denl, -1.0, 0.0)
    dh, dl = _k.dd_div(numh, numl, denh, denl)
    return (ph, pl), (dh, dl)


@lru_cache(maxsize=None)
def gauss_legendre(n: int = 64) -> tuple[tuple[ExtendedScalar, ...], tuple[ExtendedScalar, ...]]:
    """Nodes and weights on [-1, 1], each an ``ExtendedScalar``."""
    seeds, _ = np.polynomial.legendre.leggauss(n)
    nodes = []
    weights = []
    for seed in seeds:
        xh, xl = float(seed), 0.0
        for _ in range(2):
            (ph, pl), (dh, dl) = _legendre_and_derivative(n, xh, xl)
            sh, sl = _k.dd_div(ph, pl, dh, dl)
            xh, xl = _k.dd_sub(xh, xl, sh, sl)
        (_, _), (dh, dl) = _legendre_and_derivative(n, xh, xl)
        x2h, x2l = _k.dd_mul(xh, xl, xh, xl)
        oh, ol = _k.dd_sub(1.0, 0.0, x2h, x2l)
        d2h, d2l = _k.dd_mul(dh, dl, dh, dl)
        wh, wl = _k.dd_mul(oh, ol, d2h, d2l)
        wh, wl = _k.dd_div(2.0, 0.0, wh, wl)
        nodes.append(_wrap((xh, xl)))
        weights.append(_wrap((wh, wl)))
    return tuple(nodes), tuple(weights)


def integrate(func, a, b, n: int = 64) -> ExtendedScalar:
    """Gauss-Legendre integral of ``func`` (dd -> dd) over [a, b]."""
    nodes, weights = gauss_legendre(n)
    a = ExtendedScalar(a) if not isinstance(a, ExtendedScalar) else a
    b = ExtendedScalar(b) if not isinstance(b, ExtendedScalar) else b
    half = (b - a) * 0.5
    mid = (b + a) * 0.5
    total = ExtendedScalar(0.0)
    for node, weight in zip(nodes, weights):
        total = total + weight * func(mid + half * node)
    return total * half
