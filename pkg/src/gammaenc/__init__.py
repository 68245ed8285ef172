"""Certified log-space enclosures for the gamma function.

Seven Stirling-type bound families bracket log Gamma(x+1) with their best
known constants; a two-term extended-precision oracle (absolute error well
under ``ORACLE_EPS = 1e-25``) certifies containment, constant sharpness and
the supporting monotonicity/positivity machinery, partly in exact rational
arithmetic.  The ``gammaenc`` CLI exposes point enclosures, tightness
sweeps to CSV and the verification suites.
"""

from ._accel import NUMBA_ENABLED
from .bounds import (
    CONSTANTS,
    FAMILIES,
    FAMILY_IDS,
    BoundFamily,
    Constants,
    DomainError,
    Enclosure,
    TightnessRecord,
    delta_star,
    enclose_factorial,
    enclose_lgamma,
    quartic_excess,
    tightness,
)
from .extprec import (
    ExtendedScalar,
    dd_add,
    dd_div,
    dd_exp,
    dd_ln,
    dd_log1p,
    dd_mul,
    dd_sub,
)
from .special import (
    BERNOULLI_2K,
    DEFAULT_CONFIG,
    EULER_GAMMA,
    ORACLE_EPS,
    OracleConfig,
    PartialSum,
    digamma_ref,
    digamma_series_partial,
    lgamma_ref,
    lgamma_series_partial,
)

__version__ = "1.0.0"

__all__ = [
    "__version__",
    "NUMBA_ENABLED",
    "ExtendedScalar",
    "dd_add",
    "dd_sub",
    "dd_mul",
    "dd_div",
    "dd_ln",
    "dd_exp",
    "dd_log1p",
    "ORACLE_EPS",
    "EULER_GAMMA",
    "BERNOULLI_2K",
    "OracleConfig",
    "DEFAULT_CONFIG",
    "PartialSum",
    "lgamma_ref",
    "digamma_ref",
    "lgamma_series_partial",
    "digamma_series_partial",
    "DomainError",
    "BoundFamily",
    "Enclosure",
    "TightnessRecord",
    "Constants",
    "CONSTANTS",
    "FAMILIES",
    "FAMILY_IDS",
    "delta_star",
    "enclose_lgamma",
    "enclose_factorial",
    "tightness",
    "quartic_excess",
]
