"""Exact arithmetic and verification for the level-m logarithmic jet complex over F_p."""

from ._logjet import (
    Chain,
    ConsistencyError,
    Jet,
    Params,
    Symbol,
    __version__,
    binom,
    digit_sum,
    gamma,
    mbinom,
    qbinom,
    qbinom_fraction,
    qbinom_mod,
    run_suites,
    sigma,
)

__all__ = [
    "Chain",
    "ConsistencyError",
    "Jet",
    "Params",
    "Symbol",
    "__version__",
    "binom",
    "digit_sum",
    "gamma",
    "mbinom",
    "qbinom",
    "qbinom_fraction",
    "qbinom_mod",
    "run_suites",
    "sigma",
]
