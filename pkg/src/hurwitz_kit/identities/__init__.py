"""Registry of integral identities for the Hurwitz zeta function, with a checker.

Examples
--------
>>> from hurwitz_kit.identities import check
>>> check("zetasq2").passed
True
"""
from ._core import FAMILIES, Identity, Integral, Param, UnknownIdentityError, Value
from .check import DEFAULTS, CheckReport, Randomized, check, check_suite, sample_params, select
from .export import registry_json, reports_csv, reports_json
from .helpers import (FOURIER_SLUGS, alternating_c_series, catalan_series_partial,
                      fourier_coefficients_of, kogan_cos_even, kogan_cos_odd, kogan_sin_even,
                      kogan_sin_odd, secant_psi_series, transform_of_trig_poly, trig_poly)
from .registry import get, registry

__all__ = [
    "FAMILIES", "Identity", "Integral", "Param", "UnknownIdentityError", "Value",
    "DEFAULTS", "CheckReport", "Randomized", "check", "check_suite", "sample_params", "select",
    "registry_json", "reports_csv", "reports_json",
    "FOURIER_SLUGS", "alternating_c_series", "catalan_series_partial", "fourier_coefficients_of",
    "kogan_cos_even", "kogan_cos_odd", "kogan_sin_even", "kogan_sin_odd", "secant_psi_series",
    "transform_of_trig_poly", "trig_poly",
    "get", "registry",
]
