"""Probabilistic comparison of the accuracy of two numerical methods."""

from ._core import (  # noqa: F401
    BetaPair,
    Breakpoints,
    DataError,
    ElementPair,
    McEstimate,
    ModelParams,
    ParameterError,
    PowerLawFit,
    Regime,
    beta_pair,
    breakpoints,
    cdf_z,
    density_z,
    fem_error_exponent,
    fit_power_law,
    head_probability,
    mc_head_probability,
    probability_curve,
    sample_curve,
)

__all__ = [
    "BetaPair",
    "Breakpoints",
    "DataError",
    "ElementPair",
    "McEstimate",
    "ModelParams",
    "ParameterError",
    "PowerLawFit",
    "Regime",
    "beta_pair",
    "breakpoints",
    "cdf_z",
    "density_z",
    "fem_error_exponent",
    "fit_power_law",
    "head_probability",
    "mc_head_probability",
    "probability_curve",
    "sample_curve",
]
