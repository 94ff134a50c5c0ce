"""Python bindings for the GLT / horseshoe shrinkage library."""

from ._core import (
    DataError,
    DomainError,
    NonConvergenceError,
    SamplerAbort,
    calibrated_mu,
    exp_integral_e,
    fit,
    glt_kappa_pdf,
    glt_marginal_beta,
    hill_estimates,
    hs_kappa_pdf,
    hs_marginal_beta,
    lower_inc_gamma,
    simulate,
)

__all__ = [
    "DataError",
    "DomainError",
    "NonConvergenceError",
    "SamplerAbort",
    "calibrated_mu",
    "exp_integral_e",
    "fit",
    "glt_kappa_pdf",
    "glt_marginal_beta",
    "hill_estimates",
    "hs_kappa_pdf",
    "hs_marginal_beta",
    "lower_inc_gamma",
    "simulate",
]
