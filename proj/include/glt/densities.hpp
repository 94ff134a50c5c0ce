#pragma once

#include <functional>
#include <limits>
#include <vector>

namespace glt {

/// Result of a marginal density evaluation. The marginals of beta have an
/// integrable but infinite spike at the origin; `spike` marks that case
/// instead of returning +inf, so callers can clip deliberately.
struct MarginalValue {
  double value = 0.0;
  bool spike = false;
};

struct GltMarginalParams {
  double tau = 1.0;
  double xi = 1.0;
  double series_tol = 1e-10;
  int max_terms = 2000;

  /// Throws DomainError unless tau > 0, xi > 1/2, series_tol in (0, 1e-4], max_terms >= 16.
  void validate() const;
};

/// Marginal density of beta under beta | lambda ~ N(0, lambda^2), lambda ~ GPD(tau, xi),
/// evaluated from its series in exponential integrals and lower incomplete gammas.
/// The alternating series is summed with Cohen-Villegas-Zagier acceleration, which
/// also covers xi <= 1 where the plain partial sums do not converge.
/// Throws NonConvergenceError when max_terms is exhausted.
MarginalValue glt_marginal_beta(double beta, const GltMarginalParams& params);

/// Same density by adaptive quadrature of the mixture integral over lambda.
double glt_marginal_beta_quadrature(double beta, double tau, double xi);

/// Series with quadrature fallback; what the CLI tabulates.
MarginalValue glt_marginal_beta_robust(double beta, const GltMarginalParams& params);

/// Density of kappa = 1 / (1 + lambda^2) when lambda ~ GPD(tau, xi). kappa in (0, 1).
double glt_kappa_pdf(double kappa, double tau, double xi);
/// The same density at kappa = 1 - u, accurate for small u where 1 - u rounds to 1.
/// Under small tau a visible share of the mass sits at 1 - kappa < 1e-16.
double glt_kappa_pdf_near_one(double u, double tau, double xi);

/// Horseshoe marginal K e^Z E_1(Z), K = 1 / (tau sqrt(2) pi^{3/2}), Z = beta^2 / (2 tau^2).
MarginalValue hs_marginal_beta(double beta, double tau);

struct DensityBounds {
  double lower;
  double upper;
};

/// Elementary bounds (K/2) log(1 + 2/Z) < hs_marginal_beta < K log(1 + 1/Z), beta != 0.
DensityBounds hs_marginal_bounds(double beta, double tau);

/// Density of kappa = 1 / (1 + tau^2 lambda^2) for a half-Cauchy lambda.
double hs_kappa_pdf(double kappa, double tau);
double hs_kappa_pdf_near_one(double u, double tau);

/// density(c * beta) / density(beta) at each grid point.
std::vector<double> tail_ratio_probe(const std::function<double(double)>& density, double c,
                                     const std::vector<double>& beta_grid);

}  // namespace glt
