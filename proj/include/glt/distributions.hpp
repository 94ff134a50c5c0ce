#pragma once

#include "glt/rng.hpp"

namespace glt {

/// Generalized Pareto distribution on (0, inf) with scale tau and shape xi > 0:
/// f(x) = (1/tau) (1 + xi x / tau)^{-(1/xi + 1)}.
class Gpd {
 public:
  Gpd(double tau, double xi);

  double tau() const { return tau_; }
  double xi() const { return xi_; }

  double pdf(double x) const;
  double log_pdf(double x) const;
  double cdf(double x) const;
  double quantile(double u) const;
  double sample(Rng& rng) const { return quantile(rng.uniform()); }

 private:
  double tau_;
  double xi_;
};

/// Gamma(shape, rate) draw.
double gamma_sample(double shape, double rate, Rng& rng);

/// Inverse-gamma with density proportional to x^{-shape-1} exp(-rate / x).
double invgamma_sample(double shape, double rate, Rng& rng);
double invgamma_cdf(double x, double shape, double rate);

/// Inverse-gamma restricted to (lo, hi), 0 <= lo < hi <= inf, by inversion of the
/// gamma CDF of 1/x. Throws DegenerateRegionError when the retained mass is below
/// 1e-300.
double invgamma_sample_truncated(double shape, double rate, double lo, double hi, Rng& rng);

/// Unit half-Cauchy, 2 / (pi (1 + x^2)) on x > 0.
double half_cauchy_sample(Rng& rng);

/// Log-normal with log-scale location mu and variance sigma2, restricted to (floor, inf).
double lognormal_sample_truncated(double mu, double sigma2, double floor, Rng& rng);

}  // namespace glt
