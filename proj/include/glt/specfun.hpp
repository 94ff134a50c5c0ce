#pragma once

// Scalar special functions used by the marginal densities and the samplers.
// Every function here is pure and reentrant.

namespace glt::specfun {

struct Accuracy {
  double rel_tol = 1e-10;
  int max_terms = 1000;

  /// Throws DomainError unless rel_tol in (0, 1e-4] and max_terms >= 16.
  void validate() const;
};

/// Generalized exponential integral E_s(x) = int_1^inf exp(-x t) t^{-s} dt, x > 0.
double exp_integral_e(double s, double x, const Accuracy& acc = {});

/// exp(x) * E_s(x); finite for large x where E_s itself underflows.
double exp_integral_e_scaled(double s, double x, const Accuracy& acc = {});

/// Lower incomplete gamma gamma(s, x) = int_0^x t^{s-1} e^{-t} dt, s > 0, x >= 0.
double lower_inc_gamma(double s, double x, const Accuracy& acc = {});

/// x^{-s} gamma(s, x) = int_0^1 exp(-x u) u^{s-1} du. Stays finite as x -> 0+
/// (limit 1/s) where the unscaled factors over/underflow.
double scaled_lower_inc_gamma(double s, double x, const Accuracy& acc = {});

/// Gamma(s) via the log-gamma routine.
double gamma_fn(double s);

/// log Gamma(x), x > 0. Thread-safe (does not touch signgam).
double log_gamma(double x);

/// Euler-Mascheroni constant.
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

double normal_cdf(double x);
double normal_quantile(double p);

/// Student-t CDF with df > 0 degrees of freedom.
double student_t_cdf(double t, double df);

/// Regularized lower incomplete gamma P(a, x) and its complement Q(a, x).
double gamma_p(double a, double x);
double gamma_q(double a, double x);

}  // namespace glt::specfun
