#include "glt/densities.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "glt/error.hpp"
#include "glt/specfun.hpp"

namespace glt {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kCvzMaxTerms = 400;  // (3 + sqrt 8)^n overflows past ~400

double log_binom_generalized(double r, int k) {
  // log C(r + k, k) = log Gamma(r + k + 1) - log Gamma(k + 1) - log Gamma(r + 1)
  return specfun::log_gamma(r + k + 1.0) - specfun::log_gamma(k + 1.0) - specfun::log_gamma(r + 1.0);
}

// Magnitude of the k-th series term, without the constant K.
// log_z is used when Z itself underflows to zero.
double glt_term(int k, double inv_xi, double z, double log_z, const specfun::Accuracy& acc) {
  const double a = 0.5 * (1.0 + inv_xi + k);
  double shrink;
  double robust;
  if (z == 0.0) {
    shrink = k == 0 ? -specfun::kEulerGamma - log_z : 2.0 / k;
    robust = 1.0 / a;
  } else if (std::isinf(z)) {
    shrink = 0.0;
    robust = std::exp(specfun::log_gamma(a) - a * log_z);
  } else {
    shrink = specfun::exp_integral_e(0.5 * k + 1.0, z, acc);
    robust = specfun::scaled_lower_inc_gamma(a, z, acc);
  }
  return std::exp(log_binom_generalized(inv_xi, k)) * (shrink + robust);
}

// Cohen-Villegas-Zagier: sum_{k>=0} (-1)^k t_k from the first n magnitudes.
double cvz_sum(const std::vector<double>& t, int n) {
  double d = std::pow(3.0 + std::sqrt(8.0), n);
  d = 0.5 * (d + 1.0 / d);
  double b = -1.0;
  double c = -d;
  double s = 0.0;
  for (int k = 0; k < n; ++k) {
    c = b - c;
    s += c * t[k];
    b = (static_cast<double>(k) + n) * (static_cast<double>(k) - n) * b / ((k + 0.5) * (k + 1.0));
  }
  return s / d;
}

void require_tau_xi(double tau, double xi, const char* what) {
  if (!(tau > 0.0) || !std::isfinite(tau)) throw DomainError(std::string(what) + ": tau must be positive");
  if (!(xi > 0.5) || !std::isfinite(xi)) throw DomainError(std::string(what) + ": xi must exceed 1/2");
}

void require_kappa(double kappa, const char* what) {
  if (!(kappa > 0.0 && kappa < 1.0)) throw DomainError(std::string(what) + ": kappa must lie in (0, 1)");
}

}  // namespace

void GltMarginalParams::validate() const {
  require_tau_xi(tau, xi, "GltMarginalParams");
  if (!(series_tol > 0.0 && series_tol <= 1e-4)) throw DomainError("GltMarginalParams: series_tol must lie in (0, 1e-4]");
  if (max_terms < 16) throw DomainError("GltMarginalParams: max_terms must be >= 16");
}

MarginalValue glt_marginal_beta(double beta, const GltMarginalParams& params) {
  params.validate();
  if (!std::isfinite(beta)) throw DomainError("glt_marginal_beta: beta must be finite");
  if (beta == 0.0) return {std::numeric_limits<double>::infinity(), true};

  const double tau = params.tau;
  const double xi = params.xi;
  const double inv_xi = 1.0 / xi;
  const double k_const = 1.0 / (tau * std::pow(2.0, 1.5) * std::sqrt(kPi));
  const double log_z = 2.0 * std::log(std::fabs(beta)) + 2.0 * std::log(xi) - std::log(2.0) - 2.0 * std::log(tau);
  const double z = std::exp(log_z);

  specfun::Accuracy acc;
  acc.rel_tol = std::min(1e-12, params.series_tol * 1e-2);
  acc.max_terms = std::max(1000, params.max_terms);

  const int cap = std::min(params.max_terms, kCvzMaxTerms);
  std::vector<double> terms;
  terms.reserve(cap);
  auto extend = [&](int n) {
    while (static_cast<int>(terms.size()) < n) terms.push_back(glt_term(static_cast<int>(terms.size()), inv_xi, z, log_z, acc));
  };

  int n = 16;
  extend(n);
  double prev = cvz_sum(terms, n);
  for (n = 24; n <= cap; n += 8) {
    extend(n);
    const double cur = cvz_sum(terms, n);
    if (std::fabs(cur - prev) <= params.series_tol * std::fabs(cur)) {
      return {k_const * cur, false};
    }
    prev = cur;
  }
  throw NonConvergenceError("glt_marginal_beta: series did not converge within max_terms");
}

double glt_marginal_beta_quadrature(double beta, double tau, double xi) {
  require_tau_xi(tau, xi, "glt_marginal_beta_quadrature");
  if (!std::isfinite(beta)) throw DomainError("glt_marginal_beta_quadrature: beta must be finite");
  if (beta == 0.0) return std::numeric_limits<double>::infinity();
  const double b2 = beta * beta;
  const double c = -(1.0 / xi + 1.0);
  // Integrate over t = log(lambda); the integrand decays exponentially in both directions.
  auto f = [&](double t) {
    const double lam = std::exp(t);
    const double log_normal = -0.5 * b2 / (lam * lam) - t - 0.5 * std::log(2.0 * kPi);
    const double log_gpd = -std::log(tau) + c * std::log1p(xi * lam / tau);
    return std::exp(log_normal + log_gpd + t);
  };
  double t1 = std::log(std::fabs(beta));
  double t2 = std::log(tau);
  if (t1 > t2) std::swap(t1, t2);
  boost::math::quadrature::exp_sinh<double> tail;
  boost::math::quadrature::tanh_sinh<double> mid;
  const double inf = std::numeric_limits<double>::infinity();
  double total = tail.integrate(f, -inf, t1, 1e-13) + tail.integrate(f, t2, inf, 1e-13);
  if (t2 > t1) total += mid.integrate(f, t1, t2, 1e-13);
  return total;
}

MarginalValue glt_marginal_beta_robust(double beta, const GltMarginalParams& params) {
  params.validate();
  if (beta == 0.0) return {std::numeric_limits<double>::infinity(), true};
  try {
    const MarginalValue v = glt_marginal_beta(beta, params);
    if (std::isfinite(v.value) && v.value > 0.0) return v;
  } catch (const NonConvergenceError&) {
  }
  return {glt_marginal_beta_quadrature(beta, params.tau, params.xi), false};
}

namespace {
// kappa and 1 - kappa passed separately so either may be tiny.
double glt_kappa_pdf_split(double kappa, double comp, double tau, double xi) {
  const double log_val = std::log(tau) / xi - std::log(2.0) + (0.5 / xi - 1.0) * std::log(kappa) -
                         0.5 * std::log(comp) -
                         (1.0 + 1.0 / xi) * std::log(tau * std::sqrt(kappa) + xi * std::sqrt(comp));
  return std::exp(log_val);
}

double hs_kappa_pdf_split(double kappa, double comp, double tau) {
  return (tau / kPi) / (std::sqrt(kappa) * std::sqrt(comp) * (comp + tau * tau * kappa));
}
}  // namespace

double glt_kappa_pdf(double kappa, double tau, double xi) {
  require_tau_xi(tau, xi, "glt_kappa_pdf");
  require_kappa(kappa, "glt_kappa_pdf");
  return glt_kappa_pdf_split(kappa, 1.0 - kappa, tau, xi);
}

double glt_kappa_pdf_near_one(double u, double tau, double xi) {
  require_tau_xi(tau, xi, "glt_kappa_pdf_near_one");
  require_kappa(u, "glt_kappa_pdf_near_one");
  return glt_kappa_pdf_split(1.0 - u, u, tau, xi);
}

MarginalValue hs_marginal_beta(double beta, double tau) {
  if (!(tau > 0.0) || !std::isfinite(tau)) throw DomainError("hs_marginal_beta: tau must be positive");
  if (!std::isfinite(beta)) throw DomainError("hs_marginal_beta: beta must be finite");
  if (beta == 0.0) return {std::numeric_limits<double>::infinity(), true};
  const double k_const = 1.0 / (tau * std::sqrt(2.0) * std::pow(kPi, 1.5));
  const double log_z = 2.0 * std::log(std::fabs(beta)) - std::log(2.0) - 2.0 * std::log(tau);
  const double z = std::exp(log_z);
  double scaled;
  if (z == 0.0) {
    scaled = -specfun::kEulerGamma - log_z;
  } else if (std::isinf(z)) {
    scaled = std::exp(-log_z);
  } else {
    scaled = specfun::exp_integral_e_scaled(1.0, z);
  }
  return {k_const * scaled, false};
}

DensityBounds hs_marginal_bounds(double beta, double tau) {
  if (!(tau > 0.0)) throw DomainError("hs_marginal_bounds: tau must be positive");
  if (beta == 0.0 || !std::isfinite(beta)) throw DomainError("hs_marginal_bounds: beta must be finite and nonzero");
  const double k_const = 1.0 / (tau * std::sqrt(2.0) * std::pow(kPi, 1.5));
  const double z = beta * beta / (2.0 * tau * tau);
  return {0.5 * k_const * std::log1p(2.0 / z), k_const * std::log1p(1.0 / z)};
}

double hs_kappa_pdf(double kappa, double tau) {
  if (!(tau > 0.0) || !std::isfinite(tau)) throw DomainError("hs_kappa_pdf: tau must be positive");
  require_kappa(kappa, "hs_kappa_pdf");
  return hs_kappa_pdf_split(kappa, 1.0 - kappa, tau);
}

double hs_kappa_pdf_near_one(double u, double tau) {
  if (!(tau > 0.0) || !std::isfinite(tau)) throw DomainError("hs_kappa_pdf_near_one: tau must be positive");
  require_kappa(u, "hs_kappa_pdf_near_one");
  return hs_kappa_pdf_split(1.0 - u, u, tau);
}

std::vector<double> tail_ratio_probe(const std::function<double(double)>& density, double c,
                                     const std::vector<double>& beta_grid) {
  std::vector<double> out;
  out.reserve(beta_grid.size());
  for (double b : beta_grid) out.push_back(c == 1.0 ? 1.0 : density(c * b) / density(b));
  return out;
}

}  // namespace glt
