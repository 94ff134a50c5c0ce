#include "glt/distributions.hpp"

#include <algorithm>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "glt/error.hpp"
#include "glt/specfun.hpp"

namespace glt {

namespace {

constexpr double kMinMass = 1e-300;

// Double precision throughout: long double promotion costs ~3x in the sampler loops.
using FastPolicy = boost::math::policies::policy<boost::math::policies::promote_double<false>>;

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) throw DomainError(std::string(what) + " must be positive and finite");
}

// Standard gamma variate restricted to (s_lo, s_hi).
double truncated_standard_gamma(double a, double s_lo, double s_hi, Rng& rng) {
  if (a == 1.0) {
    // Exponential: closed-form inversion of the shifted survival function.
    const double width = s_hi - s_lo;
    const double keep = std::isinf(width) ? 1.0 : -std::expm1(-width);
    return s_lo - std::log1p(-rng.uniform() * keep);
  }
  if (s_hi <= 0.5) {
    // Power-law proposal s^{a-1} on the interval, accepted with exp(-(s - s_lo)) >= e^{-1/2}.
    const double r_pow = std::pow(s_lo / s_hi, a);
    for (;;) {
      const double s = s_hi * std::pow(r_pow + rng.uniform() * (1.0 - r_pow), 1.0 / a);
      if (rng.uniform() <= std::exp(-(s - s_lo))) return std::clamp(s, s_lo, s_hi);
    }
  }
  const double p_lo = s_lo > 0.0 ? boost::math::gamma_p(a, s_lo, FastPolicy()) : 0.0;
  double s;
  if (p_lo > 0.5) {
    const double q_lo = boost::math::gamma_q(a, s_lo, FastPolicy());
    const double q_hi = std::isinf(s_hi) ? 0.0 : boost::math::gamma_q(a, s_hi, FastPolicy());
    const double mass = q_lo - q_hi;
    if (!(mass >= kMinMass)) throw DegenerateRegionError("truncated inverse-gamma: retained mass underflows");
    const double t = q_hi + rng.uniform() * mass;
    s = boost::math::gamma_q_inv(a, std::min(t, q_lo), FastPolicy());
  } else {
    const double p_hi = std::isinf(s_hi) ? 1.0 : boost::math::gamma_p(a, s_hi, FastPolicy());
    const double mass = p_hi - p_lo;
    if (!(mass >= kMinMass)) throw DegenerateRegionError("truncated inverse-gamma: retained mass underflows");
    const double t = p_lo + rng.uniform() * mass;
    s = boost::math::gamma_p_inv(a, std::min(t, p_hi), FastPolicy());
  }
  return std::clamp(s, s_lo, s_hi);
}

}  // namespace

Gpd::Gpd(double tau, double xi) : tau_(tau), xi_(xi) {
  require_positive(tau, "Gpd: tau");
  require_positive(xi, "Gpd: xi");
}

double Gpd::log_pdf(double x) const {
  if (!(x >= 0.0)) throw DomainError("Gpd::pdf: x must be >= 0");
  return -std::log(tau_) - (1.0 / xi_ + 1.0) * std::log1p(xi_ * x / tau_);
}

double Gpd::pdf(double x) const { return std::exp(log_pdf(x)); }

double Gpd::cdf(double x) const {
  if (!(x >= 0.0)) throw DomainError("Gpd::cdf: x must be >= 0");
  return -std::expm1(-std::log1p(xi_ * x / tau_) / xi_);
}

double Gpd::quantile(double u) const {
  if (!(u > 0.0 && u < 1.0)) throw DomainError("Gpd::quantile: u must lie in (0, 1)");
  // (1 - u)^{-xi} - 1, written to keep precision for small u.
  return tau_ * std::expm1(-xi_ * std::log1p(-u)) / xi_;
}

double gamma_sample(double shape, double rate, Rng& rng) {
  require_positive(shape, "gamma_sample: shape");
  require_positive(rate, "gamma_sample: rate");
  return rng.gamma(shape) / rate;
}

double invgamma_sample(double shape, double rate, Rng& rng) {
  require_positive(shape, "invgamma_sample: shape");
  require_positive(rate, "invgamma_sample: rate");
  return rate / rng.gamma(shape);
}

double invgamma_cdf(double x, double shape, double rate) {
  require_positive(shape, "invgamma_cdf: shape");
  require_positive(rate, "invgamma_cdf: rate");
  if (x <= 0.0) return 0.0;
  if (std::isinf(x)) return 1.0;
  return specfun::gamma_q(shape, rate / x);
}

double invgamma_sample_truncated(double shape, double rate, double lo, double hi, Rng& rng) {
  require_positive(shape, "invgamma_sample_truncated: shape");
  require_positive(rate, "invgamma_sample_truncated: rate");
  if (!(lo >= 0.0) || !(hi > lo)) throw DomainError("invgamma_sample_truncated: need 0 <= lo < hi");
  // 1/x ~ Gamma(shape, rate); standardize s = rate / x.
  const double s_lo = std::isinf(hi) ? 0.0 : rate / hi;
  const double s_hi = lo == 0.0 ? std::numeric_limits<double>::infinity() : rate / lo;
  if (!(s_hi > s_lo)) throw DegenerateRegionError("invgamma_sample_truncated: interval collapsed");
  const double s = truncated_standard_gamma(shape, s_lo, s_hi, rng);
  double x = rate / s;
  if (x <= lo) x = std::nextafter(lo, hi);
  if (x >= hi) x = std::nextafter(hi, lo);
  return x;
}

double half_cauchy_sample(Rng& rng) { return std::tan(0.5 * std::numbers::pi * rng.uniform()); }

double lognormal_sample_truncated(double mu, double sigma2, double floor, Rng& rng) {
  require_positive(sigma2, "lognormal_sample_truncated: sigma2");
  const double sd = std::sqrt(sigma2);
  const double z_lo = floor > 0.0 ? (std::log(floor) - mu) / sd : -std::numeric_limits<double>::infinity();
  double z;
  if (z_lo > 0.0) {
    const double tail = specfun::normal_cdf(-z_lo);
    if (!(tail >= kMinMass)) throw DegenerateRegionError("lognormal_sample_truncated: mass underflows");
    z = -specfun::normal_quantile(rng.uniform() * tail);
  } else {
    const double p_lo = std::isinf(z_lo) ? 0.0 : specfun::normal_cdf(z_lo);
    z = specfun::normal_quantile(std::min(p_lo + rng.uniform() * (1.0 - p_lo), std::nextafter(1.0, 0.0)));
  }
  return std::max(std::exp(mu + sd * z), std::nextafter(floor, std::numeric_limits<double>::infinity()));
}

}  // namespace glt
