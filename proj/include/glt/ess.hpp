#pragma once

#include <cmath>
#include <limits>
#include <numbers>

#include "glt/error.hpp"
#include "glt/rng.hpp"

namespace glt {

/// Gaussian prior N(center, variance) defining the ellipse.
struct EllipseSpec {
  double center = 0.0;
  double variance = 0.001;
};

struct EssResult {
  double value;
  int proposals;  // likelihood evaluations spent on proposals
  bool capped;    // the proposal cap was hit and the current state kept
};

inline constexpr int kEssMaxProposals = 1000;

/// One elliptical slice update of a scalar with prior N(spec.center, spec.variance).
/// log_lik may return -inf to encode support constraints. The threshold u is drawn
/// once; the angle bracket shrinks toward the current state after each rejection.
template <class LogLik>
EssResult ess_step(double eta, const EllipseSpec& spec, LogLik&& log_lik, Rng& rng) {
  if (!(spec.variance > 0.0)) throw DomainError("ess_step: variance must be positive");
  const double ll_cur = log_lik(eta);
  if (!(ll_cur > -std::numeric_limits<double>::infinity()) || std::isnan(ll_cur)) {
    throw InvalidStateError("ess_step: current state has zero likelihood");
  }
  const double nu = spec.center + std::sqrt(spec.variance) * rng.normal();
  const double log_u = std::log(rng.uniform());
  constexpr double pi = std::numbers::pi;
  // theta ~ U(-pi, pi]
  double theta = pi - 2.0 * pi * rng.uniform();
  double theta_min = -pi;
  double theta_max = pi;
  const double d_cur = eta - spec.center;
  const double d_nu = nu - spec.center;
  for (int i = 1; i <= kEssMaxProposals; ++i) {
    const double proposal = d_cur * std::cos(theta) + d_nu * std::sin(theta) + spec.center;
    const double ll = log_lik(proposal);
    if (log_u < ll - ll_cur) return {proposal, i, false};
    if (theta > 0.0) {
      theta_max = theta;
    } else {
      theta_min = theta;
    }
    // theta ~ U(theta_min, theta_max]
    theta = theta_max - (theta_max - theta_min) * rng.uniform();
  }
  return {eta, kEssMaxProposals, true};
}

}  // namespace glt
