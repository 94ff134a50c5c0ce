#pragma once

#include <Eigen/Dense>
#include <memory>

#include "glt/regression.hpp"
#include "glt/rng.hpp"

namespace glt {

struct GltState {
  Eigen::VectorXd beta;
  double sigma2 = 1.0;
  Eigen::VectorXd lambda;
  double tau = 1.0;
  double xi = 1.0;

  /// Throws InvalidStateError if any scale is nonpositive/non-finite or xi <= xi_floor.
  void validate(double xi_floor = 0.5) const;
};

// Slice-sampler building blocks, exposed for testing.

/// g(gamma) = (xi + tau gamma^{-1/2})^{-(1/xi + 1)}, increasing in gamma = lambda^2.
double lambda_slice_g(double gamma, double tau, double xi);
/// Inverse of lambda_slice_g: [tau / (u^{-xi/(1+xi)} - xi)]^2.
double lambda_slice_g_inv(double u, double tau, double xi);
/// g_j(tau) = (tau + xi lambda_j)^{-(1/xi + 1)}, decreasing in tau.
double tau_slice_g(double tau, double xi, double lambda);
/// Inverse: v^{-xi/(1+xi)} - xi lambda_j.
double tau_slice_g_inv(double v, double xi, double lambda);

/// Log-likelihood of eta = log xi given (tau, lambda), up to a constant:
/// -log Gamma(p/xi + 1) + (p/2) log pi - (1/xi + 1) sum_j log(tau + xi lambda_j);
/// -inf when xi <= xi_floor.
double xi_log_likelihood(double eta, double tau, const Eigen::VectorXd& lambda, double xi_floor = 0.5);

/// Gibbs sampler for the GLT prior: beta, sigma2, each lambda_j (slice), tau (slice),
/// then xi (elliptical slice on log xi centred by the Hill estimate of lambda).
class GltSampler {
 public:
  GltSampler(const RegressionData& data, const ChainConfig& config);
  ~GltSampler();
  GltSampler(const GltSampler&) = delete;
  GltSampler& operator=(const GltSampler&) = delete;

  /// beta = 0, sigma2 = var(y) (1 if degenerate), lambda = 1, tau = 1, xi = 1.
  GltState initial_state() const;

  void step_beta(GltState& s, Rng& rng);
  void step_sigma2(GltState& s, Rng& rng);
  void step_lambda(GltState& s, int j, Rng& rng);
  void step_tau(GltState& s, Rng& rng);
  void step_xi(GltState& s, Rng& rng);
  /// One full sweep in the order beta, sigma2, lambda_1..p, tau, xi.
  void iterate(GltState& s, Rng& rng);

  /// Centre of the xi prior on the log scale for the current lambda.
  double prior_center(const GltState& s) const;
  double log_likelihood(const GltState& s) const;

  /// Replaces y (Geweke successive-conditional simulation).
  void set_response(const Eigen::VectorXd& y);
  /// Data-generating fit X beta for the current design.
  Eigen::VectorXd fitted(const Eigen::VectorXd& beta) const;

  const ChainDiagnostics& diagnostics() const { return diag_; }
  ChainDiagnostics& diagnostics() { return diag_; }

 private:
  class Impl;
  std::unique_ptr<Impl> impl_;
  ChainConfig config_;
  ChainDiagnostics diag_;
  int p_;
  double var_y_;
};

/// Throws DataError for p < 2 unless xi_prior_mu is fixed.
/// Runs burn + keep sweeps from the initial state and stores every thin-th
/// post-burn state. Deterministic given config.seed. Throws SamplerAbort when more
/// than 1% of iterations hit a factorization failure.
ChainOutput run_chain(const RegressionData& data, const ChainConfig& config);

}  // namespace glt
