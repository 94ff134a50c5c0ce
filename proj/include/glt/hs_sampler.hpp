#pragma once

#include <Eigen/Dense>
#include <memory>

#include "glt/regression.hpp"
#include "glt/rng.hpp"

namespace glt {

/// Horseshoe state with the inverse-gamma auxiliaries nu_j (for lambda_j) and
/// zeta (for tau) that make every scale update conjugate.
struct HsState {
  Eigen::VectorXd beta;
  double sigma2 = 1.0;
  Eigen::VectorXd lambda;
  double tau = 1.0;
  Eigen::VectorXd nu;
  double zeta = 1.0;

  void validate(bool truncated_tau) const;
};

/// beta_j ~ N(0, sigma2 tau^2 lambda_j^2), lambda_j, tau ~ half-Cauchy(0, 1),
/// optionally tau restricted to (1/p, inf). Sweep order: beta, sigma2, lambda^2, nu,
/// tau^2, zeta.
class HsSampler {
 public:
  HsSampler(const RegressionData& data, const ChainConfig& config, bool truncated_tau);
  ~HsSampler();
  HsSampler(const HsSampler&) = delete;
  HsSampler& operator=(const HsSampler&) = delete;

  HsState initial_state() const;
  void step_beta(HsState& s, Rng& rng);
  void step_sigma2(HsState& s, Rng& rng);
  void step_lambda(HsState& s, Rng& rng);
  void step_tau(HsState& s, Rng& rng);
  void iterate(HsState& s, Rng& rng);

  double log_likelihood(const HsState& s) const;
  void set_response(const Eigen::VectorXd& y);
  Eigen::VectorXd fitted(const Eigen::VectorXd& beta) const;
  bool truncated_tau() const { return truncated_; }

  const ChainDiagnostics& diagnostics() const { return diag_; }

 private:
  class Impl;
  std::unique_ptr<Impl> impl_;
  ChainConfig config_;
  ChainDiagnostics diag_;
  bool truncated_;
  int p_;
  double var_y_;
};

ChainOutput run_hs_chain(const RegressionData& data, const ChainConfig& config, bool truncated_tau);

}  // namespace glt
