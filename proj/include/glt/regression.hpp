#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>

#include "glt/mvn.hpp"

namespace glt {

/// y = X beta + sigma eps. With identity_design the model is the normal-means
/// problem y_j = beta_j + sigma eps_j and X is left empty.
struct RegressionData {
  Eigen::VectorXd y;
  Eigen::MatrixXd X;
  bool identity_design = false;

  static RegressionData linear(Eigen::MatrixXd X, Eigen::VectorXd y);
  static RegressionData normal_means(Eigen::VectorXd y);

  int n() const { return static_cast<int>(y.size()); }
  int p() const { return identity_design ? static_cast<int>(y.size()) : static_cast<int>(X.cols()); }

  /// Throws DataError on empty, non-finite or mismatched inputs.
  void validate() const;
};

/// Run-length and prior settings shared by the GLT and Horseshoe samplers.
struct ChainConfig {
  int burn = 10000;
  int keep = 10000;  // post-burn iterations; every thin-th one is stored
  int thin = 100;
  std::uint64_t seed = 1;
  double rho2 = 0.001;    // variance of the log-normal prior on xi
  double xi_floor = 0.5;  // lower truncation point of xi

  // Inverse-gamma(shape, rate) prior on sigma2; (0, 0) is the Jeffreys prior 1/sigma2.
  double sigma2_shape = 0.0;
  double sigma2_rate = 0.0;
  // Fixed log-scale location for the xi prior. Unset: recalibrated from lambda every
  // iteration with the Hill estimator.
  std::optional<double> xi_prior_mu;

  MvnStrategy strategy = MvnStrategy::Auto;

  int draws() const { return keep / thin; }
  /// Throws DomainError on invalid settings.
  void validate() const;
};

struct ChainDiagnostics {
  long iterations = 0;
  long ess_proposals = 0;        // total ESS likelihood evaluations
  int ess_max_proposals = 0;     // worst single ESS call
  long ess_capped = 0;           // ESS calls that hit the proposal cap
  long lambda_degenerate = 0;    // lambda slice updates skipped for underflowing mass
  long tau_degenerate = 0;
  long sigma2_degenerate = 0;    // residual rate floored at 1e-300
  long factorization_failures = 0;
};

/// Thinned draws, one row per stored iteration.
struct ChainOutput {
  std::string prior;            // "glt", "horseshoe" or "horseshoe-truncated"
  Eigen::MatrixXd beta;         // draws x p
  Eigen::MatrixXd lambda;       // draws x p
  Eigen::VectorXd sigma2;
  Eigen::VectorXd tau;
  Eigen::VectorXd xi;           // empty for the Horseshoe
  Eigen::VectorXd log_lik;      // Gaussian log-likelihood of y at each stored draw
  double response_sd = 0.0;     // sample sd of y, used by the collapse check
  ChainDiagnostics diagnostics;

  int draws() const { return static_cast<int>(sigma2.size()); }
  int p() const { return static_cast<int>(beta.cols()); }
  bool has_xi() const { return xi.size() > 0; }
};

/// Sample variance with the n - 1 divisor.
double sample_variance(const Eigen::VectorXd& v);

}  // namespace glt
