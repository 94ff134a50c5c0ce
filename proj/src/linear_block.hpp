#pragma once

// Conditional updates of (beta, sigma2) shared by the GLT and Horseshoe samplers.

#include <Eigen/Dense>
#include <optional>

#include "glt/mvn.hpp"
#include "glt/regression.hpp"
#include "glt/rng.hpp"

namespace glt::detail {

class LinearBlock {
 public:
  LinearBlock(const RegressionData& data, MvnStrategy strategy);

  /// beta ~ N(Sigma X'y, sigma2 Sigma), Sigma = (X'X + diag(prior_var)^{-1})^{-1}.
  Eigen::VectorXd draw_beta(const Eigen::VectorXd& prior_var, double sigma2, Rng& rng);

  /// ||y - X beta||^2
  double residual_ss(const Eigen::VectorXd& beta) const;

  /// sigma2 ~ IG(shape0 + (n + p)/2, rate0 + (||y - X beta||^2 + sum beta^2 / prior_var) / 2).
  /// Sets `degenerate` when the rate had to be floored.
  double draw_sigma2(const Eigen::VectorXd& beta, const Eigen::VectorXd& prior_var, double shape0,
                     double rate0, Rng& rng, bool& degenerate) const;

  double log_likelihood(const Eigen::VectorXd& beta, double sigma2) const;

  /// Swaps in a new response (Geweke successive-conditional simulation).
  void set_response(const Eigen::VectorXd& y);

  /// X beta (beta itself for the identity design).
  Eigen::VectorXd fitted(const Eigen::VectorXd& beta) const;

  int n() const { return static_cast<int>(y_.size()); }
  int p() const { return p_; }

 private:
  bool identity_;
  int p_;
  Eigen::VectorXd y_;
  std::optional<GaussianPosteriorSampler> mvn_;
};

}  // namespace glt::detail
