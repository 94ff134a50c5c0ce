#pragma once

#include <Eigen/Dense>

#include "glt/rng.hpp"

namespace glt {

enum class MvnStrategy {
  Auto,      // dense when p <= 2n, low-rank otherwise
  Dense,     // Cholesky of the p x p precision X'X + diag(1/prior_var)
  LowRank,   // n x n system I + X diag(prior_var) X' (cost O(n^2 p))
};

/// Draws beta ~ N(Sigma X'y, sigma2 Sigma), Sigma = (X'X + diag(prior_var)^{-1})^{-1}:
/// the conditional posterior of a linear model y = X beta + sigma eps with prior
/// beta ~ N(0, sigma2 diag(prior_var)). Caches the data-only products X'X and X'y.
class GaussianPosteriorSampler {
 public:
  GaussianPosteriorSampler(Eigen::MatrixXd X, Eigen::VectorXd y, MvnStrategy strategy = MvnStrategy::Auto);

  /// Replaces the response, keeping X (and X'X) fixed.
  void set_response(const Eigen::VectorXd& y);

  Eigen::VectorXd draw(const Eigen::VectorXd& prior_var, double sigma2, Rng& rng);

  /// Posterior mean Sigma X'y and covariance sigma2 Sigma, by dense algebra.
  Eigen::VectorXd mean(const Eigen::VectorXd& prior_var) const;
  Eigen::MatrixXd covariance(const Eigen::VectorXd& prior_var, double sigma2) const;

  MvnStrategy resolved_strategy() const { return resolved_; }
  const Eigen::MatrixXd& X() const { return X_; }
  const Eigen::VectorXd& y() const { return y_; }
  const Eigen::VectorXd& Xty() const { return Xty_; }

 private:
  Eigen::VectorXd draw_dense(const Eigen::VectorXd& prior_var, double sigma2, Rng& rng);
  Eigen::VectorXd draw_low_rank(const Eigen::VectorXd& prior_var, double sigma2, Rng& rng);

  Eigen::MatrixXd X_;
  Eigen::VectorXd y_;
  Eigen::VectorXd Xty_;
  Eigen::MatrixXd XtX_;  // only filled for the dense strategy
  MvnStrategy resolved_;

  // Scratch buffers reused across draws.
  Eigen::MatrixXd work_;
  Eigen::MatrixXd scaled_;
};

/// One-shot convenience wrapper over GaussianPosteriorSampler.
Eigen::VectorXd mvn_sample_posterior(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                                     const Eigen::VectorXd& prior_var, double sigma2, Rng& rng,
                                     MvnStrategy strategy = MvnStrategy::Auto);

}  // namespace glt
