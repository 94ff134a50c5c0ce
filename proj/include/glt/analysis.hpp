#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "glt/regression.hpp"

namespace glt {

struct PosteriorSummary {
  int draws = 0;
  Eigen::VectorXd beta_mean;
  Eigen::VectorXd beta_lower;  // 2.5% quantile
  Eigen::VectorXd beta_upper;  // 97.5% quantile
  double sigma2_mean = 0.0;
  double tau_mean = 0.0;
  double xi_mean = 0.0;  // NaN when the chain has no xi
  Eigen::VectorXd cor_lambda_tau;
  Eigen::VectorXd cor_lambda_xi;  // empty when the chain has no xi
  bool degenerate_correlation = false;  // some correlation had a constant margin
  bool collapsed = false;
};

inline constexpr int kMinSummaryDraws = 20;

/// Sample quantile by linear interpolation between order statistics (type 7).
double quantile_linear(std::vector<double> values, double prob);

/// Pearson correlation; 0 (with `degenerate` set) when either input is constant.
double pearson(const Eigen::VectorXd& a, const Eigen::VectorXd& b, bool& degenerate);

/// Means, 95% intervals and correlations. collapsed is set when
/// max_j |mean beta_j| < 0.01 sd(y) and the mean of tau is below 1e-6.
/// Throws DomainError with fewer than 20 draws.
PosteriorSummary summarize(const ChainOutput& chain);

struct MseMetrics {
  double mse;
  double mse_signal;
  double mse_noise;
};

/// Total, signal and noise mean squared errors against a truth of q ones then zeros.
/// Throws DataError if truth does not have that pattern.
MseMetrics mse_metrics(const Eigen::VectorXd& beta_hat, const Eigen::VectorXd& truth, int q);

/// Normal-means posterior mean of beta averaged over the conditional means
/// y_j v_j / (1 + v_j), v_j the prior variance ratio of the draw (lambda_j^2, or
/// tau^2 lambda_j^2 for the horseshoe). Much less Monte Carlo noise than the plain
/// average of beta draws, which matters when y_j is near 0.
Eigen::VectorXd normal_means_posterior_mean(const ChainOutput& chain, const Eigen::VectorXd& y);

/// (y_j, beta_hat_j) sorted by y_j.
std::vector<std::pair<double, double>> shrinkage_pairs(const Eigen::VectorXd& y, const Eigen::VectorXd& beta_hat);

struct RankedCoefficient {
  int index;  // 1-based predictor index
  double mean;
  double lower;
  double upper;
  int sign;  // -1, 0 or +1
};

/// Top-k coefficients by |posterior mean|, ties broken by index.
std::vector<RankedCoefficient> rank_coefficients(const PosteriorSummary& summary, int top_k);

}  // namespace glt
