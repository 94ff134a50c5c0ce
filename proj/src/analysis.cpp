#include "glt/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "glt/error.hpp"

namespace glt {

double quantile_linear(std::vector<double> values, double prob) {
  if (values.empty()) throw DomainError("quantile_linear: no values");
  if (!(prob >= 0.0 && prob <= 1.0)) throw DomainError("quantile_linear: prob must lie in [0, 1]");
  std::sort(values.begin(), values.end());
  const double h = (static_cast<double>(values.size()) - 1.0) * prob;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, values.size() - 1);
  return values[lo] + (h - static_cast<double>(lo)) * (values[hi] - values[lo]);
}

double pearson(const Eigen::VectorXd& a, const Eigen::VectorXd& b, bool& degenerate) {
  const Eigen::ArrayXd da = a.array() - a.mean();
  const Eigen::ArrayXd db = b.array() - b.mean();
  const double saa = (da * da).sum();
  const double sbb = (db * db).sum();
  if (!(saa > 0.0) || !(sbb > 0.0)) {
    degenerate = true;
    return 0.0;
  }
  return (da * db).sum() / std::sqrt(saa * sbb);
}

PosteriorSummary summarize(const ChainOutput& chain) {
  const int d = chain.draws();
  if (d < kMinSummaryDraws) throw DomainError("summarize: need at least 20 kept draws");
  const int p = chain.p();
  PosteriorSummary s;
  s.draws = d;
  s.beta_mean = chain.beta.colwise().mean().transpose();
  s.beta_lower.resize(p);
  s.beta_upper.resize(p);
  std::vector<double> col(d);
  for (int j = 0; j < p; ++j) {
    for (int i = 0; i < d; ++i) col[i] = chain.beta(i, j);
    s.beta_lower[j] = quantile_linear(col, 0.025);
    s.beta_upper[j] = quantile_linear(col, 0.975);
  }
  s.sigma2_mean = chain.sigma2.mean();
  s.tau_mean = chain.tau.mean();
  s.xi_mean = chain.has_xi() ? chain.xi.mean() : std::numeric_limits<double>::quiet_NaN();
  s.cor_lambda_tau.resize(p);
  if (chain.has_xi()) s.cor_lambda_xi.resize(p);
  for (int j = 0; j < p; ++j) {
    const Eigen::VectorXd lam = chain.lambda.col(j);
    s.cor_lambda_tau[j] = pearson(lam, chain.tau, s.degenerate_correlation);
    if (chain.has_xi()) s.cor_lambda_xi[j] = pearson(lam, chain.xi, s.degenerate_correlation);
  }
  const double max_abs = p > 0 ? s.beta_mean.cwiseAbs().maxCoeff() : 0.0;
  s.collapsed = max_abs < 0.01 * chain.response_sd && s.tau_mean < 1e-6;
  return s;
}

MseMetrics mse_metrics(const Eigen::VectorXd& beta_hat, const Eigen::VectorXd& truth, int q) {
  const Eigen::Index p = truth.size();
  if (beta_hat.size() != p) throw DataError("mse_metrics: estimate and truth lengths differ");
  if (q < 0 || q > p) throw DataError("mse_metrics: q must lie in [0, p]");
  for (Eigen::Index j = 0; j < p; ++j) {
    if (truth[j] != (j < q ? 1.0 : 0.0)) throw DataError("mse_metrics: truth must be q ones followed by zeros");
  }
  const double ss_signal = (beta_hat.head(q).array() - 1.0).square().sum();
  const double ss_noise = beta_hat.tail(p - q).squaredNorm();
  MseMetrics m;
  m.mse = (ss_signal + ss_noise) / static_cast<double>(p);
  m.mse_signal = q > 0 ? ss_signal / q : 0.0;
  m.mse_noise = p > q ? ss_noise / static_cast<double>(p - q) : 0.0;
  return m;
}

Eigen::VectorXd normal_means_posterior_mean(const ChainOutput& chain, const Eigen::VectorXd& y) {
  if (y.size() != chain.p()) throw DataError("normal_means_posterior_mean: length of y does not match the chain");
  if (chain.draws() < 1) throw DomainError("normal_means_posterior_mean: no draws");
  const bool global = !chain.has_xi();
  Eigen::VectorXd factor = Eigen::VectorXd::Zero(y.size());
  for (int d = 0; d < chain.draws(); ++d) {
    const double g = global ? chain.tau[d] * chain.tau[d] : 1.0;
    for (Eigen::Index j = 0; j < y.size(); ++j) {
      const double v = g * chain.lambda(d, j) * chain.lambda(d, j);
      factor[j] += std::isinf(v) ? 1.0 : v / (1.0 + v);
    }
  }
  return (factor.array() / chain.draws() * y.array()).matrix();
}

std::vector<std::pair<double, double>> shrinkage_pairs(const Eigen::VectorXd& y, const Eigen::VectorXd& beta_hat) {
  if (y.size() != beta_hat.size()) throw DataError("shrinkage_pairs: lengths differ");
  std::vector<std::pair<double, double>> out(y.size());
  for (Eigen::Index j = 0; j < y.size(); ++j) out[j] = {y[j], beta_hat[j]};
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::vector<RankedCoefficient> rank_coefficients(const PosteriorSummary& summary, int top_k) {
  const int p = static_cast<int>(summary.beta_mean.size());
  if (top_k < 0 || top_k > p) throw DomainError("rank_coefficients: top_k must lie in [0, p]");
  std::vector<int> idx(p);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
    return std::fabs(summary.beta_mean[a]) > std::fabs(summary.beta_mean[b]);
  });
  std::vector<RankedCoefficient> out;
  out.reserve(top_k);
  for (int r = 0; r < top_k; ++r) {
    const int j = idx[r];
    const double m = summary.beta_mean[j];
    out.push_back({j + 1, m, summary.beta_lower[j], summary.beta_upper[j], (m > 0.0) - (m < 0.0)});
  }
  return out;
}

}  // namespace glt
