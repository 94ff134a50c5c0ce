#include "glt/regression.hpp"

#include "glt/error.hpp"

namespace glt {

RegressionData RegressionData::linear(Eigen::MatrixXd X, Eigen::VectorXd y) {
  RegressionData d;
  d.X = std::move(X);
  d.y = std::move(y);
  d.validate();
  return d;
}

RegressionData RegressionData::normal_means(Eigen::VectorXd y) {
  RegressionData d;
  d.y = std::move(y);
  d.identity_design = true;
  d.validate();
  return d;
}

void RegressionData::validate() const {
  if (y.size() < 1) throw DataError("regression data: empty response");
  if (!y.allFinite()) throw DataError("regression data: response has non-finite entries");
  if (identity_design) return;
  if (X.cols() < 1) throw DataError("regression data: design has no columns");
  if (X.rows() != y.size()) {
    throw DataError("regression data: design has " + std::to_string(X.rows()) + " rows but response has " +
                    std::to_string(y.size()) + " entries");
  }
  if (!X.allFinite()) throw DataError("regression data: design has non-finite entries");
}

void ChainConfig::validate() const {
  if (burn < 0) throw DomainError("chain config: burn must be >= 0");
  if (keep < 1 || thin < 1) throw DomainError("chain config: keep and thin must be positive");
  if (keep < thin) throw DomainError("chain config: keep must be at least thin");
  if (!(rho2 > 0.0)) throw DomainError("chain config: rho2 must be positive");
  if (!(xi_floor >= 0.0)) throw DomainError("chain config: xi_floor must be >= 0");
  if (sigma2_shape < 0.0 || sigma2_rate < 0.0) throw DomainError("chain config: sigma2 prior must be nonnegative");
  if ((sigma2_shape > 0.0) != (sigma2_rate > 0.0)) {
    throw DomainError("chain config: sigma2 prior needs both shape and rate, or neither");
  }
}

double sample_variance(const Eigen::VectorXd& v) {
  if (v.size() < 2) return 0.0;
  const double mean = v.mean();
  return (v.array() - mean).square().sum() / static_cast<double>(v.size() - 1);
}

}  // namespace glt
