#include "linear_block.hpp"

#include <cmath>
#include <numbers>

#include "glt/distributions.hpp"
#include "glt/error.hpp"

namespace glt::detail {

namespace {
constexpr double kRateFloor = 1e-300;
}

LinearBlock::LinearBlock(const RegressionData& data, MvnStrategy strategy)
    : identity_(data.identity_design), p_(data.p()), y_(data.y) {
  if (!identity_) {
    mvn_.emplace(data.X, data.y, strategy);
  }
}

Eigen::VectorXd LinearBlock::draw_beta(const Eigen::VectorXd& prior_var, double sigma2, Rng& rng) {
  if (!identity_) return mvn_->draw(prior_var, sigma2, rng);
  Eigen::VectorXd beta(p_);
  for (int j = 0; j < p_; ++j) {
    const double v = prior_var[j];
    const double shrink = v / (1.0 + v);
    beta[j] = shrink * y_[j] + std::sqrt(sigma2 * shrink) * rng.normal();
  }
  return beta;
}

Eigen::VectorXd LinearBlock::fitted(const Eigen::VectorXd& beta) const {
  if (identity_) return beta;
  return mvn_->X() * beta;
}

double LinearBlock::residual_ss(const Eigen::VectorXd& beta) const { return (y_ - fitted(beta)).squaredNorm(); }

double LinearBlock::draw_sigma2(const Eigen::VectorXd& beta, const Eigen::VectorXd& prior_var, double shape0,
                                double rate0, Rng& rng, bool& degenerate) const {
  const double shape = shape0 + 0.5 * (n() + p_);
  double rate = rate0 + 0.5 * (residual_ss(beta) + (beta.array().square() / prior_var.array()).sum());
  degenerate = false;
  if (!(rate >= kRateFloor)) {
    rate = kRateFloor;
    degenerate = true;
  }
  return invgamma_sample(shape, rate, rng);
}

double LinearBlock::log_likelihood(const Eigen::VectorXd& beta, double sigma2) const {
  return -0.5 * n() * std::log(2.0 * std::numbers::pi * sigma2) - 0.5 * residual_ss(beta) / sigma2;
}

void LinearBlock::set_response(const Eigen::VectorXd& y) {
  y_ = y;
  if (mvn_) mvn_->set_response(y);
}

}  // namespace glt::detail
