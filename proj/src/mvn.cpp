#include "glt/mvn.hpp"

#include <cmath>

#include "glt/error.hpp"

namespace glt {

namespace {

void check_prior(const Eigen::VectorXd& prior_var, Eigen::Index p, double sigma2) {
  if (prior_var.size() != p) throw DomainError("mvn: prior variance has wrong length");
  if (!(prior_var.array() > 0.0).all() || !prior_var.allFinite()) {
    throw DomainError("mvn: prior variances must be positive and finite");
  }
  if (!(sigma2 > 0.0) || !std::isfinite(sigma2)) throw DomainError("mvn: sigma2 must be positive");
}

Eigen::VectorXd standard_normals(Eigen::Index k, Rng& rng) {
  Eigen::VectorXd z(k);
  for (Eigen::Index i = 0; i < k; ++i) z[i] = rng.normal();
  return z;
}

}  // namespace

GaussianPosteriorSampler::GaussianPosteriorSampler(Eigen::MatrixXd X, Eigen::VectorXd y, MvnStrategy strategy)
    : X_(std::move(X)), y_(std::move(y)) {
  if (X_.rows() != y_.size()) throw DomainError("mvn: X rows must match length of y");
  if (X_.cols() == 0) throw DomainError("mvn: X has no columns");
  resolved_ = strategy;
  if (strategy == MvnStrategy::Auto) {
    resolved_ = X_.cols() > 2 * X_.rows() ? MvnStrategy::LowRank : MvnStrategy::Dense;
  }
  Xty_ = X_.transpose() * y_;
  if (resolved_ == MvnStrategy::Dense) {
    XtX_ = Eigen::MatrixXd::Zero(X_.cols(), X_.cols());
    XtX_.selfadjointView<Eigen::Lower>().rankUpdate(X_.transpose());
    XtX_.triangularView<Eigen::StrictlyUpper>() = XtX_.transpose();
  }
}

void GaussianPosteriorSampler::set_response(const Eigen::VectorXd& y) {
  if (y.size() != X_.rows()) throw DomainError("mvn: response length mismatch");
  y_ = y;
  Xty_.noalias() = X_.transpose() * y_;
}

Eigen::VectorXd GaussianPosteriorSampler::draw(const Eigen::VectorXd& prior_var, double sigma2, Rng& rng) {
  check_prior(prior_var, X_.cols(), sigma2);
  return resolved_ == MvnStrategy::Dense ? draw_dense(prior_var, sigma2, rng)
                                         : draw_low_rank(prior_var, sigma2, rng);
}

Eigen::VectorXd GaussianPosteriorSampler::draw_dense(const Eigen::VectorXd& prior_var, double sigma2,
                                                     Rng& rng) {
  work_ = XtX_;
  work_.diagonal().array() += prior_var.array().inverse();
  Eigen::LLT<Eigen::MatrixXd> llt(work_);
  if (llt.info() != Eigen::Success) throw FactorizationError("mvn: posterior precision is not positive definite");
  Eigen::VectorXd mean = llt.solve(Xty_);
  // Q = L L'; L' e = z gives e ~ N(0, Q^{-1}).
  Eigen::VectorXd z = standard_normals(X_.cols(), rng);
  llt.matrixU().solveInPlace(z);
  Eigen::VectorXd out = mean + std::sqrt(sigma2) * z;
  if (!out.allFinite()) throw FactorizationError("mvn: non-finite draw");
  return out;
}

Eigen::VectorXd GaussianPosteriorSampler::draw_low_rank(const Eigen::VectorXd& prior_var, double sigma2,
                                                        Rng& rng) {
  const Eigen::Index n = X_.rows();
  const Eigen::Index p = X_.cols();
  const double sigma = std::sqrt(sigma2);
  const Eigen::ArrayXd sd = prior_var.array().sqrt();

  // u ~ N(0, sigma2 D), v = X u + sigma delta, beta = u + D X' (I + X D X')^{-1} (y - v).
  Eigen::VectorXd u = sigma * (sd * standard_normals(p, rng).array()).matrix();
  Eigen::VectorXd v = X_ * u + sigma * standard_normals(n, rng);

  scaled_ = X_ * sd.matrix().asDiagonal();
  work_ = Eigen::MatrixXd::Identity(n, n);
  work_.selfadjointView<Eigen::Lower>().rankUpdate(scaled_);
  Eigen::LLT<Eigen::MatrixXd> llt(work_.selfadjointView<Eigen::Lower>());
  if (llt.info() != Eigen::Success) throw FactorizationError("mvn: I + X D X' is not positive definite");
  const Eigen::VectorXd w = llt.solve(y_ - v);
  Eigen::VectorXd out = u + (prior_var.array() * (X_.transpose() * w).array()).matrix();
  if (!out.allFinite()) throw FactorizationError("mvn: non-finite draw");
  return out;
}

Eigen::VectorXd GaussianPosteriorSampler::mean(const Eigen::VectorXd& prior_var) const {
  Eigen::MatrixXd Q = X_.transpose() * X_;
  Q.diagonal().array() += prior_var.array().inverse();
  return Q.ldlt().solve(Xty_);
}

Eigen::MatrixXd GaussianPosteriorSampler::covariance(const Eigen::VectorXd& prior_var, double sigma2) const {
  Eigen::MatrixXd Q = X_.transpose() * X_;
  Q.diagonal().array() += prior_var.array().inverse();
  return sigma2 * Q.ldlt().solve(Eigen::MatrixXd::Identity(Q.rows(), Q.cols()));
}

Eigen::VectorXd mvn_sample_posterior(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                                     const Eigen::VectorXd& prior_var, double sigma2, Rng& rng,
                                     MvnStrategy strategy) {
  GaussianPosteriorSampler sampler(X, y, strategy);
  return sampler.draw(prior_var, sigma2, rng);
}

}  // namespace glt
