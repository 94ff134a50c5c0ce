#include "glt/datagen.hpp"

#include <algorithm>
#include <cmath>

#include "glt/error.hpp"
#include "glt/specfun.hpp"

namespace glt {

namespace {
constexpr int kMaxResample = 100;
constexpr double kZClamp = 40.0;
}  // namespace

void SimEnv::validate() const {
  if (n < 3) throw DomainError("SimEnv: n must be at least 3");
  if (p < 1) throw DomainError("SimEnv: p must be positive");
  if (q < 0 || q > p) throw DomainError("SimEnv: q must lie in [0, p]");
  if (!(rho >= 0.0 && rho < 1.0)) throw DomainError("SimEnv: rho must lie in [0, 1)");
  if (!(snr > 0.0) || !std::isfinite(snr)) throw DomainError("SimEnv: snr must be positive");
}

Eigen::MatrixXd draw_equicorrelated_design(int n, int p, double rho, Rng& rng) {
  if (!(rho >= 0.0 && rho < 1.0)) throw DomainError("draw_equicorrelated_design: rho must lie in [0, 1)");
  const double a = std::sqrt(rho);
  const double b = std::sqrt(1.0 - rho);
  Eigen::MatrixXd X(n, p);
  for (int i = 0; i < n; ++i) {
    const double shared = rng.normal();
    for (int j = 0; j < p; ++j) X(i, j) = a * shared + b * rng.normal();
  }
  return X;
}

void standardize_columns(Eigen::MatrixXd& X) {
  for (Eigen::Index j = 0; j < X.cols(); ++j) {
    auto col = X.col(j);
    col.array() -= col.mean();
    const double norm = col.norm();
    if (!(norm > 0.0)) throw DataError("standardize_columns: column " + std::to_string(j) + " is constant");
    col /= norm;
  }
}

SimResult simulate(const SimEnv& env, Rng& rng) {
  env.validate();
  Eigen::MatrixXd X;
  for (int attempt = 0;; ++attempt) {
    X = draw_equicorrelated_design(env.n, env.p, env.rho, rng);
    try {
      standardize_columns(X);
      break;
    } catch (const DataError&) {
      if (attempt + 1 >= kMaxResample) throw;
    }
  }
  Eigen::VectorXd truth = Eigen::VectorXd::Zero(env.p);
  truth.head(env.q).setOnes();
  Eigen::VectorXd eps(env.n);
  for (int i = 0; i < env.n; ++i) eps[i] = rng.normal();

  const Eigen::VectorXd signal = X * truth;
  const double var_signal = sample_variance(signal);
  const double var_eps = sample_variance(eps);
  // q = 0 gives no signal variance; fall back to unit noise.
  const double sigma0 = var_signal > 0.0 ? std::sqrt(var_signal / (env.snr * var_eps)) : 1.0;
  Eigen::VectorXd y = signal + sigma0 * eps;

  SimResult out{RegressionData::linear(std::move(X), std::move(y)), std::move(truth), sigma0, std::move(eps)};
  return out;
}

Eigen::VectorXd quantile_transform(const Eigen::VectorXd& t, double df) {
  if (!(df > 0.0)) throw DomainError("quantile_transform: df must be positive");
  Eigen::VectorXd z(t.size());
  for (Eigen::Index i = 0; i < t.size(); ++i) {
    if (!std::isfinite(t[i])) throw DomainError("quantile_transform: t must be finite");
    // Work in the lower tail for precision, then restore the sign.
    const double a = -std::fabs(t[i]);
    const double prob = specfun::student_t_cdf(a, df);
    double zi = prob > 0.0 ? specfun::normal_quantile(prob) : -kZClamp;
    zi = std::max(zi, -kZClamp);
    z[i] = t[i] > 0.0 ? -zi : (t[i] < 0.0 ? zi : 0.0);
  }
  return z;
}

Eigen::MatrixXd gaussian_kernel_design(const Eigen::VectorXd& x, double bandwidth) {
  if (!(bandwidth > 0.0)) throw DomainError("gaussian_kernel_design: bandwidth must be positive");
  const Eigen::Index n = x.size();
  Eigen::MatrixXd K(n, n);
  const double s = 1.0 / (2.0 * bandwidth * bandwidth);
  for (Eigen::Index i = 0; i < n; ++i) {
    K(i, i) = 1.0;
    for (Eigen::Index j = 0; j < i; ++j) {
      const double d = x[i] - x[j];
      K(i, j) = K(j, i) = std::exp(-d * d * s);
    }
  }
  return K;
}

}  // namespace glt
