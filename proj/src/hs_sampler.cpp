#include "glt/hs_sampler.hpp"

#include <cmath>
#include <limits>

#include "glt/distributions.hpp"
#include "glt/error.hpp"
#include "linear_block.hpp"

namespace glt {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kRateFloor = 1e-300;
}  // namespace

void HsState::validate(bool truncated_tau) const {
  const auto p = static_cast<double>(beta.size());
  if (!beta.allFinite()) throw InvalidStateError("HsState: beta has non-finite entries");
  if (!(sigma2 > 0.0) || !std::isfinite(sigma2)) throw InvalidStateError("HsState: sigma2 must be positive");
  if (!(lambda.array() > 0.0).all() || !lambda.allFinite()) throw InvalidStateError("HsState: lambda must be positive");
  if (!(nu.array() > 0.0).all() || !(zeta > 0.0)) throw InvalidStateError("HsState: auxiliaries must be positive");
  if (!(tau > 0.0) || !std::isfinite(tau)) throw InvalidStateError("HsState: tau must be positive");
  if (truncated_tau && !(tau > 1.0 / p)) throw InvalidStateError("HsState: tau must exceed 1/p");
}

class HsSampler::Impl {
 public:
  Impl(const RegressionData& data, MvnStrategy strategy) : block(data, strategy) {}
  detail::LinearBlock block;
};

HsSampler::HsSampler(const RegressionData& data, const ChainConfig& config, bool truncated_tau)
    : config_(config), truncated_(truncated_tau) {
  data.validate();
  config_.validate();
  impl_ = std::make_unique<Impl>(data, config_.strategy);
  p_ = data.p();
  var_y_ = sample_variance(data.y);
}

HsSampler::~HsSampler() = default;

HsState HsSampler::initial_state() const {
  HsState s;
  s.beta = Eigen::VectorXd::Zero(p_);
  s.sigma2 = var_y_ > 0.0 && std::isfinite(var_y_) ? var_y_ : 1.0;
  s.lambda = Eigen::VectorXd::Ones(p_);
  s.nu = Eigen::VectorXd::Ones(p_);
  s.tau = 1.0;
  s.zeta = 1.0;
  return s;
}

void HsSampler::step_beta(HsState& s, Rng& rng) {
  const Eigen::VectorXd prior_var = (s.tau * s.lambda.array()).square();
  try {
    s.beta = impl_->block.draw_beta(prior_var, s.sigma2, rng);
  } catch (const FactorizationError&) {
    ++diag_.factorization_failures;
  }
}

void HsSampler::step_sigma2(HsState& s, Rng& rng) {
  const Eigen::VectorXd prior_var = (s.tau * s.lambda.array()).square();
  bool degenerate = false;
  s.sigma2 = impl_->block.draw_sigma2(s.beta, prior_var, config_.sigma2_shape, config_.sigma2_rate, rng, degenerate);
  if (degenerate) ++diag_.sigma2_degenerate;
}

void HsSampler::step_lambda(HsState& s, Rng& rng) {
  const double scale = 1.0 / (2.0 * s.tau * s.tau * s.sigma2);
  for (int j = 0; j < p_; ++j) {
    const double rate = std::max(1.0 / s.nu[j] + s.beta[j] * s.beta[j] * scale, kRateFloor);
    const double lambda2 = invgamma_sample(1.0, rate, rng);
    s.lambda[j] = std::sqrt(lambda2);
    s.nu[j] = invgamma_sample(1.0, 1.0 + 1.0 / lambda2, rng);
  }
}

void HsSampler::step_tau(HsState& s, Rng& rng) {
  const double ss = (s.beta.array().square() / s.lambda.array().square()).sum();
  const double shape = 0.5 * (p_ + 1.0);
  const double rate = std::max(1.0 / s.zeta + 0.5 * ss / s.sigma2, kRateFloor);
  double tau2;
  if (truncated_) {
    try {
      tau2 = invgamma_sample_truncated(shape, rate, 1.0 / (static_cast<double>(p_) * p_), kInf, rng);
    } catch (const DegenerateRegionError&) {
      ++diag_.tau_degenerate;
      tau2 = s.tau * s.tau;
    }
  } else {
    tau2 = invgamma_sample(shape, rate, rng);
  }
  s.tau = std::sqrt(tau2);
  s.zeta = invgamma_sample(1.0, 1.0 + 1.0 / tau2, rng);
}

void HsSampler::iterate(HsState& s, Rng& rng) {
  step_beta(s, rng);
  step_sigma2(s, rng);
  step_lambda(s, rng);
  step_tau(s, rng);
  ++diag_.iterations;
#ifndef NDEBUG
  s.validate(truncated_);
#endif
}

double HsSampler::log_likelihood(const HsState& s) const { return impl_->block.log_likelihood(s.beta, s.sigma2); }

void HsSampler::set_response(const Eigen::VectorXd& y) { impl_->block.set_response(y); }

Eigen::VectorXd HsSampler::fitted(const Eigen::VectorXd& beta) const { return impl_->block.fitted(beta); }

ChainOutput run_hs_chain(const RegressionData& data, const ChainConfig& config, bool truncated_tau) {
  HsSampler sampler(data, config, truncated_tau);
  Rng rng(config.seed, 0);
  HsState s = sampler.initial_state();

  const int draws = config.draws();
  const int p = data.p();
  ChainOutput out;
  out.prior = truncated_tau ? "horseshoe-truncated" : "horseshoe";
  out.beta.resize(draws, p);
  out.lambda.resize(draws, p);
  out.sigma2.resize(draws);
  out.tau.resize(draws);
  out.log_lik.resize(draws);
  out.response_sd = std::sqrt(sample_variance(data.y));

  const long total = static_cast<long>(config.burn) + config.keep;
  const double abort_limit = 0.01 * static_cast<double>(total);
  int stored = 0;
  for (long it = 0; it < total; ++it) {
    sampler.iterate(s, rng);
    if (static_cast<double>(sampler.diagnostics().factorization_failures) > abort_limit) {
      throw SamplerAbort("run_hs_chain: repeated factorization failures in the beta update");
    }
    const long post = it - config.burn + 1;
    if (post > 0 && post % config.thin == 0 && stored < draws) {
      out.beta.row(stored) = s.beta.transpose();
      out.lambda.row(stored) = s.lambda.transpose();
      out.sigma2[stored] = s.sigma2;
      out.tau[stored] = s.tau;
      out.log_lik[stored] = sampler.log_likelihood(s);
      ++stored;
    }
  }
  out.diagnostics = sampler.diagnostics();
  return out;
}

}  // namespace glt
