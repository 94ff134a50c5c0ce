#include "glt/glt_sampler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "glt/distributions.hpp"
#include "glt/error.hpp"
#include "glt/ess.hpp"
#include "glt/hill.hpp"
#include "glt/specfun.hpp"
#include "linear_block.hpp"

namespace glt {

namespace {
constexpr double kMFloor = 1e-300;
constexpr double kInf = std::numeric_limits<double>::infinity();
}  // namespace

void GltState::validate(double xi_floor) const {
  if (beta.size() != lambda.size()) throw InvalidStateError("GltState: beta and lambda lengths differ");
  if (!beta.allFinite()) throw InvalidStateError("GltState: beta has non-finite entries");
  if (!(sigma2 > 0.0) || !std::isfinite(sigma2)) throw InvalidStateError("GltState: sigma2 must be positive");
  if (!(lambda.array() > 0.0).all() || !lambda.allFinite()) throw InvalidStateError("GltState: lambda must be positive");
  if (!(tau > 0.0) || !std::isfinite(tau)) throw InvalidStateError("GltState: tau must be positive");
  if (!(xi > xi_floor) || !std::isfinite(xi)) throw InvalidStateError("GltState: xi outside its support");
}

double lambda_slice_g(double gamma, double tau, double xi) {
  return std::pow(xi + tau / std::sqrt(gamma), -(1.0 / xi + 1.0));
}

double lambda_slice_g_inv(double u, double tau, double xi) {
  const double r = tau / (std::pow(u, -xi / (1.0 + xi)) - xi);
  return r * r;
}

double tau_slice_g(double tau, double xi, double lambda) { return std::pow(tau + xi * lambda, -(1.0 / xi + 1.0)); }

double tau_slice_g_inv(double v, double xi, double lambda) { return std::pow(v, -xi / (1.0 + xi)) - xi * lambda; }

double xi_log_likelihood(double eta, double tau, const Eigen::VectorXd& lambda, double xi_floor) {
  const double xi = std::exp(eta);
  if (!(xi > xi_floor) || !std::isfinite(xi)) return -kInf;
  const double p = static_cast<double>(lambda.size());
  double s = 0.0;
  for (Eigen::Index j = 0; j < lambda.size(); ++j) s += std::log(tau + xi * lambda[j]);
  return -specfun::log_gamma(p / xi + 1.0) + 0.5 * p * std::log(std::numbers::pi) - (1.0 / xi + 1.0) * s;
}

class GltSampler::Impl {
 public:
  Impl(const RegressionData& data, MvnStrategy strategy) : block(data, strategy) {}
  detail::LinearBlock block;
  std::vector<double> lambda_buf;
};

GltSampler::GltSampler(const RegressionData& data, const ChainConfig& config) : config_(config) {
  data.validate();
  config_.validate();
  impl_ = std::make_unique<Impl>(data, config_.strategy);
  p_ = data.p();
  if (p_ < 2 && !config_.xi_prior_mu) {
    throw DataError("GLT sampler: the Hill-calibrated xi prior needs at least two predictors");
  }
  var_y_ = sample_variance(data.y);
}

GltSampler::~GltSampler() = default;

GltState GltSampler::initial_state() const {
  GltState s;
  s.beta = Eigen::VectorXd::Zero(p_);
  s.sigma2 = var_y_ > 0.0 && std::isfinite(var_y_) ? var_y_ : 1.0;
  s.lambda = Eigen::VectorXd::Ones(p_);
  s.tau = 1.0;
  s.xi = std::max(1.0, 2.0 * config_.xi_floor);
  return s;
}

void GltSampler::step_beta(GltState& s, Rng& rng) {
  const Eigen::VectorXd prior_var = s.lambda.array().square();
  try {
    s.beta = impl_->block.draw_beta(prior_var, s.sigma2, rng);
  } catch (const FactorizationError&) {
    ++diag_.factorization_failures;
  }
}

void GltSampler::step_sigma2(GltState& s, Rng& rng) {
  const Eigen::VectorXd prior_var = s.lambda.array().square();
  bool degenerate = false;
  s.sigma2 = impl_->block.draw_sigma2(s.beta, prior_var, config_.sigma2_shape, config_.sigma2_rate, rng, degenerate);
  if (degenerate) ++diag_.sigma2_degenerate;
}

void GltSampler::step_lambda(GltState& s, int j, Rng& rng) {
  const double xi = s.xi;
  const double c = xi / (1.0 + xi);
  const double lam = s.lambda[j];
  // u = g(gamma) U; the lower bound g^{-1}(u) written without forming u.
  const double log_u = std::log(rng.uniform());
  const double denom = xi * std::expm1(-c * log_u) + (s.tau / lam) * std::exp(-c * log_u);
  const double r = s.tau / denom;
  const double lower = r * r;
  const double m = std::max(s.beta[j] * s.beta[j] / (2.0 * s.sigma2), kMFloor);
  try {
    const double gamma = invgamma_sample_truncated(0.5 * (1.0 / xi + 1.0), m, lower, kInf, rng);
    const double next = std::sqrt(gamma);
    if (next > 0.0 && std::isfinite(next)) {
      s.lambda[j] = next;
    } else {
      ++diag_.lambda_degenerate;
    }
  } catch (const DegenerateRegionError&) {
    ++diag_.lambda_degenerate;
  }
}

void GltSampler::step_tau(GltState& s, Rng& rng) {
  const double xi = s.xi;
  const double c = xi / (1.0 + xi);
  double upper = kInf;
  for (int j = 0; j < p_; ++j) {
    const double log_v = std::log(rng.uniform());
    const double bound = s.tau * std::exp(-c * log_v) + xi * s.lambda[j] * std::expm1(-c * log_v);
    upper = std::min(upper, bound);
  }
  try {
    const double next = invgamma_sample_truncated(1.0, 1.0, 0.0, upper, rng);
    if (next > 0.0 && std::isfinite(next)) {
      s.tau = next;
    } else {
      ++diag_.tau_degenerate;
    }
  } catch (const DegenerateRegionError&) {
    ++diag_.tau_degenerate;
  }
}

double GltSampler::prior_center(const GltState& s) const {
  if (config_.xi_prior_mu) return *config_.xi_prior_mu;
  auto& buf = impl_->lambda_buf;
  buf.assign(s.lambda.data(), s.lambda.data() + s.lambda.size());
  return calibrated_mu(buf);
}

void GltSampler::step_xi(GltState& s, Rng& rng) {
  if (!(s.xi > config_.xi_floor)) throw InvalidStateError("step_xi: xi is outside its support");
  const EllipseSpec spec{prior_center(s), config_.rho2};
  const double tau = s.tau;
  const Eigen::VectorXd& lambda = s.lambda;
  const double floor = config_.xi_floor;
  const EssResult res =
      ess_step(std::log(s.xi), spec, [&](double eta) { return xi_log_likelihood(eta, tau, lambda, floor); }, rng);
  diag_.ess_proposals += res.proposals;
  diag_.ess_max_proposals = std::max(diag_.ess_max_proposals, res.proposals);
  if (res.capped) ++diag_.ess_capped;
  s.xi = std::exp(res.value);
}

void GltSampler::iterate(GltState& s, Rng& rng) {
  step_beta(s, rng);
  step_sigma2(s, rng);
  for (int j = 0; j < p_; ++j) step_lambda(s, j, rng);
  step_tau(s, rng);
  step_xi(s, rng);
  ++diag_.iterations;
#ifndef NDEBUG
  s.validate(config_.xi_floor);
#endif
}

double GltSampler::log_likelihood(const GltState& s) const { return impl_->block.log_likelihood(s.beta, s.sigma2); }

void GltSampler::set_response(const Eigen::VectorXd& y) { impl_->block.set_response(y); }

Eigen::VectorXd GltSampler::fitted(const Eigen::VectorXd& beta) const { return impl_->block.fitted(beta); }

ChainOutput run_chain(const RegressionData& data, const ChainConfig& config) {
  GltSampler sampler(data, config);
  Rng rng(config.seed, 0);
  GltState s = sampler.initial_state();

  const int draws = config.draws();
  const int p = data.p();
  ChainOutput out;
  out.prior = "glt";
  out.beta.resize(draws, p);
  out.lambda.resize(draws, p);
  out.sigma2.resize(draws);
  out.tau.resize(draws);
  out.xi.resize(draws);
  out.log_lik.resize(draws);
  out.response_sd = std::sqrt(sample_variance(data.y));

  const long total = static_cast<long>(config.burn) + config.keep;
  const double abort_limit = 0.01 * static_cast<double>(total);
  int stored = 0;
  for (long it = 0; it < total; ++it) {
    sampler.iterate(s, rng);
    if (static_cast<double>(sampler.diagnostics().factorization_failures) > abort_limit) {
      throw SamplerAbort("run_chain: repeated factorization failures in the beta update");
    }
    const long post = it - config.burn + 1;
    if (post > 0 && post % config.thin == 0 && stored < draws) {
      out.beta.row(stored) = s.beta.transpose();
      out.lambda.row(stored) = s.lambda.transpose();
      out.sigma2[stored] = s.sigma2;
      out.tau[stored] = s.tau;
      out.xi[stored] = s.xi;
      out.log_lik[stored] = sampler.log_likelihood(s);
      ++stored;
    }
  }
  out.diagnostics = sampler.diagnostics();
  return out;
}

}  // namespace glt
