#include <doctest.h>

#include <cmath>

#include "glt/analysis.hpp"
#include "glt/datagen.hpp"
#include "glt/error.hpp"
#include "glt/glt_sampler.hpp"
#include "glt/hs_sampler.hpp"
#include "support/geweke.hpp"

using namespace glt;
using namespace glt::testing;

namespace {
ChainConfig short_config(std::uint64_t seed = 1) {
  ChainConfig c;
  c.burn = 200;
  c.keep = 400;
  c.thin = 10;
  c.seed = seed;
  return c;
}

void check_rows(const std::vector<GewekeRow>& rows) {
  for (const auto& r : rows) {
    INFO(r.name << ": prior " << r.mc_mean << " +- " << r.mc_se << ", chain " << r.sc_mean << " +- " << r.sc_se);
    CHECK(std::fabs(r.z()) < 3.0);
  }
}
}  // namespace

TEST_SUITE("samplers") {
  TEST_CASE("slice bounds invert their functions") {
    for (double xi : {0.7, 1.0, 2.5}) {
      for (double tau : {1e-3, 1.0}) {
        const double g = lambda_slice_g(0.4, tau, xi);
        CHECK(lambda_slice_g_inv(g, tau, xi) == doctest::Approx(0.4).epsilon(1e-10));
        const double v = tau_slice_g(tau, xi, 2.0);
        CHECK(tau_slice_g_inv(v, xi, 2.0) == doctest::Approx(tau).epsilon(1e-9));
      }
    }
  }

  TEST_CASE("xi likelihood respects the floor") {
    const Eigen::VectorXd lam = Eigen::VectorXd::Constant(4, 0.5);
    CHECK(std::isinf(xi_log_likelihood(std::log(0.5), 1.0, lam)));
    CHECK(std::isfinite(xi_log_likelihood(std::log(0.51), 1.0, lam)));
  }

  TEST_CASE("GLT joint-distribution check") { check_rows(geweke_glt(GewekeSetup{})); }
  TEST_CASE("horseshoe joint-distribution check") { check_rows(geweke_hs(GewekeSetup{})); }
  TEST_CASE("truncated horseshoe joint-distribution check") { check_rows(geweke_hs(GewekeSetup{}, true)); }

  TEST_CASE("chains are reproducible and shaped") {
    Rng rng(3, 0);
    const SimResult sim = simulate(SimEnv{30, 40, 3, 0.0, 5.0}, rng);
    const ChainOutput a = run_chain(sim.data, short_config(9));
    const ChainOutput b = run_chain(sim.data, short_config(9));
    CHECK(a.draws() == 40);
    CHECK(a.p() == 40);
    CHECK(a.has_xi());
    CHECK(a.beta == b.beta);
    CHECK(a.xi == b.xi);
    CHECK((a.xi.array() > 0.5).all());
    const ChainOutput c = run_chain(sim.data, short_config(10));
    CHECK(a.beta != c.beta);

    const ChainOutput h = run_hs_chain(sim.data, short_config(9), true);
    CHECK(h.prior == "horseshoe-truncated");
    CHECK(!h.has_xi());
    CHECK((h.tau.array() > 1.0 / 40.0).all());
    CHECK(h.beta == run_hs_chain(sim.data, short_config(9), true).beta);
  }

  TEST_CASE("signals are found on an easy problem") {
    Rng rng(4, 0);
    const SimResult sim = simulate(SimEnv{60, 80, 3, 0.0, 20.0}, rng);
    ChainConfig cfg = short_config(2);
    cfg.burn = 500;
    cfg.keep = 1000;
    for (bool glt_prior : {true, false}) {
      const ChainOutput out = glt_prior ? run_chain(sim.data, cfg) : run_hs_chain(sim.data, cfg, false);
      const PosteriorSummary s = summarize(out);
      const MseMetrics m = mse_metrics(s.beta_mean, sim.truth, 3);
      INFO("prior " << out.prior);
      CHECK(m.mse_signal < 0.1);
      CHECK(m.mse_noise < 0.01);
    }
  }

  TEST_CASE("normal-means design") {
    Eigen::VectorXd y = Eigen::VectorXd::Zero(50);
    y[0] = 8.0;
    y[1] = -7.0;
    const RegressionData data = RegressionData::normal_means(y);
    CHECK(data.p() == 50);
    const PosteriorSummary s = summarize(run_chain(data, short_config(5)));
    CHECK(s.beta_mean[0] > 6.0);
    CHECK(s.beta_mean[1] < -5.0);
  }

  TEST_CASE("bad configuration and states") {
    Rng rng(3, 0);
    const SimResult sim = simulate(SimEnv{10, 5, 1, 0.0, 5.0}, rng);
    ChainConfig c = short_config();
    c.keep = 5;
    CHECK_THROWS_AS(run_chain(sim.data, c), DomainError);
    c = short_config();
    c.sigma2_shape = 1.0;
    CHECK_THROWS_AS(run_chain(sim.data, c), DomainError);
    GltState s;
    s.beta = Eigen::VectorXd::Zero(2);
    s.lambda = Eigen::VectorXd::Ones(2);
    s.xi = 0.4;
    CHECK_THROWS_AS(s.validate(0.5), InvalidStateError);
    GltSampler g(sim.data, short_config());
    GltState bad = g.initial_state();
    bad.xi = 0.3;
    CHECK_THROWS_AS(g.step_xi(bad, rng), InvalidStateError);
    const RegressionData one = RegressionData::normal_means(Eigen::VectorXd::Constant(1, 2.0));
    CHECK_THROWS_AS(run_chain(one, short_config()), DataError);
    c = short_config();
    c.xi_prior_mu = 0.0;
    CHECK(run_chain(one, c).draws() == c.draws());
  }
}
