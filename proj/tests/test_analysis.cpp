#include <doctest.h>

#include <cmath>
#include <limits>

#include "glt/analysis.hpp"
#include "glt/error.hpp"

using namespace glt;

namespace {
ChainOutput fake_chain(int draws, int p, bool with_xi) {
  ChainOutput c;
  c.prior = with_xi ? "glt" : "horseshoe";
  c.beta.resize(draws, p);
  c.lambda.resize(draws, p);
  c.sigma2 = Eigen::VectorXd::Ones(draws);
  c.tau.resize(draws);
  c.log_lik = Eigen::VectorXd::Zero(draws);
  if (with_xi) c.xi = Eigen::VectorXd::LinSpaced(draws, 1.0, 2.0);
  for (int i = 0; i < draws; ++i) {
    c.tau[i] = 0.1 + i;
    for (int j = 0; j < p; ++j) {
      c.beta(i, j) = (j + 1) * (i + 1);
      c.lambda(i, j) = 2.0 * i + j;
    }
  }
  c.response_sd = 1.0;
  return c;
}
}  // namespace

TEST_SUITE("analysis") {
  TEST_CASE("type-7 quantiles") {
    CHECK(quantile_linear({1.0, 2.0, 3.0, 4.0}, 0.5) == 2.5);
    CHECK(quantile_linear({5.0, 1.0, 3.0}, 0.25) == 2.0);
    CHECK(quantile_linear({7.0}, 0.9) == 7.0);
    CHECK(quantile_linear({1.0, 2.0}, 1.0) == 2.0);
    CHECK_THROWS_AS(quantile_linear({}, 0.5), DomainError);
    CHECK_THROWS_AS(quantile_linear({1.0}, 1.5), DomainError);
  }

  TEST_CASE("correlation") {
    bool deg = false;
    Eigen::VectorXd a = Eigen::VectorXd::LinSpaced(10, 0.0, 1.0);
    CHECK(pearson(a, 3.0 * a, deg) == doctest::Approx(1.0));
    CHECK(!deg);
    CHECK(pearson(a, Eigen::VectorXd::Ones(10), deg) == 0.0);
    CHECK(deg);
  }

  TEST_CASE("summaries") {
    const PosteriorSummary s = summarize(fake_chain(21, 3, true));
    CHECK(s.draws == 21);
    CHECK(s.beta_mean[0] == doctest::Approx(11.0));
    CHECK(s.beta_mean[2] == doctest::Approx(33.0));
    CHECK(s.beta_lower[0] == doctest::Approx(1.5));
    CHECK(s.beta_upper[0] == doctest::Approx(20.5));
    CHECK(s.cor_lambda_tau[1] == doctest::Approx(1.0));
    CHECK(s.cor_lambda_xi[1] == doctest::Approx(1.0));
    CHECK(s.xi_mean == doctest::Approx(1.5));
    CHECK(!s.collapsed);

    const PosteriorSummary h = summarize(fake_chain(25, 2, false));
    CHECK(std::isnan(h.xi_mean));
    CHECK(h.cor_lambda_xi.size() == 0);
    CHECK_THROWS_AS(summarize(fake_chain(19, 2, true)), DomainError);
  }

  TEST_CASE("collapse flag") {
    ChainOutput c = fake_chain(30, 4, false);
    c.beta.setConstant(1e-9);
    c.tau.setConstant(1e-12);
    c.response_sd = 1.0;
    CHECK(summarize(c).collapsed);
    c.tau.setConstant(1e-3);
    CHECK(!summarize(c).collapsed);
  }

  TEST_CASE("errors against the truth") {
    Eigen::VectorXd truth(4), est(4);
    truth << 1, 1, 0, 0;
    est << 0.5, 1.0, 0.1, -0.1;
    const MseMetrics m = mse_metrics(est, truth, 2);
    CHECK(m.mse_signal == doctest::Approx(0.125));
    CHECK(m.mse_noise == doctest::Approx(0.01));
    CHECK(m.mse == doctest::Approx(0.0675));
    CHECK_THROWS_AS(mse_metrics(est, truth, 3), DataError);
    const MseMetrics none = mse_metrics(est.tail(2), truth.tail(2), 0);
    CHECK(none.mse_noise == doctest::Approx(0.01));
  }

  TEST_CASE("conditional-mean estimate for the normal-means model") {
    ChainOutput c = fake_chain(2, 2, true);
    c.lambda << 1.0, 0.0, 3.0, 0.0;
    const Eigen::VectorXd b = normal_means_posterior_mean(c, Eigen::Vector2d(2.0, 5.0));
    CHECK(b[0] == doctest::Approx(2.0 * (0.5 + 0.9) / 2.0));
    CHECK(b[1] == 0.0);
    ChainOutput h = fake_chain(1, 1, false);
    h.lambda(0, 0) = 2.0;
    h.tau[0] = 0.5;  // v = 1
    CHECK(normal_means_posterior_mean(h, Eigen::VectorXd::Constant(1, 4.0))[0] == doctest::Approx(2.0));
    CHECK_THROWS_AS(normal_means_posterior_mean(h, Eigen::Vector2d(1.0, 1.0)), DataError);
  }

  TEST_CASE("ranking and shrinkage pairs") {
    PosteriorSummary s;
    s.beta_mean = Eigen::Vector4d(0.1, -3.0, 3.0, 0.0);
    s.beta_lower = s.beta_mean.array() - 1.0;
    s.beta_upper = s.beta_mean.array() + 1.0;
    const auto r = rank_coefficients(s, 3);
    REQUIRE(r.size() == 3);
    CHECK(r[0].index == 2);
    CHECK(r[0].sign == -1);
    CHECK(r[1].index == 3);
    CHECK(r[2].index == 1);
    CHECK(rank_coefficients(s, 4)[3].sign == 0);
    const auto pairs = shrinkage_pairs(Eigen::Vector3d(2.0, -1.0, 0.5), Eigen::Vector3d(1.9, -0.1, 0.0));
    CHECK(pairs[0] == std::make_pair(-1.0, -0.1));
    CHECK(pairs[2] == std::make_pair(2.0, 1.9));
  }
}
