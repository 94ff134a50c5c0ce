#include <doctest.h>

#include <cmath>

#include "glt/datagen.hpp"
#include "glt/error.hpp"
#include "glt/regression.hpp"

using namespace glt;

TEST_SUITE("datagen") {
  TEST_CASE("columns are centred with unit norm") {
    Rng rng(1, 0);
    const SimResult sim = simulate(SimEnv{40, 25, 4, 0.3, 5.0}, rng);
    const Eigen::MatrixXd& X = sim.data.X;
    CHECK(X.rows() == 40);
    CHECK(X.cols() == 25);
    for (int j = 0; j < 25; ++j) {
      CHECK(std::fabs(X.col(j).sum()) < 1e-12);
      CHECK(X.col(j).norm() == doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK(sim.truth.head(4) == Eigen::VectorXd::Ones(4));
    CHECK(sim.truth.tail(21) == Eigen::VectorXd::Zero(21));
  }

  TEST_CASE("noise level hits the requested SNR") {
    Rng rng(2, 0);
    const SimResult sim = simulate(SimEnv{100, 50, 5, 0.0, 4.0}, rng);
    const Eigen::VectorXd signal = sim.data.X * sim.truth;
    const double snr = sample_variance(signal) / sample_variance(sim.sigma0 * sim.noise);
    CHECK(snr == doctest::Approx(4.0).epsilon(1e-10));
    CHECK((sim.data.y - signal - sim.sigma0 * sim.noise).norm() < 1e-12);
  }

  TEST_CASE("equicorrelated design") {
    Rng rng(3, 0);
    const Eigen::MatrixXd X = draw_equicorrelated_design(20000, 3, 0.4, rng);
    const Eigen::MatrixXd c = (X.transpose() * X) / 20000.0;
    CHECK(c(0, 0) == doctest::Approx(1.0).epsilon(0.03));
    CHECK(c(0, 1) == doctest::Approx(0.4).epsilon(0.08));
  }

  TEST_CASE("seeded and reproducible") {
    Rng a(7, 0), b(7, 0), c(8, 0);
    const SimEnv env{30, 20, 2, 0.1, 5.0};
    CHECK(simulate(env, a).data.y == simulate(env, b).data.y);
    CHECK(simulate(env, a).data.y != simulate(env, c).data.y);
  }

  TEST_CASE("no signal") {
    Rng rng(4, 0);
    const SimResult sim = simulate(SimEnv{10, 5, 0, 0.0, 5.0}, rng);
    CHECK(sim.sigma0 == 1.0);
  }

  TEST_CASE("invalid environments") {
    Rng rng(1, 0);
    CHECK_THROWS_AS(simulate(SimEnv{2, 5, 1, 0.0, 5.0}, rng), DomainError);
    CHECK_THROWS_AS(simulate(SimEnv{10, 5, 6, 0.0, 5.0}, rng), DomainError);
    CHECK_THROWS_AS(simulate(SimEnv{10, 5, 1, 1.0, 5.0}, rng), DomainError);
    CHECK_THROWS_AS(simulate(SimEnv{10, 5, 1, 0.0, 0.0}, rng), DomainError);
    Eigen::MatrixXd X = Eigen::MatrixXd::Ones(4, 2);
    CHECK_THROWS_AS(standardize_columns(X), DataError);
  }

  TEST_CASE("quantile transform and kernel design") {
    Eigen::VectorXd t(3);
    t << 0.0, 2.0, -1e6;
    const Eigen::VectorXd z = quantile_transform(t);
    CHECK(z[0] == doctest::Approx(0.0));
    CHECK(z[1] > 1.9);
    CHECK(z[1] < 2.0);
    CHECK(z[2] == -40.0);
    Eigen::VectorXd x(3);
    x << 0.0, 1.0, 3.0;
    const Eigen::MatrixXd K = gaussian_kernel_design(x, 2.0);
    CHECK(K(0, 0) == 1.0);
    CHECK(K(0, 1) == doctest::Approx(std::exp(-1.0 / 8.0)));
    CHECK(K(1, 2) == K(2, 1));
  }
}
