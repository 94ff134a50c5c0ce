#include <doctest.h>

#include <cmath>

#include "glt/ess.hpp"

using namespace glt;

TEST_SUITE("ess") {
  TEST_CASE("Gaussian prior times Gaussian likelihood") {
    // prior N(1, 0.5), likelihood N(eta; 3, 2): posterior N(1.4, 0.4)
    const EllipseSpec spec{1.0, 0.5};
    auto ll = [](double e) { return -0.25 * (e - 3.0) * (e - 3.0); };
    Rng rng(4, 0);
    double eta = 0.0, s = 0.0, s2 = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
      eta = ess_step(eta, spec, ll, rng).value;
      s += eta;
      s2 += eta * eta;
    }
    const double m = s / n;
    CHECK(m == doctest::Approx(1.4).epsilon(0.01));
    CHECK(s2 / n - m * m == doctest::Approx(0.4).epsilon(0.02));
  }

  TEST_CASE("support constraint through -inf") {
    const EllipseSpec spec{0.0, 1.0};
    auto ll = [](double e) { return e > 0.2 ? 0.0 : -std::numeric_limits<double>::infinity(); };
    Rng rng(5, 0);
    double eta = 1.0;
    for (int i = 0; i < 10000; ++i) {
      const EssResult r = ess_step(eta, spec, ll, rng);
      CHECK(r.value > 0.2);
      CHECK(r.proposals >= 1);
      eta = r.value;
    }
  }

  TEST_CASE("same seed, same path") {
    const EllipseSpec spec{0.3, 0.001};
    auto ll = [](double e) { return -e * e; };
    Rng a(8, 1), b(8, 1);
    double x = 0.5, y = 0.5;
    for (int i = 0; i < 100; ++i) {
      x = ess_step(x, spec, ll, a).value;
      y = ess_step(y, spec, ll, b).value;
    }
    CHECK(x == y);
  }

  TEST_CASE("bad inputs") {
    Rng rng(1, 0);
    auto ll = [](double) { return -std::numeric_limits<double>::infinity(); };
    CHECK_THROWS_AS(ess_step(0.0, EllipseSpec{0.0, 1.0}, ll, rng), InvalidStateError);
    CHECK_THROWS_AS(ess_step(0.0, EllipseSpec{0.0, 0.0}, [](double) { return 0.0; }, rng), DomainError);
  }
}
