#include <doctest.h>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>

#include "glt/densities.hpp"
#include "glt/error.hpp"
#include "support/oracles.hpp"

using namespace glt;
using namespace glt::testing;

namespace {
double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }
GltMarginalParams params(double tau, double xi) {
  GltMarginalParams p;
  p.tau = tau;
  p.xi = xi;
  return p;
}
}  // namespace

TEST_SUITE("densities") {
  TEST_CASE("GLT marginal against frozen values") {
    for (const auto& o : kGltMarginal) {
      INFO("beta=" << o.beta << " tau=" << o.tau << " xi=" << o.xi);
      CHECK(rel(glt_marginal_beta(o.beta, params(o.tau, o.xi)).value, o.value) < 1e-9);
      CHECK(rel(glt_marginal_beta_quadrature(o.beta, o.tau, o.xi), o.value) < 1e-9);
    }
  }

  TEST_CASE("GLT series and quadrature agree across the grid") {
    for (double tau : {1.0, 0.001}) {
      for (double xi : {0.6, 1.0, 1.5, 2.0, 3.0}) {
        for (double b : {0.05, 0.2, 0.5, 1.0, 2.0, 5.0, 10.0}) {
          INFO("tau=" << tau << " xi=" << xi << " beta=" << b);
          const double s = glt_marginal_beta(b, params(tau, xi)).value;
          CHECK(rel(s, glt_marginal_beta_quadrature(b, tau, xi)) < 1e-8);
          CHECK(glt_marginal_beta(-b, params(tau, xi)).value == s);
        }
      }
    }
  }

  TEST_CASE("spike at the origin") {
    const MarginalValue v = glt_marginal_beta(0.0, params(1.0, 2.0));
    CHECK(v.spike);
    CHECK(std::isinf(v.value));
    CHECK(hs_marginal_beta(0.0, 1.0).spike);
    // finite, growing without bound as beta -> 0
    double prev = 0.0;
    for (double b : {1e-2, 1e-5, 1e-10, 1e-100, 1e-300}) {
      const double d = glt_marginal_beta(b, params(1.0, 2.0)).value;
      CHECK(std::isfinite(d));
      CHECK(d > prev);
      prev = d;
    }
  }

  TEST_CASE("horseshoe marginal and its bounds") {
    for (const auto& o : kHsMarginal) CHECK(rel(hs_marginal_beta(o.beta, o.tau).value, o.value) < 1e-10);
    for (double tau : {0.1, 1.0}) {
      for (double b : {0.1, 1.0, 10.0}) {
        const auto bd = hs_marginal_bounds(b, tau);
        const double v = hs_marginal_beta(b, tau).value;
        CHECK(bd.lower < v);
        CHECK(v < bd.upper);
      }
    }
  }

  TEST_CASE("shrinkage-coefficient densities integrate to one") {
    // lower half in kappa, upper half in u = 1 - kappa
    boost::math::quadrature::tanh_sinh<double> q;
    for (double tau : {1.0, 0.1, 0.001}) {
      for (double xi : {0.6, 1.0, 2.0, 3.0}) {
        const double mass = q.integrate([&](double k) { return glt_kappa_pdf(k, tau, xi); }, 0.0, 0.5) +
                            q.integrate([&](double u) { return glt_kappa_pdf_near_one(u, tau, xi); }, 0.0, 0.5);
        INFO("glt tau=" << tau << " xi=" << xi);
        CHECK(std::fabs(mass - 1.0) < 1e-9);
      }
      const double mass = q.integrate([&](double k) { return hs_kappa_pdf(k, tau); }, 0.0, 0.5) +
                          q.integrate([&](double u) { return hs_kappa_pdf_near_one(u, tau); }, 0.0, 0.5);
      CHECK(std::fabs(mass - 1.0) < 1e-9);
    }
    CHECK(glt_kappa_pdf_near_one(0.25, 0.3, 1.7) == doctest::Approx(glt_kappa_pdf(0.75, 0.3, 1.7)).epsilon(1e-14));
    CHECK(hs_kappa_pdf_near_one(0.25, 0.3) == doctest::Approx(hs_kappa_pdf(0.75, 0.3)).epsilon(1e-14));
    // tau = 1 is the Beta(1/2, 1/2) density
    CHECK(rel(hs_kappa_pdf(0.3, 1.0), 1.0 / (M_PI * std::sqrt(0.3 * 0.7))) < 1e-14);
  }

  TEST_CASE("tail ratios") {
    const double b = 1e4;
    for (double tau : {0.1, 1.0, 10.0}) {
      const auto r = tail_ratio_probe([&](double x) { return hs_marginal_beta(x, tau).value; }, 2.0, {b});
      CHECK(std::fabs(r[0] / 0.25 - 1.0) < 0.02);
    }
    const auto r = tail_ratio_probe([](double x) { return glt_marginal_beta(x, params(1.0, 2.0)).value; }, 2.0, {b});
    CHECK(std::fabs(r[0] / std::pow(2.0, -1.5) - 1.0) < 0.05);
    CHECK(tail_ratio_probe([](double) { return 3.0; }, 1.0, {1.0, 2.0}) == std::vector<double>{1.0, 1.0});
  }

  TEST_CASE("invalid parameters") {
    CHECK_THROWS_AS(glt_marginal_beta(1.0, params(0.0, 1.0)), DomainError);
    CHECK_THROWS_AS(glt_marginal_beta(1.0, params(1.0, 0.5)), DomainError);
    CHECK_THROWS_AS(glt_kappa_pdf(1.0, 1.0, 1.0), DomainError);
    CHECK_THROWS_AS(hs_kappa_pdf(0.0, 1.0), DomainError);
    GltMarginalParams p = params(1.0, 1.0);
    p.series_tol = 0.1;
    CHECK_THROWS_AS(glt_marginal_beta(1.0, p), DomainError);
  }

  TEST_CASE("series budget exhaustion falls back to quadrature") {
    GltMarginalParams p = params(1.0, 1.0);
    p.max_terms = 16;
    CHECK_THROWS_AS(glt_marginal_beta(1.0, p), NonConvergenceError);
    CHECK(rel(glt_marginal_beta_robust(1.0, p).value, kGltMarginal[0].value) < 1e-9);
  }
}
