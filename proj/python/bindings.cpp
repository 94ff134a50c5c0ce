#include <limits>
#include <optional>

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "glt/analysis.hpp"
#include "glt/datagen.hpp"
#include "glt/densities.hpp"
#include "glt/error.hpp"
#include "glt/glt_sampler.hpp"
#include "glt/hill.hpp"
#include "glt/hs_sampler.hpp"
#include "glt/specfun.hpp"

namespace py = pybind11;
using namespace glt;

namespace {

ChainConfig make_config(int burn, int keep, int thin, std::uint64_t seed, double rho2) {
  ChainConfig c;
  c.burn = burn;
  c.keep = keep;
  c.thin = thin;
  c.seed = seed;
  c.rho2 = rho2;
  return c;
}

py::dict chain_dict(const ChainOutput& c) {
  py::dict d;
  d["prior"] = c.prior;
  d["beta"] = c.beta;
  d["lambda"] = c.lambda;
  d["sigma2"] = c.sigma2;
  d["tau"] = c.tau;
  if (c.has_xi()) d["xi"] = c.xi;
  d["log_lik"] = c.log_lik;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "GLT and horseshoe shrinkage priors: densities, Hill estimator, samplers";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<DataError>(m, "DataError", PyExc_ValueError);
  py::register_exception<NonConvergenceError>(m, "NonConvergenceError", PyExc_RuntimeError);
  py::register_exception<SamplerAbort>(m, "SamplerAbort", PyExc_RuntimeError);

  m.def("exp_integral_e", [](double s, double x) { return specfun::exp_integral_e(s, x); }, py::arg("s"), py::arg("x"));
  m.def("lower_inc_gamma", [](double s, double x) { return specfun::lower_inc_gamma(s, x); }, py::arg("s"), py::arg("x"));

  m.def(
      "glt_marginal_beta",
      [](double beta, double tau, double xi) {
        GltMarginalParams p;
        p.tau = tau;
        p.xi = xi;
        const MarginalValue v = glt_marginal_beta_robust(beta, p);
        return v.spike ? std::numeric_limits<double>::infinity() : v.value;
      },
      py::arg("beta"), py::arg("tau"), py::arg("xi"), "Marginal density of beta; +inf at 0.");
  m.def(
      "hs_marginal_beta",
      [](double beta, double tau) {
        const MarginalValue v = hs_marginal_beta(beta, tau);
        return v.spike ? std::numeric_limits<double>::infinity() : v.value;
      },
      py::arg("beta"), py::arg("tau"));
  m.def("glt_kappa_pdf", &glt_kappa_pdf, py::arg("kappa"), py::arg("tau"), py::arg("xi"));
  m.def("hs_kappa_pdf", &hs_kappa_pdf, py::arg("kappa"), py::arg("tau"));

  m.def("hill_estimates", &hill_estimates, py::arg("lambdas"), "Hill estimates for k = 2..p.");
  m.def(
      "calibrated_mu",
      [](const std::vector<double>& v, int k_lo, int k_hi) {
        if (k_lo == 0 && k_hi == 0) return calibrated_mu(v);
        return calibrated_mu(v, HillWindow{k_lo, k_hi});
      },
      py::arg("lambdas"), py::arg("k_lo") = 0, py::arg("k_hi") = 0);

  m.def(
      "simulate",
      [](int n, int p, int q, double rho, double snr, std::uint64_t seed) {
        Rng rng(seed, 0);
        const SimResult r = simulate(SimEnv{n, p, q, rho, snr}, rng);
        py::dict d;
        d["X"] = r.data.X;
        d["y"] = r.data.y;
        d["truth"] = r.truth;
        d["sigma0"] = r.sigma0;
        return d;
      },
      py::arg("n") = 100, py::arg("p") = 500, py::arg("q") = 5, py::arg("rho") = 0.0, py::arg("snr") = 5.0,
      py::arg("seed") = 1);

  m.def(
      "fit",
      [](const Eigen::VectorXd& y, std::optional<Eigen::MatrixXd> X, const std::string& prior, int burn, int keep,
         int thin, std::uint64_t seed, double rho2) {
        const RegressionData data = X ? RegressionData::linear(*X, y) : RegressionData::normal_means(y);
        const ChainConfig cfg = make_config(burn, keep, thin, seed, rho2);
        ChainOutput out;
        {
          py::gil_scoped_release release;
          if (prior == "glt") {
            out = run_chain(data, cfg);
          } else if (prior == "horseshoe" || prior == "horseshoe-truncated") {
            out = run_hs_chain(data, cfg, prior == "horseshoe-truncated");
          } else {
            throw DataError("unknown prior " + prior);
          }
        }
        return chain_dict(out);
      },
      py::arg("y"), py::arg("X") = py::none(), py::arg("prior") = "glt", py::arg("burn") = 10000,
      py::arg("keep") = 10000, py::arg("thin") = 100, py::arg("seed") = 1, py::arg("rho2") = 0.001,
      "MCMC fit; X=None gives the normal-means model. Returns a dict of draws.");
}
