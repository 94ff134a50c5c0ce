// glt: fit, simulate and inspect generalized-lognormal-tail shrinkage models.
#include <CLI11.hpp>
#include <cstring>
#include <iostream>
#include <string>

#include "app/commands.hpp"
#include "app/io.hpp"
#include "glt/error.hpp"

namespace {

constexpr int kExitInput = 2;
constexpr int kExitSampler = 3;

// --config is read before CLI11 runs so that explicit flags override file values.
std::string prescan_config(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--config" && i + 1 < argc) return argv[i + 1];
    if (a.rfind("--config=", 0) == 0) return a.substr(9);
  }
  return {};
}

std::string prescan_subcommand(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    if (argv[i][0] != '-') return argv[i];
  }
  return {};
}

template <class T>
void load_config(const std::string& path, T& opts) {
  if (path.empty()) return;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(glt::app::read_text(path));
  } catch (const nlohmann::json::exception& e) {
    throw glt::DataError("config " + path + ": " + e.what());
  }
  // A manifest can be used directly as a config file.
  if (j.contains("flags") && j.contains("subcommand")) j = j["flags"];
  j.get_to(opts);
}

}  // namespace

int main(int argc, char** argv) {
  using namespace glt::app;
  FitOptions fit;
  SimulateOptions sim;
  ScenarioOptions sc;
  DensityOptions den;
  HillOptions hill;
  std::string replay_manifest_path, replay_out;
  std::string config;

  CLI::App app{"Shrinkage regression with the generalized-lognormal-tail (GLT) and horseshoe priors"};
  app.set_version_flag("--version", GLT_VERSION);
  app.require_subcommand(1);

  try {
    const std::string cfg = prescan_config(argc, argv);
    const std::string sub = prescan_subcommand(argc, argv);
    if (sub == "fit") load_config(cfg, fit);
    if (sub == "simulate") load_config(cfg, sim);
    if (sub == "scenario") load_config(cfg, sc);
    if (sub == "density-eval") load_config(cfg, den);
    if (sub == "hill-plot") load_config(cfg, hill);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }

  auto add_config = [&](CLI::App* s) { s->add_option("--config", config, "JSON file with option values; flags override it"); };
  auto add_chain = [](CLI::App* s, int& burn, int& keep, int& thin, std::uint64_t& seed, double& rho2) {
    s->add_option("--burn", burn, "burn-in iterations")->capture_default_str()->check(CLI::NonNegativeNumber);
    s->add_option("--keep", keep, "post burn-in iterations")->capture_default_str()->check(CLI::PositiveNumber);
    s->add_option("--thin", thin, "store every thin-th iteration")->capture_default_str()->check(CLI::PositiveNumber);
    s->add_option("--seed", seed, "random seed")->capture_default_str();
    s->add_option("--rho2", rho2, "variance of the log-xi prior")->capture_default_str()->check(CLI::PositiveNumber);
  };

  auto* f = app.add_subcommand("fit", "fit a prior to y (and X) by MCMC");
  add_config(f);
  f->add_option("--prior", fit.prior, "glt | horseshoe | horseshoe-truncated")
      ->capture_default_str()
      ->check(CLI::IsMember({"glt", "horseshoe", "horseshoe-truncated"}));
  f->add_option("--y", fit.y, "response CSV (one column)");
  f->add_option("--X", fit.X, "design CSV (n rows, p columns)");
  f->add_flag("--identity-design", fit.identity_design, "normal-means model: X = I");
  add_chain(f, fit.burn, fit.keep, fit.thin, fit.seed, fit.rho2);
  f->add_flag("--truncated-tau", fit.truncated_tau, "horseshoe with tau restricted to (1/p, inf)");
  f->add_option("--out-dir", fit.out_dir)->capture_default_str();

  auto* s = app.add_subcommand("simulate", "draw a synthetic regression data set");
  add_config(s);
  s->add_option("--n", sim.n)->capture_default_str();
  s->add_option("--p", sim.p)->capture_default_str();
  s->add_option("--q", sim.q, "number of unit signals")->capture_default_str();
  s->add_option("--rho", sim.rho, "equicorrelation of the design")->capture_default_str();
  s->add_option("--snr", sim.snr)->capture_default_str();
  s->add_option("--seed", sim.seed)->capture_default_str();
  s->add_option("--out-dir", sim.out_dir)->capture_default_str();

  auto* c = app.add_subcommand("scenario", "replicated simulation study over a grid");
  add_config(c);
  c->add_option("scenario", sc.scenario, "1 (sparsity), 2 (correlation) or 3 (signal-to-noise)")
      ->check(CLI::Range(1, 3));
  c->add_option("--replicates", sc.replicates)->capture_default_str();
  c->add_option("--n", sc.n)->capture_default_str();
  c->add_option("--p", sc.p)->capture_default_str();
  c->add_option("--q", sc.q)->capture_default_str();
  c->add_option("--rho", sc.rho)->capture_default_str();
  c->add_option("--snr", sc.snr)->capture_default_str();
  add_chain(c, sc.burn, sc.keep, sc.thin, sc.seed, sc.rho2);
  c->add_option("--priors", sc.priors, "priors to compare")->delimiter(',')->capture_default_str();
  c->add_option("--grid", sc.grid, "override the grid values")->delimiter(',');
  c->add_option("--out-dir", sc.out_dir)->capture_default_str();

  auto* d = app.add_subcommand("density-eval", "tabulate a marginal density");
  add_config(d);
  d->add_option("--kind", den.kind, "glt-beta | glt-kappa | hs-beta | hs-kappa")
      ->capture_default_str()
      ->check(CLI::IsMember({"glt-beta", "glt-kappa", "hs-beta", "hs-kappa"}));
  d->add_option("--tau", den.tau)->capture_default_str();
  d->add_option("--xi", den.xi)->capture_default_str();
  d->add_option("--from", den.from);
  d->add_option("--to", den.to);
  d->add_option("--points", den.points)->capture_default_str();
  d->add_option("--out-dir", den.out_dir)->capture_default_str();

  auto* h = app.add_subcommand("hill-plot", "Hill estimates of the tail index of lambda");
  add_config(h);
  h->add_option("--lambda", hill.lambda, "CSV of positive values (one column)");
  h->add_option("--k-lo", hill.k_lo, "window start (default max(2, p/10))");
  h->add_option("--k-hi", hill.k_hi, "window end (default 9p/10)");
  h->add_option("--out-dir", hill.out_dir)->capture_default_str();

  auto* r = app.add_subcommand("replay", "re-run a manifest and compare outputs");
  r->add_option("manifest", replay_manifest_path)->required();
  r->add_option("--out-dir", replay_out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;
  }

  try {
    if (f->parsed()) run_fit(fit);
    if (s->parsed()) run_simulate(sim);
    if (c->parsed()) run_scenario(sc);
    if (d->parsed()) run_density(den);
    if (h->parsed()) run_hill(hill);
    if (r->parsed()) {
      std::string report;
      const bool same = replay_manifest(replay_manifest_path, replay_out, report);
      std::cout << report << (same ? "replay: identical\n" : "replay: outputs differ\n");
      return same ? 0 : kExitSampler;
    }
  } catch (const glt::DataError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const glt::DomainError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "sampler failure: " << e.what() << '\n';
    return kExitSampler;
  }
  return 0;
}
