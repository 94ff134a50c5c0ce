#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <limits>
#include <map>
#include <mutex>
#include <thread>

#include "glt/analysis.hpp"
#include "glt/datagen.hpp"
#include "glt/densities.hpp"
#include "glt/error.hpp"
#include "glt/glt_sampler.hpp"
#include "glt/hill.hpp"
#include "glt/hs_sampler.hpp"
#include "io.hpp"

#ifndef GLT_VERSION
#define GLT_VERSION "0.0.0"
#endif

namespace fs = std::filesystem;
using nlohmann::json;

namespace glt::app {

// ---------------------------------------------------------------------------
// JSON schema of the option structs

#define GLT_GET(field) \
  if (j.contains(#field)) j.at(#field).get_to(o.field)

void to_json(json& j, const FitOptions& o) {
  j = json{{"prior", o.prior}, {"y", o.y},       {"X", o.X},       {"identity_design", o.identity_design},
           {"burn", o.burn},   {"keep", o.keep}, {"thin", o.thin}, {"seed", o.seed},
           {"rho2", o.rho2},   {"truncated_tau", o.truncated_tau}, {"out_dir", o.out_dir}};
}
void from_json(const json& j, FitOptions& o) {
  GLT_GET(prior); GLT_GET(y); GLT_GET(X); GLT_GET(identity_design); GLT_GET(burn); GLT_GET(keep);
  GLT_GET(thin); GLT_GET(seed); GLT_GET(rho2); GLT_GET(truncated_tau); GLT_GET(out_dir);
}

void to_json(json& j, const SimulateOptions& o) {
  j = json{{"n", o.n}, {"p", o.p}, {"q", o.q}, {"rho", o.rho}, {"snr", o.snr}, {"seed", o.seed}, {"out_dir", o.out_dir}};
}
void from_json(const json& j, SimulateOptions& o) {
  GLT_GET(n); GLT_GET(p); GLT_GET(q); GLT_GET(rho); GLT_GET(snr); GLT_GET(seed); GLT_GET(out_dir);
}

void to_json(json& j, const ScenarioOptions& o) {
  j = json{{"scenario", o.scenario}, {"replicates", o.replicates}, {"seed", o.seed}, {"n", o.n},
           {"p", o.p},               {"q", o.q},                   {"rho", o.rho},   {"snr", o.snr},
           {"burn", o.burn},         {"keep", o.keep},             {"thin", o.thin}, {"rho2", o.rho2},
           {"priors", o.priors},     {"grid", o.grid},             {"out_dir", o.out_dir}};
}
void from_json(const json& j, ScenarioOptions& o) {
  GLT_GET(scenario); GLT_GET(replicates); GLT_GET(seed); GLT_GET(n); GLT_GET(p); GLT_GET(q); GLT_GET(rho);
  GLT_GET(snr); GLT_GET(burn); GLT_GET(keep); GLT_GET(thin); GLT_GET(rho2); GLT_GET(priors); GLT_GET(grid);
  GLT_GET(out_dir);
}

void to_json(json& j, const DensityOptions& o) {
  j = json{{"kind", o.kind}, {"tau", o.tau},       {"xi", o.xi},          {"from", o.from},
           {"to", o.to},     {"points", o.points}, {"out_dir", o.out_dir}};
}
void from_json(const json& j, DensityOptions& o) {
  GLT_GET(kind); GLT_GET(tau); GLT_GET(xi); GLT_GET(from); GLT_GET(to); GLT_GET(points); GLT_GET(out_dir);
}

void to_json(json& j, const HillOptions& o) {
  j = json{{"lambda", o.lambda}, {"k_lo", o.k_lo}, {"k_hi", o.k_hi}, {"out_dir", o.out_dir}};
}
void from_json(const json& j, HillOptions& o) {
  GLT_GET(lambda); GLT_GET(k_lo); GLT_GET(k_hi); GLT_GET(out_dir);
}

#undef GLT_GET

// ---------------------------------------------------------------------------
// Manifest

namespace {

struct ManifestBuilder {
  json doc;
  fs::path dir;
  std::vector<std::string> outputs;

  ManifestBuilder(const std::string& subcommand, json flags, std::uint64_t seed, const fs::path& out_dir) : dir(out_dir) {
    doc["tool"] = "glt";
    doc["version"] = GLT_VERSION;
    doc["subcommand"] = subcommand;
    doc["seed"] = seed;
    doc["flags"] = std::move(flags);
    doc["inputs"] = json::object();
  }

  void input(const std::string& name, const std::string& path) {
    doc["inputs"][name] = {{"path", path}, {"sha256", sha256_file(path)}};
  }
  void output(const std::string& file) { outputs.push_back(file); }

  void write() {
    json outs = json::object();
    for (const auto& f : outputs) outs[f] = sha256_file(dir / f);
    doc["outputs"] = outs;
    write_text(dir / "manifest.json", doc.dump(2) + "\n");
  }
};

std::string absolute_path(const std::string& p) { return p.empty() ? p : fs::absolute(p).lexically_normal().string(); }

void prepare_dir(const std::string& d) {
  if (d.empty()) throw DataError("an output directory is required");
  fs::create_directories(d);
}

json vec_json(const Eigen::VectorXd& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(std::isfinite(v[i]) ? json(v[i]) : json(nullptr));
  return a;
}

json num_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json diagnostics_json(const ChainDiagnostics& d) {
  return json{{"iterations", d.iterations},
              {"ess_proposals", d.ess_proposals},
              {"ess_max_proposals", d.ess_max_proposals},
              {"ess_capped", d.ess_capped},
              {"lambda_degenerate", d.lambda_degenerate},
              {"tau_degenerate", d.tau_degenerate},
              {"sigma2_degenerate", d.sigma2_degenerate},
              {"factorization_failures", d.factorization_failures}};
}

ChainConfig chain_config(int burn, int keep, int thin, std::uint64_t seed, double rho2) {
  ChainConfig c;
  c.burn = burn;
  c.keep = keep;
  c.thin = thin;
  c.seed = seed;
  c.rho2 = rho2;
  c.validate();
  return c;
}

ChainOutput fit_prior(const std::string& prior, const RegressionData& data, const ChainConfig& c) {
  if (prior == "glt") return run_chain(data, c);
  if (prior == "horseshoe") return run_hs_chain(data, c, false);
  if (prior == "horseshoe-truncated") return run_hs_chain(data, c, true);
  throw DataError("unknown prior '" + prior + "' (expected glt, horseshoe or horseshoe-truncated)");
}

}  // namespace

std::string resolved_prior(const FitOptions& o) {
  if (o.truncated_tau) {
    if (o.prior == "glt") throw DataError("--truncated-tau applies only to the horseshoe prior");
    return "horseshoe-truncated";
  }
  return o.prior;
}

// ---------------------------------------------------------------------------
// fit

void run_fit(const FitOptions& opt) {
  FitOptions o = opt;
  o.y = absolute_path(o.y);
  o.X = absolute_path(o.X);
  const std::string prior = resolved_prior(o);
  if (o.y.empty()) throw DataError("fit: --y is required");
  if (!o.identity_design && o.X.empty()) throw DataError("fit: give --X or --identity-design");
  if (o.identity_design && !o.X.empty()) throw DataError("fit: --X and --identity-design are exclusive");

  const Eigen::VectorXd y = read_vector_csv(o.y);
  RegressionData data = o.identity_design ? RegressionData::normal_means(y)
                                          : RegressionData::linear(read_csv(o.X).values, y);
  const ChainConfig cfg = chain_config(o.burn, o.keep, o.thin, o.seed, o.rho2);
  if (cfg.draws() < kMinSummaryDraws) throw DataError("fit: keep/thin must give at least 20 stored draws");

  prepare_dir(o.out_dir);
  json flags = o;
  flags.erase("out_dir");
  ManifestBuilder manifest("fit", flags, o.seed, o.out_dir);
  manifest.input("y", o.y);
  if (!o.identity_design) manifest.input("X", o.X);

  const ChainOutput chain = fit_prior(prior, data, cfg);
  const PosteriorSummary s = summarize(chain);
  const int p = chain.p();
  const fs::path dir = o.out_dir;

  // draws.csv
  std::vector<std::string> header{"draw", "sigma2", "tau"};
  if (chain.has_xi()) header.push_back("xi");
  header.push_back("log_lik");
  for (int j = 1; j <= p; ++j) header.push_back("beta_" + std::to_string(j));
  for (int j = 1; j <= p; ++j) header.push_back("lambda_" + std::to_string(j));
  Eigen::MatrixXd draws(chain.draws(), static_cast<Eigen::Index>(header.size()));
  for (int i = 0; i < chain.draws(); ++i) {
    int c = 0;
    draws(i, c++) = i + 1;
    draws(i, c++) = chain.sigma2[i];
    draws(i, c++) = chain.tau[i];
    if (chain.has_xi()) draws(i, c++) = chain.xi[i];
    draws(i, c++) = chain.log_lik[i];
    draws.row(i).segment(c, p) = chain.beta.row(i);
    draws.row(i).segment(c + p, p) = chain.lambda.row(i);
  }
  write_csv(dir / "draws.csv", header, draws);
  manifest.output("draws.csv");

  // coefficients.csv
  Eigen::MatrixXd coef(p, chain.has_xi() ? 6 : 5);
  for (int j = 0; j < p; ++j) {
    coef(j, 0) = j + 1;
    coef(j, 1) = s.beta_mean[j];
    coef(j, 2) = s.beta_lower[j];
    coef(j, 3) = s.beta_upper[j];
    coef(j, 4) = s.cor_lambda_tau[j];
    if (chain.has_xi()) coef(j, 5) = s.cor_lambda_xi[j];
  }
  std::vector<std::string> coef_header{"index", "mean", "lower_2.5", "upper_97.5", "cor_lambda_tau"};
  if (chain.has_xi()) coef_header.push_back("cor_lambda_xi");
  write_csv(dir / "coefficients.csv", coef_header, coef);
  manifest.output("coefficients.csv");

  if (o.identity_design) {
    // beta_hat: conditional-mean average; beta_draw_mean: plain mean of the beta draws
    const Eigen::VectorXd rb = normal_means_posterior_mean(chain, y);
    const auto pairs = shrinkage_pairs(y, rb);
    const auto raw = shrinkage_pairs(y, s.beta_mean);
    Eigen::MatrixXd sp(static_cast<Eigen::Index>(pairs.size()), 3);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      sp.row(static_cast<Eigen::Index>(i)) << pairs[i].first, pairs[i].second, raw[i].second;
    }
    write_csv(dir / "shrinkage.csv", {"y", "beta_hat", "beta_draw_mean"}, sp);
    manifest.output("shrinkage.csv");
  }

  json top = json::array();
  for (const auto& r : rank_coefficients(s, std::min(p, 10))) {
    top.push_back({{"index", r.index}, {"mean", r.mean}, {"lower", r.lower}, {"upper", r.upper}, {"sign", r.sign}});
  }
  json summary{{"prior", chain.prior},
               {"n", data.n()},
               {"p", p},
               {"draws", chain.draws()},
               {"sigma2_mean", s.sigma2_mean},
               {"tau_mean", s.tau_mean},
               {"xi_mean", num_or_null(s.xi_mean)},
               {"collapsed", s.collapsed},
               {"degenerate_correlation", s.degenerate_correlation},
               {"beta_mean", vec_json(s.beta_mean)},
               {"beta_lower", vec_json(s.beta_lower)},
               {"beta_upper", vec_json(s.beta_upper)},
               {"top_coefficients", top},
               {"diagnostics", diagnostics_json(chain.diagnostics)}};
  write_text(dir / "summary.json", summary.dump(2) + "\n");
  manifest.output("summary.json");
  manifest.write();
}

// ---------------------------------------------------------------------------
// simulate

void run_simulate(const SimulateOptions& o) {
  SimEnv env{o.n, o.p, o.q, o.rho, o.snr};
  env.validate();
  prepare_dir(o.out_dir);
  json flags = o;
  flags.erase("out_dir");
  ManifestBuilder manifest("simulate", flags, o.seed, o.out_dir);
  Rng rng(o.seed, 0);
  const SimResult sim = simulate(env, rng);
  const fs::path dir = o.out_dir;
  write_vector_csv(dir / "y.csv", "y", sim.data.y);
  std::vector<std::string> xh;
  for (int j = 1; j <= o.p; ++j) xh.push_back("x" + std::to_string(j));
  write_csv(dir / "X.csv", xh, sim.data.X);
  write_vector_csv(dir / "truth.csv", "beta0", sim.truth);
  json meta{{"n", o.n}, {"p", o.p}, {"q", o.q}, {"rho", o.rho}, {"snr", o.snr}, {"sigma0", sim.sigma0}, {"seed", o.seed}};
  write_text(dir / "meta.json", meta.dump(2) + "\n");
  for (const char* f : {"y.csv", "X.csv", "truth.csv", "meta.json"}) manifest.output(f);
  manifest.write();
}

// ---------------------------------------------------------------------------
// density-eval

void run_density(const DensityOptions& o) {
  const bool kappa = o.kind == "glt-kappa" || o.kind == "hs-kappa";
  if (o.kind != "glt-beta" && o.kind != "hs-beta" && !kappa) {
    throw DataError("density-eval: unknown kind '" + o.kind + "'");
  }
  if (o.points < 2) throw DataError("density-eval: need at least 2 points");
  const bool default_grid = o.from == 0.0 && o.to == 0.0;
  if (!default_grid && !(o.to > o.from)) throw DataError("density-eval: need from < to");
  prepare_dir(o.out_dir);
  json flags = o;
  flags.erase("out_dir");
  ManifestBuilder manifest("density-eval", flags, 0, o.out_dir);

  GltMarginalParams gp;
  gp.tau = o.tau;
  gp.xi = o.xi;
  if (o.kind.rfind("glt", 0) == 0) gp.validate();

  Eigen::MatrixXd table(o.points, 3);
  for (int i = 0; i < o.points; ++i) {
    double x;
    if (default_grid) {
      x = kappa ? (i + 0.5) / o.points : -8.0 * (1.0 - i / (o.points - 1.0)) + 8.0 * (i / (o.points - 1.0));
    } else {
      const double t = i / (o.points - 1.0);
      x = o.from * (1.0 - t) + o.to * t;
    }
    MarginalValue v;
    if (o.kind == "glt-beta") {
      v = glt_marginal_beta_robust(x, gp);
    } else if (o.kind == "hs-beta") {
      v = hs_marginal_beta(x, o.tau);
    } else if (o.kind == "glt-kappa") {
      v.value = glt_kappa_pdf(x, o.tau, o.xi);
    } else {
      v.value = hs_kappa_pdf(x, o.tau);
    }
    table.row(i) << x, v.value, v.spike ? 1.0 : 0.0;
  }
  const std::string xname = kappa ? "kappa" : "beta";
  write_csv(fs::path(o.out_dir) / "table.csv", {xname, "density", "spike"}, table);
  manifest.output("table.csv");
  manifest.write();
}

// ---------------------------------------------------------------------------
// hill-plot

void run_hill(const HillOptions& opt) {
  HillOptions o = opt;
  o.lambda = absolute_path(o.lambda);
  if (o.lambda.empty()) throw DataError("hill-plot: --lambda is required");
  const Eigen::VectorXd lam = read_vector_csv(o.lambda);
  std::vector<double> v(lam.data(), lam.data() + lam.size());
  const int p = static_cast<int>(v.size());
  HillWindow w = HillWindow::default_for(p);
  if (o.k_lo > 0) w.k_lo = o.k_lo;
  if (o.k_hi > 0) w.k_hi = o.k_hi;
  w.validate(p);
  const std::vector<double> est = hill_estimates(v);
  double sum = 0.0;
  for (int k = w.k_lo; k <= w.k_hi; ++k) sum += est[k - 2];
  const double window_mean = sum / (w.k_hi - w.k_lo + 1);

  prepare_dir(o.out_dir);
  json flags = o;
  flags.erase("out_dir");
  ManifestBuilder manifest("hill-plot", flags, 0, o.out_dir);
  manifest.input("lambda", o.lambda);
  Eigen::MatrixXd table(p - 1, 4);
  for (int k = 2; k <= p; ++k) {
    table.row(k - 2) << k, est[k - 2], (k >= w.k_lo && k <= w.k_hi) ? 1.0 : 0.0, window_mean;
  }
  const fs::path dir = o.out_dir;
  write_csv(dir / "hillplot.csv", {"k", "xi_hat", "in_window", "window_mean"}, table);
  json summary{{"p", p}, {"k_lo", w.k_lo}, {"k_hi", w.k_hi}, {"window_mean", window_mean},
               {"mu_hat", calibrated_mu(v, w)}};
  write_text(dir / "hill_summary.json", summary.dump(2) + "\n");
  manifest.output("hillplot.csv");
  manifest.output("hill_summary.json");
  manifest.write();
}

// ---------------------------------------------------------------------------
// scenario

std::vector<double> default_scenario_grid(int scenario, int p) {
  switch (scenario) {
    case 1:
      if (p == 500) return {1, 6, 11, 16, 22, 27, 32, 37, 43, 48};
      if (p == 1000) return {1, 11, 22, 32, 43, 53, 64, 74, 85, 95};
      {
        // sparsity 0.001 .. 0.1 in ten steps
        std::vector<double> g;
        for (int i = 0; i < 10; ++i) {
          const double s = 0.001 + i * (0.1 - 0.001) / 9.0;
          g.push_back(std::max(1.0, std::round(s * p)));
        }
        g.erase(std::unique(g.begin(), g.end()), g.end());
        return g;
      }
    case 2:
      return {0.0, 0.1, 0.2, 0.3, 0.4, 0.5};
    case 3:
      return {2, 4, 6, 8, 10};
    default:
      throw DataError("scenario must be 1, 2 or 3");
  }
}

int worker_count() {
  int n = static_cast<int>(std::thread::hardware_concurrency());
  if (const char* env = std::getenv("GLT_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) n = v;
  }
  return std::max(1, n);
}

namespace {

double median_of(std::vector<double> v) {
  if (v.empty()) return std::numeric_limits<double>::quiet_NaN();
  return quantile_linear(std::move(v), 0.5);
}

}  // namespace

ScenarioReport run_scenario_fits(const ScenarioOptions& o, int threads,
                                 const std::function<void(const ReplicateRow&)>& progress) {
  if (o.replicates < 1) throw DataError("scenario: replicates must be positive");
  if (o.priors.empty()) throw DataError("scenario: no priors given");
  for (const auto& pr : o.priors) {
    if (pr != "glt" && pr != "horseshoe" && pr != "horseshoe-truncated") throw DataError("scenario: unknown prior " + pr);
  }
  const ChainConfig base = chain_config(o.burn, o.keep, o.thin, o.seed, o.rho2);
  if (base.draws() < kMinSummaryDraws) throw DataError("scenario: keep/thin must give at least 20 stored draws");

  ScenarioReport rep;
  rep.grid_name = o.scenario == 1 ? "q" : (o.scenario == 2 ? "rho" : "snr");
  rep.grid = o.grid.empty() ? default_scenario_grid(o.scenario, o.p) : o.grid;
  if (o.scenario < 1 || o.scenario > 3) throw DataError("scenario must be 1, 2 or 3");

  const int np = static_cast<int>(o.priors.size());
  const int ng = static_cast<int>(rep.grid.size());
  const int total = ng * o.replicates * np;
  rep.rows.resize(total);

  auto env_for = [&](int gi) {
    SimEnv env{o.n, o.p, o.q, o.rho, o.snr};
    const double g = rep.grid[gi];
    if (o.scenario == 1) env.q = static_cast<int>(std::lround(g));
    if (o.scenario == 2) env.rho = g;
    if (o.scenario == 3) env.snr = g;
    env.validate();
    return env;
  };
  for (int gi = 0; gi < ng; ++gi) env_for(gi);  // validate grid before spending time

  std::atomic<int> next{0};
  std::mutex mu;
  auto worker = [&]() {
    for (;;) {
      const int task = next.fetch_add(1);
      if (task >= total) return;
      const int pi = task % np;
      const int r = (task / np) % o.replicates;
      const int gi = task / (np * o.replicates);
      ReplicateRow row;
      row.grid_value = rep.grid[gi];
      row.replicate = r + 1;
      row.prior = o.priors[pi];
      const auto t0 = std::chrono::steady_clock::now();
      try {
        const SimEnv env = env_for(gi);
        // Streams keyed by (master seed, grid index, replicate): independent of worker count.
        Rng data_rng = Rng(o.seed, 0).split(static_cast<std::uint64_t>(gi)).split(static_cast<std::uint64_t>(r));
        const SimResult sim = simulate(env, data_rng);
        ChainConfig cfg = base;
        cfg.seed = mix64(mix64(o.seed + 0x51ed27) ^ (static_cast<std::uint64_t>(gi) << 32 | static_cast<std::uint64_t>(r)));
        const ChainOutput chain = fit_prior(row.prior, sim.data, cfg);
        const PosteriorSummary s = summarize(chain);
        const MseMetrics m = mse_metrics(s.beta_mean, sim.truth, env.q);
        row.ok = true;
        row.mse = m.mse;
        row.mse_s = m.mse_signal;
        row.mse_n = m.mse_noise;
        row.tau_mean = s.tau_mean;
        row.xi_mean = s.xi_mean;
        row.collapsed = s.collapsed;
      } catch (const std::exception& e) {
        row.ok = false;
        row.error = e.what();
      }
      row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      rep.rows[task] = row;
      if (progress) {
        std::lock_guard<std::mutex> lock(mu);
        progress(row);
      }
    }
  };
  const int nw = std::max(1, std::min(threads, total));
  std::vector<std::thread> pool;
  for (int t = 1; t < nw; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  int failed = 0;
  for (int gi = 0; gi < ng; ++gi) {
    for (int pi = 0; pi < np; ++pi) {
      MedianRow m;
      m.grid_value = rep.grid[gi];
      m.prior = o.priors[pi];
      std::vector<double> mse, ms, mn, tau, xi;
      for (int r = 0; r < o.replicates; ++r) {
        const ReplicateRow& row = rep.rows[(gi * o.replicates + r) * np + pi];
        if (!row.ok) {
          ++m.n_failed;
          continue;
        }
        ++m.n_ok;
        mse.push_back(row.mse);
        ms.push_back(row.mse_s);
        mn.push_back(row.mse_n);
        tau.push_back(row.tau_mean);
        if (std::isfinite(row.xi_mean)) xi.push_back(row.xi_mean);
        m.collapsed += row.collapsed ? 1 : 0;
      }
      failed += m.n_failed;
      m.mse = median_of(mse);
      m.mse_s = median_of(ms);
      m.mse_n = median_of(mn);
      m.tau = median_of(tau);
      m.xi = median_of(xi);
      rep.medians.push_back(m);
    }
  }
  rep.failure_fraction = static_cast<double>(failed) / total;
  return rep;
}

ScenarioReport run_scenario(const ScenarioOptions& o) {
  prepare_dir(o.out_dir);
  const int threads = worker_count();
  ScenarioReport rep = run_scenario_fits(o, threads, [](const ReplicateRow& r) {
    std::cerr << "scenario: grid=" << r.grid_value << " replicate=" << r.replicate << " prior=" << r.prior
              << (r.ok ? "" : " FAILED: " + r.error) << '\n';
  });

  const fs::path dir = o.out_dir;
  json flags = o;
  flags.erase("out_dir");
  flags["grid"] = rep.grid;
  ManifestBuilder manifest("scenario", flags, o.seed, dir);
  manifest.doc["full_scale"] = o.replicates == 50 && o.burn == 10000 && o.keep == 10000 && o.thin == 100;
  manifest.doc["reduced_iterations"] = o.burn + o.keep < 20000;

  {
    std::string text = rep.grid_name + ",replicate,prior,ok,mse,mse_s,mse_n,tau_mean,xi_mean,collapsed\n";
    for (const auto& r : rep.rows) {
      text += format_double(r.grid_value) + "," + std::to_string(r.replicate) + "," + r.prior + "," +
              (r.ok ? "1" : "0") + "," + format_double(r.mse) + "," + format_double(r.mse_s) + "," +
              format_double(r.mse_n) + "," + format_double(r.tau_mean) + "," + format_double(r.xi_mean) + "," +
              (r.collapsed ? "1" : "0") + "\n";
    }
    write_text(dir / "replicates.csv", text);
  }
  {
    std::string text = rep.grid_name + ",prior,n_ok,n_failed,median_mse,median_mse_s,median_mse_n,median_tau,median_xi,collapsed\n";
    for (const auto& m : rep.medians) {
      text += format_double(m.grid_value) + "," + m.prior + "," + std::to_string(m.n_ok) + "," +
              std::to_string(m.n_failed) + "," + format_double(m.mse) + "," + format_double(m.mse_s) + "," +
              format_double(m.mse_n) + "," + format_double(m.tau) + "," + format_double(m.xi) + "," +
              std::to_string(m.collapsed) + "\n";
    }
    write_text(dir / "medians.csv", text);
  }
  manifest.output("replicates.csv");
  manifest.output("medians.csv");
  manifest.doc["failure_fraction"] = rep.failure_fraction;
  manifest.write();
  if (rep.failure_fraction > 0.2) {
    throw SamplerAbort("scenario: " + std::to_string(rep.failure_fraction * 100.0) + "% of fits failed");
  }
  return rep;
}

// ---------------------------------------------------------------------------
// replay

bool replay_manifest(const fs::path& manifest_path, const fs::path& out_dir, std::string& report) {
  const json m = json::parse(read_text(manifest_path));
  const std::string cmd = m.at("subcommand").get<std::string>();
  json flags = m.at("flags");
  flags["out_dir"] = out_dir.string();

  for (const auto& [name, info] : m.at("inputs").items()) {
    const std::string path = info.at("path").get<std::string>();
    if (sha256_file(path) != info.at("sha256").get<std::string>()) {
      throw DataError("replay: input '" + name + "' (" + path + ") no longer matches its recorded digest");
    }
  }

  if (cmd == "fit") {
    run_fit(flags.get<FitOptions>());
  } else if (cmd == "simulate") {
    run_simulate(flags.get<SimulateOptions>());
  } else if (cmd == "scenario") {
    run_scenario(flags.get<ScenarioOptions>());
  } else if (cmd == "density-eval") {
    run_density(flags.get<DensityOptions>());
  } else if (cmd == "hill-plot") {
    run_hill(flags.get<HillOptions>());
  } else {
    throw DataError("replay: unknown subcommand '" + cmd + "'");
  }

  bool same = true;
  for (const auto& [file, digest] : m.at("outputs").items()) {
    const std::string now = sha256_file(out_dir / file);
    const bool eq = now == digest.get<std::string>();
    same = same && eq;
    report += file + ": " + (eq ? "identical" : "DIFFERS") + "\n";
  }
  return same;
}

}  // namespace glt::app
