#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

namespace glt::app {

// Option structs double as the config-file / manifest schema: JSON keys are the
// long flag names with '-' replaced by '_'.

struct FitOptions {
  std::string prior = "glt";  // glt | horseshoe | horseshoe-truncated
  std::string y;
  std::string X;
  bool identity_design = false;
  int burn = 10000;
  int keep = 10000;
  int thin = 100;
  std::uint64_t seed = 1;
  double rho2 = 0.001;
  bool truncated_tau = false;
  std::string out_dir = "glt-fit";
};

struct SimulateOptions {
  int n = 100;
  int p = 500;
  int q = 5;
  double rho = 0.0;
  double snr = 5.0;
  std::uint64_t seed = 1;
  std::string out_dir = "glt-sim";
};

struct ScenarioOptions {
  int scenario = 1;
  int replicates = 10;
  std::uint64_t seed = 1;
  int n = 100;
  int p = 500;
  int q = 5;
  double rho = 0.0;
  double snr = 5.0;
  int burn = 10000;
  int keep = 10000;
  int thin = 100;
  double rho2 = 0.001;
  std::vector<std::string> priors{"glt", "horseshoe"};
  std::vector<double> grid;  // empty: the scenario's default grid
  std::string out_dir = "glt-scenario";
};

struct DensityOptions {
  std::string kind = "glt-beta";  // glt-beta | glt-kappa | hs-beta | hs-kappa
  double tau = 1.0;
  double xi = 1.0;
  double from = 0.0;  // both 0: kind-specific default grid
  double to = 0.0;
  int points = 401;
  std::string out_dir = "glt-density";
};

struct HillOptions {
  std::string lambda;
  int k_lo = 0;  // 0: default window
  int k_hi = 0;
  std::string out_dir = "glt-hill";
};

void to_json(nlohmann::json& j, const FitOptions& o);
void from_json(const nlohmann::json& j, FitOptions& o);
void to_json(nlohmann::json& j, const SimulateOptions& o);
void from_json(const nlohmann::json& j, SimulateOptions& o);
void to_json(nlohmann::json& j, const ScenarioOptions& o);
void from_json(const nlohmann::json& j, ScenarioOptions& o);
void to_json(nlohmann::json& j, const DensityOptions& o);
void from_json(const nlohmann::json& j, DensityOptions& o);
void to_json(nlohmann::json& j, const HillOptions& o);
void from_json(const nlohmann::json& j, HillOptions& o);

/// Resolved prior name ("horseshoe" + truncated_tau becomes "horseshoe-truncated").
std::string resolved_prior(const FitOptions& o);

// Each command writes its outputs plus manifest.json into out_dir.
void run_fit(const FitOptions& o);
void run_simulate(const SimulateOptions& o);
void run_density(const DensityOptions& o);
void run_hill(const HillOptions& o);

/// One (grid point, replicate, prior) fit in a scenario run.
struct ReplicateRow {
  double grid_value = 0.0;
  int replicate = 0;
  std::string prior;
  bool ok = false;
  std::string error;
  double mse = 0.0;
  double mse_s = 0.0;
  double mse_n = 0.0;
  double tau_mean = 0.0;
  double xi_mean = 0.0;
  bool collapsed = false;
  double seconds = 0.0;  // wall time of the fit; not written to disk (outputs stay reproducible)
};

struct MedianRow {
  double grid_value = 0.0;
  std::string prior;
  int n_ok = 0;
  int n_failed = 0;
  double mse = 0.0;
  double mse_s = 0.0;
  double mse_n = 0.0;
  double tau = 0.0;
  double xi = 0.0;
  int collapsed = 0;
};

struct ScenarioReport {
  std::string grid_name;  // q, rho or snr
  std::vector<double> grid;
  std::vector<ReplicateRow> rows;  // sorted by (grid index, replicate, prior order)
  std::vector<MedianRow> medians;
  double failure_fraction = 0.0;
};

/// The default grid for scenario 1, 2 or 3 given the base environment.
std::vector<double> default_scenario_grid(int scenario, int p);

/// Runs every replicate (in parallel up to `threads` workers; results do not
/// depend on the worker count) and aggregates medians. `progress` is called after
/// each finished fit.
ScenarioReport run_scenario_fits(const ScenarioOptions& o, int threads,
                                 const std::function<void(const ReplicateRow&)>& progress = {});

/// run_scenario_fits plus replicates.csv, medians.csv and manifest.json. Throws
/// SamplerAbort if more than 20% of fits failed.
ScenarioReport run_scenario(const ScenarioOptions& o);

/// Worker count from GLT_THREADS, else the hardware concurrency (at least 1).
int worker_count();

/// Re-runs the command recorded in a manifest into out_dir and compares output
/// digests. Returns true when every recorded output is reproduced bit-exactly.
bool replay_manifest(const std::filesystem::path& manifest, const std::filesystem::path& out_dir, std::string& report);

}  // namespace glt::app
