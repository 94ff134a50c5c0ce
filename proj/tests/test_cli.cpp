#include <doctest.h>
#include <sys/wait.h>

#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "app/io.hpp"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

int run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + std::string(GLT_BINARY) + " " + args + " >/dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("glt-cli-test-" + std::to_string(::getpid())) / name;
  fs::remove_all(p);
  fs::create_directories(p.parent_path());
  return p;
}

std::string first_line(const fs::path& p) {
  std::ifstream in(p);
  std::string s;
  std::getline(in, s);
  return s;
}

const char* kShortChain = " --burn 100 --keep 200 --thin 10 ";

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("simulate, fit and replay") {
    const fs::path sim = scratch("sim");
    REQUIRE(run("simulate --n 20 --p 30 --q 2 --seed 4 --out-dir " + sim.string()) == 0);
    for (const char* f : {"y.csv", "X.csv", "truth.csv", "meta.json", "manifest.json"}) CHECK(fs::exists(sim / f));
    CHECK(first_line(sim / "y.csv") == "y");

    const fs::path fit = scratch("fit");
    REQUIRE(run("fit --y " + (sim / "y.csv").string() + " --X " + (sim / "X.csv").string() + kShortChain +
                "--seed 2 --out-dir " + fit.string()) == 0);
    CHECK(first_line(fit / "draws.csv").rfind("draw,sigma2,tau,xi,log_lik,beta_1,", 0) == 0);
    const auto manifest = nlohmann::json::parse(glt::app::read_text(fit / "manifest.json"));
    CHECK(manifest["subcommand"] == "fit");
    CHECK(manifest["inputs"].contains("X"));
    CHECK(manifest["outputs"].contains("draws.csv"));

    const fs::path again = scratch("fit-again");
    CHECK(run("replay " + (fit / "manifest.json").string() + " --out-dir " + again.string()) == 0);
    CHECK(glt::app::sha256_file(again / "draws.csv") == glt::app::sha256_file(fit / "draws.csv"));

    // a manifest also works as a config; explicit flags win
    const fs::path cfg = scratch("fit-cfg");
    REQUIRE(run("fit --config " + (fit / "manifest.json").string() + " --seed 3 --out-dir " + cfg.string()) == 0);
    const auto m2 = nlohmann::json::parse(glt::app::read_text(cfg / "manifest.json"));
    CHECK(m2["flags"]["seed"] == 3);
    CHECK(m2["flags"]["burn"] == 100);
  }

  TEST_CASE("identity design writes shrinkage pairs") {
    const fs::path dir = scratch("nm");
    fs::create_directories(dir);
    glt::app::write_text(dir / "y.csv", "y\n5\n0.1\n-0.3\n-6\n0.2\n0.05\n");
    REQUIRE(run("fit --identity-design --prior horseshoe --y " + (dir / "y.csv").string() + kShortChain +
                "--out-dir " + (dir / "out").string()) == 0);
    CHECK(first_line(dir / "out" / "shrinkage.csv") == "y,beta_hat,beta_draw_mean");
    CHECK(first_line(dir / "out" / "draws.csv").rfind("draw,sigma2,tau,log_lik,", 0) == 0);
  }

  TEST_CASE("input errors exit with 2") {
    const fs::path dir = scratch("bad");
    fs::create_directories(dir);
    glt::app::write_text(dir / "y.csv", "y\n1\nfoo\n");
    CHECK(run("fit --identity-design --y " + (dir / "y.csv").string() + " --out-dir " + (dir / "o").string()) == 2);
    CHECK(run("fit --identity-design --y " + (dir / "missing.csv").string()) == 2);
    CHECK(run("fit --prior bogus") == 2);
    CHECK(run("simulate --n 2 --out-dir " + (dir / "s").string()) == 2);
    CHECK(run("fit --y a.csv --identity-design --truncated-tau --prior glt") == 2);
    CHECK(run("density-eval --kind glt-beta --xi 0.4 --out-dir " + (dir / "d").string()) == 2);
    CHECK(run("nonsense") == 2);
    CHECK(run("--help") == 0);
  }

  TEST_CASE("density and hill tables") {
    const fs::path d = scratch("den");
    REQUIRE(run("density-eval --kind hs-kappa --tau 0.5 --points 11 --out-dir " + d.string()) == 0);
    CHECK(first_line(d / "table.csv") == "kappa,density,spike");
    const glt::app::Table t = glt::app::read_csv(d / "table.csv");
    CHECK(t.values.rows() == 11);

    const fs::path h = scratch("hill");
    fs::create_directories(h);
    std::ostringstream lam;
    lam << "lambda\n";
    for (int k = 1; k <= 100; ++k) lam << std::pow(k / 100.0, -1.5) << "\n";
    glt::app::write_text(h / "lambda.csv", lam.str());
    REQUIRE(run("hill-plot --lambda " + (h / "lambda.csv").string() + " --out-dir " + (h / "o").string()) == 0);
    CHECK(first_line(h / "o" / "hillplot.csv") == "k,xi_hat,in_window,window_mean");
    const auto s = nlohmann::json::parse(glt::app::read_text(h / "o" / "hill_summary.json"));
    CHECK(s["k_lo"] == 10);
    CHECK(s["k_hi"] == 90);
  }

  TEST_CASE("scenario output does not depend on the worker count") {
    const fs::path a = scratch("sc1");
    const fs::path b = scratch("sc2");
    const std::string args = "scenario 1 --replicates 2 --n 20 --p 30 --grid 1,3" + std::string(kShortChain) +
                             "--seed 5 --out-dir ";
    REQUIRE(run(args + a.string(), "GLT_THREADS=1") == 0);
    REQUIRE(run(args + b.string(), "GLT_THREADS=3") == 0);
    CHECK(glt::app::sha256_file(a / "replicates.csv") == glt::app::sha256_file(b / "replicates.csv"));
    CHECK(first_line(a / "medians.csv").rfind("q,prior,n_ok", 0) == 0);
    CHECK(run("replay " + (a / "manifest.json").string() + " --out-dir " + scratch("sc3").string()) == 0);
  }
}
