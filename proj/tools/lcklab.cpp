// lcklab: run verification suites against a model and emit a report.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lcklab/runner.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification runner for locally conformal Kaehler models"};
  lcklab::RunConfig cfg;
  std::string model = "hopf";
  std::string suites = "all";
  std::string out_path;
  std::string format = "json";
  bool list = false;
  bool seed_given = false;

  app.add_option("--model", model, "hopf | flat | tricerri | synthetic-null")->capture_default_str();
  app.add_option("--n", cfg.n, "complex dimension")->capture_default_str();
  app.add_option("--s", cfg.s, "complex index")->capture_default_str();
  app.add_option("--lambda", cfg.lambda, "Hopf contraction, 0 < lambda < 1")->capture_default_str();
  app.add_option("--points", cfg.points, "sample points per suite")->capture_default_str();
  app.add_option("--tol-analytic", cfg.tol_analytic, "analytic-path tolerance")->capture_default_str();
  app.add_option("--tol-fd", cfg.tol_fd, "finite-difference tolerance")->capture_default_str();
  auto* seed_opt = app.add_option("--seed", cfg.seed, "RNG seed (falls back to LCKLAB_SEED)");
  app.add_option("--suites", suites, "comma-separated suite names, or all")->capture_default_str();
  app.add_option("--threads", cfg.threads, "worker threads")->capture_default_str();
  app.add_option("--out", out_path, "report file (default stdout)");
  app.add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  app.add_flag("--list-suites", list, "print the suite catalogue and exit");
  app.add_flag("--timing", cfg.timing, "include wall time in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }
  seed_given = seed_opt->count() > 0;

  if (list) {
    std::cout << lcklab::list_suites_text();
    return kExitPass;
  }

  try {
    const auto kind = lcklab::parse_model(model);
    if (!kind) throw lcklab::UsageError("unknown model '" + model + "'");
    cfg.model = *kind;
    cfg.suites = split_commas(suites);
    if (!seed_given) {
      if (const char* env = std::getenv("LCKLAB_SEED")) {
        try {
          cfg.seed = std::stoull(env);
        } catch (const std::exception&) {
          throw lcklab::UsageError("LCKLAB_SEED is not an unsigned integer");
        }
      }
    }
    const lcklab::VerificationReport report = lcklab::run(cfg);
    const std::string text = format == "csv" ? lcklab::to_csv(report) : lcklab::to_json(report);
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(out_path, std::ios::binary);
      if (!f) throw lcklab::UsageError("cannot open '" + out_path + "'");
      f << text;
    }
    return report.pass() ? kExitPass : kExitFail;
  } catch (const lcklab::UsageError& e) {
    std::cerr << "lcklab: " << e.what() << "\n";
    return kExitUsage;
  }
}
