#include "lcklab/runner.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <thread>

#include "lcklab/models.hpp"
#include "lcklab/suites.hpp"

namespace lcklab {

std::string to_string(ModelKind m) {
  switch (m) {
    case ModelKind::Hopf: return "hopf";
    case ModelKind::Flat: return "flat";
    case ModelKind::Tricerri: return "tricerri";
    case ModelKind::SyntheticNull: return "synthetic-null";
  }
  return "unknown";
}

std::optional<ModelKind> parse_model(std::string_view name) {
  for (ModelKind m : {ModelKind::Hopf, ModelKind::Flat, ModelKind::Tricerri, ModelKind::SyntheticNull})
    if (name == to_string(m)) return m;
  return std::nullopt;
}

void validate(const RunConfig& cfg) {
  if (cfg.n < 1) throw UsageError("--n must be at least 1");
  if (cfg.s < 0 || cfg.s > cfg.n) throw UsageError("--s must lie in [0, n]");
  if (cfg.points < 1) throw UsageError("--points must be positive");
  if (cfg.threads < 1) throw UsageError("--threads must be positive");
  if (!(cfg.tol_analytic > 0.0) || !(cfg.tol_fd > 0.0)) throw UsageError("tolerances must be positive");
  switch (cfg.model) {
    case ModelKind::Hopf:
      if (cfg.n < 2 || cfg.s < 1 || cfg.s > cfg.n - 1) throw UsageError("hopf needs n >= 2 and 1 <= s <= n-1");
      if (!(cfg.lambda > 0.0 && cfg.lambda < 1.0)) throw UsageError("--lambda must lie in (0, 1)");
      break;
    case ModelKind::SyntheticNull:
      if (cfg.n < 2 || cfg.s < 1 || cfg.s > cfg.n - 1)
        throw UsageError("synthetic-null needs n >= 2 and 1 <= s <= n-1");
      break;
    case ModelKind::Tricerri:
    case ModelKind::Flat:
      break;
  }
}

bool VerificationReport::pass() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& r) { return r.pass; });
}

int VerificationReport::passed() const {
  return static_cast<int>(std::count_if(suites.begin(), suites.end(), [](const SuiteResult& r) { return r.pass; }));
}

std::vector<std::string> resolve_suites(const RunConfig& cfg) {
  validate(cfg);
  std::vector<std::string> out;
  auto add = [&out](const std::string& name) {
    if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
  };
  for (const std::string& req : cfg.suites) {
    if (req == "all") {
      for (const SuiteInfo& s : suite_catalogue())
        if (suite_applicable(s, cfg)) add(s.name);
      continue;
    }
    const SuiteInfo* s = find_suite(req);
    if (!s) throw UsageError("unknown suite '" + req + "'");
    if (!s->supports(cfg.model)) throw UsageError("suite '" + req + "' does not support model " + to_string(cfg.model));
    add(req);
  }
  if (out.empty()) throw UsageError("no suites selected");
  return out;
}

namespace {

struct PointOutcome {
  double residual = 0.0;
  std::string error;
};

SuiteResult run_suite(const SuiteInfo& suite, const RunConfig& cfg) {
  std::vector<PointOutcome> outcomes(static_cast<std::size_t>(cfg.points));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < cfg.points; i = next++) {
      PointOutcome& o = outcomes[static_cast<std::size_t>(i)];
      try {
        Rng rng(derive_seed(cfg.seed, suite.name, static_cast<std::uint64_t>(i)));
        o.residual = evaluate_suite_point(suite, cfg, rng);
      } catch (const std::exception& e) {
        o.error = fmt::format("point {}: {}", i, e.what());
      }
    }
  };
  const int nthreads = std::min(cfg.threads, cfg.points);
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  }

  SuiteResult r;
  r.name = suite.name;
  r.anchor = suite.anchor;
  r.points = cfg.points;
  r.tolerance = suite.tolerance(cfg);
  bool finite = true;
  for (const PointOutcome& o : outcomes) {
    if (!o.error.empty()) {
      if (r.error.empty()) r.error = o.error;
      continue;
    }
    if (!std::isfinite(o.residual)) {
      finite = false;
      continue;
    }
    r.max_residual = std::max(r.max_residual, o.residual);
  }
  if (!finite) r.max_residual = std::numeric_limits<double>::quiet_NaN();
  r.pass = r.error.empty() && finite && r.max_residual <= r.tolerance;
  return r;
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20)
          out += fmt::format("\\u{:04x}", static_cast<int>(ch));
        else
          out += ch;
    }
  }
  return out;
}

std::string json_number(double x) { return std::isfinite(x) ? fmt::format("{:.17g}", x) : "null"; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

VerificationReport run(const RunConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.config = cfg;
  rep.suite_names = resolve_suites(cfg);
  for (const std::string& name : rep.suite_names) rep.suites.push_back(run_suite(*find_suite(name), cfg));
  rep.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

std::string to_json(const VerificationReport& report) {
  const RunConfig& c = report.config;
  std::string out = "{\n  \"schema\": 1,\n  \"config\": {\n";
  out += fmt::format("    \"model\": \"{}\",\n    \"n\": {},\n    \"s\": {},\n", to_string(c.model), c.n, c.s);
  if (c.model == ModelKind::Hopf) out += fmt::format("    \"lambda\": {},\n", json_number(c.lambda));
  out += fmt::format("    \"points\": {},\n    \"tol_analytic\": {},\n    \"tol_fd\": {},\n    \"seed\": {},\n", c.points,
                     json_number(c.tol_analytic), json_number(c.tol_fd), c.seed);
  out += "    \"suites\": [";
  for (std::size_t i = 0; i < report.suite_names.size(); ++i)
    out += fmt::format("{}\"{}\"", i ? ", " : "", json_escape(report.suite_names[i]));
  out += "]\n  },\n  \"suites\": [\n";
  for (std::size_t i = 0; i < report.suites.size(); ++i) {
    const SuiteResult& r = report.suites[i];
    out += fmt::format(
        "    {{\"name\": \"{}\", \"anchor\": \"{}\", \"points\": {}, \"max_residual\": {}, \"tolerance\": {}, "
        "\"pass\": {}",
        json_escape(r.name), json_escape(r.anchor), r.points, json_number(r.max_residual), json_number(r.tolerance),
        r.pass ? "true" : "false");
    if (!r.error.empty()) out += fmt::format(", \"error\": \"{}\"", json_escape(r.error));
    out += i + 1 < report.suites.size() ? "},\n" : "}\n";
  }
  out += fmt::format("  ],\n  \"summary\": {{\"suites\": {}, \"passed\": {}, \"pass\": {}}}", report.suites.size(),
                     report.passed(), report.pass() ? "true" : "false");
  if (c.timing) out += fmt::format(",\n  \"wall_time_s\": {}", json_number(report.wall_time_s));
  out += "\n}\n";
  return out;
}

std::string to_csv(const VerificationReport& report) {
  std::string out = "name,anchor,points,max_residual,tolerance,pass,error\n";
  for (const SuiteResult& r : report.suites) {
    out += fmt::format("{},{},{},{},{},{},{}\n", csv_field(r.name), csv_field(r.anchor), r.points,
                       std::isfinite(r.max_residual) ? fmt::format("{:.17g}", r.max_residual) : "nan",
                       fmt::format("{:.17g}", r.tolerance), r.pass ? "true" : "false", csv_field(r.error));
  }
  return out;
}

std::string list_suites_text() {
  const RunConfig defaults;
  std::string out;
  for (const SuiteInfo& s : suite_catalogue()) {
    std::string models;
    for (ModelKind m : s.supported) models += (models.empty() ? "" : ",") + to_string(m);
    out += fmt::format("{:<28} {:<60} tol={:<8g} models={}\n", s.name, s.anchor, s.tolerance(defaults), models);
  }
  return out;
}

}  // namespace lcklab
