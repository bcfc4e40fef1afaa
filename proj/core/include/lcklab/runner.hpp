#pragma once

#include <string>
#include <vector>

#include "lcklab/run_config.hpp"

namespace lcklab {

struct SuiteResult {
  std::string name;
  std::string anchor;
  int points = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string error;  // first per-point error, by point index
};

struct VerificationReport {
  RunConfig config;
  std::vector<std::string> suite_names;
  std::vector<SuiteResult> suites;
  double wall_time_s = 0.0;

  bool pass() const;
  int passed() const;
};

/// Suite names selected by cfg.suites ("all" expands to the suites expected
/// to hold on cfg.model). Throws UsageError.
std::vector<std::string> resolve_suites(const RunConfig& cfg);

/// Runs every selected suite over cfg.points samples, in parallel over points.
VerificationReport run(const RunConfig& cfg);

/// Schema-1 JSON, residuals with 17 significant digits.
std::string to_json(const VerificationReport& report);
std::string to_csv(const VerificationReport& report);
/// name, anchor, default tolerance per registered suite.
std::string list_suites_text();

}  // namespace lcklab
