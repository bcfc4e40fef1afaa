#pragma once

// Registry of verification suites. Each suite maps to one statement of the
// underlying geometry and evaluates a residual at one sampled point.

#include <functional>
#include <string>
#include <vector>

#include "lcklab/run_config.hpp"
#include "lcklab/sampling.hpp"

namespace lcklab {

enum class ToleranceKind {
  Analytic,          // factor * tol_analytic
  FiniteDifference,  // factor * tol_fd
  Exact,             // 0: integer mismatches or witnessed bounds
};

struct SuiteInfo {
  std::string name;
  std::string anchor;
  ToleranceKind kind = ToleranceKind::Analytic;
  double factor = 1.0;
  std::vector<ModelKind> supported;
  /// Models on which "all" selects the suite.
  std::vector<ModelKind> expected;

  double tolerance(const RunConfig& cfg) const;
  bool supports(ModelKind m) const;
  bool expected_on(ModelKind m) const;
};

const std::vector<SuiteInfo>& suite_catalogue();
/// nullptr when unknown.
const SuiteInfo* find_suite(const std::string& name);

/// Expected on cfg.model and cfg.n is large enough.
bool suite_applicable(const SuiteInfo& suite, const RunConfig& cfg);

/// Residual of `suite` at the point drawn from `rng`. May throw.
double evaluate_suite_point(const SuiteInfo& suite, const RunConfig& cfg, Rng& rng);

}  // namespace lcklab
