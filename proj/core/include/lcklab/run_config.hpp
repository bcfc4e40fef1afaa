#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lcklab/types.hpp"

namespace lcklab {

enum class ModelKind { Hopf, Flat, Tricerri, SyntheticNull };

std::string to_string(ModelKind m);
std::optional<ModelKind> parse_model(std::string_view name);

struct RunConfig {
  ModelKind model = ModelKind::Hopf;
  int n = 2;
  int s = 1;
  double lambda = 0.5;
  int points = 100;
  double tol_analytic = 1e-9;
  double tol_fd = 1e-6;
  std::uint64_t seed = 1;
  std::vector<std::string> suites{"all"};
  int threads = 1;
  /// Adds wall time to the report (breaks byte-identical output).
  bool timing = false;
};

/// Invalid configuration or unknown suite; the CLI maps it to exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Throws UsageError.
void validate(const RunConfig& cfg);

}  // namespace lcklab
