#pragma once

// Seeded samplers for domain points, tangent vectors and synthetic null data.

#include <cstdint>
#include <random>
#include <string_view>

#include "lcklab/charts.hpp"
#include "lcklab/models.hpp"

namespace lcklab {

std::uint64_t splitmix64(std::uint64_t x);
/// Independent stream seed for (run seed, suite name, point index).
std::uint64_t derive_seed(std::uint64_t seed, std::string_view stream, std::uint64_t index);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}
  double uniform(double lo = 0.0, double hi = 1.0) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  Complex complex_normal() { return {normal(), normal()}; }
  CVec complex_vector(int n);
  RVec real_vector(int n);

 private:
  std::mt19937_64 engine_;
};

/// True when every point z +- 10 h e_a (real coordinate directions) is in the domain.
bool stencil_safe(const MetricChart& chart, const CVec& z, const FdOptions& fd = {});

/// Off-cone point of the given region with |b| > margin |z|^2.
CVec sample_hopf_point(const HopfModel& model, Rng& rng, double margin = 0.05);
/// Point with b_{s,n}(z,z) = r^2.
CVec sample_pseudosphere(int n, int s, double r, Rng& rng, double margin = 0.05);
/// (w, z) with Im(w) in [0.5, 2].
CVec sample_tricerri_point(const TricerriModel& model, Rng& rng);
CVec sample_flat_point(int n, Rng& rng);

TangentVector random_real_vector(int n, Rng& rng);
/// Random nonzero null vector of h_{2s,2n} in real interleaved coordinates.
RVec random_null_vector(int n, int s, Rng& rng);

}  // namespace lcklab
