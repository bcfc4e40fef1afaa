#include "lcklab/sampling.hpp"

#include <cmath>

namespace lcklab {

namespace {

constexpr int kMaxAttempts = 100000;

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::string_view stream, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ fnv1a(stream) ^ splitmix64(index + 0x632be59bd9b4e019ull));
}

CVec Rng::complex_vector(int n) {
  CVec v(n);
  for (int i = 0; i < n; ++i) v(i) = complex_normal();
  return v;
}

RVec Rng::real_vector(int n) {
  RVec v(n);
  for (int i = 0; i < n; ++i) v(i) = normal();
  return v;
}

bool stencil_safe(const MetricChart& chart, const CVec& z, const FdOptions& fd) {
  if (!chart.in_domain(z)) return false;
  const double h = 10.0 * fd.step(z);
  for (int j = 0; j < chart.n(); ++j) {
    for (Complex d : {Complex(1.0, 0.0), kI}) {
      CVec e = CVec::Zero(chart.n());
      e(j) = h * d;
      if (!chart.in_domain(z + e) || !chart.in_domain(z - e)) return false;
    }
  }
  return true;
}

CVec sample_hopf_point(const HopfModel& model, Rng& rng, double margin) {
  model.validate();
  const double sign = model.region == HopfRegion::Plus ? 1.0 : -1.0;
  const MetricChart chart = hopf_chart(model);
  for (int i = 0; i < kMaxAttempts; ++i) {
    const CVec z = std::exp(rng.uniform(-1.0, 1.0)) * rng.complex_vector(model.n) / std::sqrt(2.0 * model.n);
    const double b = b_norm2(model.s, z);
    if (sign * b > margin * z.squaredNorm() && stencil_safe(chart, z)) return z;
  }
  throw DegenerateError("Hopf sampler exhausted its attempts");
}

CVec sample_pseudosphere(int n, int s, double r, Rng& rng, double margin) {
  for (int i = 0; i < kMaxAttempts; ++i) {
    const CVec z = rng.complex_vector(n);
    const double b = b_norm2(s, z);
    if (b > margin * z.squaredNorm()) return (r / std::sqrt(b)) * z;
  }
  throw DegenerateError("pseudosphere sampler exhausted its attempts");
}

CVec sample_tricerri_point(const TricerriModel& model, Rng& rng) {
  model.validate();
  CVec p(model.n + 1);
  p(0) = Complex(rng.uniform(-1.0, 1.0), rng.uniform(0.5, 2.0));
  for (int j = 1; j <= model.n; ++j) p(j) = rng.complex_normal();
  return p;
}

CVec sample_flat_point(int n, Rng& rng) { return rng.complex_vector(n); }

TangentVector random_real_vector(int n, Rng& rng) { return TangentVector::real(rng.complex_vector(n)); }

RVec random_null_vector(int n, int s, Rng& rng) {
  if (s <= 0 || s >= n) throw PreconditionError("null vectors need 0 < s < n");
  CVec u = rng.complex_vector(n);
  const double neg = u.head(s).norm();
  const double pos = u.tail(n - s).norm();
  if (neg == 0.0 || pos == 0.0) return random_null_vector(n, s, rng);
  u.tail(n - s) *= neg / pos;
  return TangentVector::real(u).real_coords();
}

}  // namespace lcklab
