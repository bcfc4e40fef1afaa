// Acceptance criteria AC1..AC13. One PASS/FAIL line per criterion; exit code 1
// if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "lcklab/cr.hpp"
#include "lcklab/foliations.hpp"
#include "lcklab/lck.hpp"
#include "lcklab/models.hpp"
#include "lcklab/runner.hpp"
#include "lcklab/sampling.hpp"

using namespace lcklab;

namespace {

// Pinned tolerances.
constexpr double kTolFd = 1e-6;
constexpr double kTolAnalytic = 1e-9;
constexpr double kTolLeeNorm = 1e-10;
constexpr double kTolCurvature = 1e-5;
constexpr double kTolNullTransversal = 1e-10;
constexpr double kTolPair = 1e-10;
constexpr double kTolExample = 1e-12;
constexpr double kTolIsometry = 1e-12;
constexpr double kNonparallelWitness = 0.01;
constexpr double kRuntimeAc1 = 10.0;
constexpr double kRuntimeAll = 120.0;

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (detail.empty()) detail = what;
    }
  }
  void worst(double& acc, double v) { acc = std::isfinite(v) ? std::max(acc, v) : INFINITY; }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

RunConfig cfg(ModelKind m, int n, int s, std::vector<std::string> suites, int points) {
  RunConfig c;
  c.model = m;
  c.n = n;
  c.s = s;
  c.lambda = 0.5;
  c.points = points;
  c.tol_analytic = kTolAnalytic;
  c.tol_fd = kTolFd;
  c.seed = 20240601;
  c.suites = std::move(suites);
  c.threads = 4;
  return c;
}

// Runs suites and requires each to pass; returns the largest residual.
double run_suites(Check& chk, const RunConfig& c) {
  const VerificationReport r = run(c);
  double m = 0.0;
  for (const SuiteResult& s : r.suites) {
    chk.require(s.pass, fmt::format("{} on {} (n={}, s={}): residual {:.3g} tol {:.3g} {}", s.name,
                                    to_string(c.model), c.n, c.s, s.max_residual, s.tolerance, s.error));
    chk.worst(m, s.max_residual);
  }
  return m;
}

CVec cv(std::initializer_list<Complex> xs) {
  CVec v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index k = 0;
  for (Complex x : xs) v(k++) = x;
  return v;
}

// --- criteria --------------------------------------------------------------

Check ac1() {
  Check chk;
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (int n = 2; n <= 4; ++n)
    for (int s = 1; s < n; ++s) chk.worst(worst, run_suites(chk, cfg(ModelKind::Hopf, n, s, {"christoffel-oracle"}, 100)));
  for (int n = 1; n <= 2; ++n)
    for (int s = 0; s <= n; ++s)
      chk.worst(worst, run_suites(chk, cfg(ModelKind::Tricerri, n, s, {"christoffel-oracle"}, 100)));
  const double t = seconds_since(t0);
  chk.require(t < kRuntimeAc1, fmt::format("runtime {:.2f}s", t));
  if (chk.ok) chk.detail = fmt::format("max relative difference {:.2e}, {:.2f}s", worst, t);
  return chk;
}

Check ac2() {
  Check chk;
  double worst = 0.0;
  for (int n = 2; n <= 3; ++n) chk.worst(worst, run_suites(chk, cfg(ModelKind::Hopf, n, 1, {"parallel-lee"}, 100)));
  for (int n = 1; n <= 2; ++n)
    chk.worst(worst, run_suites(chk, cfg(ModelKind::Tricerri, n, 1, {"prop2-lee-derivative"}, 100)));
  // Independent witness at Im(w) = 1.
  const double witness = parallel_lee_residual(tricerri_lck(TricerriModel{1, 1}), cv({Complex(0.3, 1.0), 0.5}));
  chk.require(witness > kNonparallelWitness, fmt::format("Tricerri parallel-Lee residual {:.3g}", witness));
  run_suites(chk, cfg(ModelKind::Tricerri, 1, 1, {"nonparallel-lee"}, 100));
  if (chk.ok) chk.detail = fmt::format("max residual {:.2e}, nonparallel witness {:.3f}", worst, witness);
  return chk;
}

Check ac3() {
  Check chk;
  Rng rng(3);
  double worst = 0.0;
  for (int n = 2; n <= 4; ++n) {
    for (int s = 1; s < n; ++s) {
      for (HopfRegion r : {HopfRegion::Plus, HopfRegion::Minus}) {
        const HopfModel hm{n, s, 0.5, r};
        const LCKStructure lck = hopf_lck(hm);
        const double want = r == HopfRegion::Plus ? 4.0 : -4.0;
        for (int k = 0; k < 100; ++k) chk.worst(worst, std::abs(lee_data(lck, sample_hopf_point(hm, rng)).c - want));
      }
    }
  }
  for (int n = 1; n <= 2; ++n) {
    const TricerriModel tm{n, 1};
    const LCKStructure lck = tricerri_lck(tm);
    for (int k = 0; k < 100; ++k) chk.worst(worst, std::abs(lee_data(lck, sample_tricerri_point(tm, rng)).c - 1.0));
  }
  chk.require(worst < kTolLeeNorm, fmt::format("max |g(B,B) - c| {:.3g}", worst));
  if (chk.ok) chk.detail = fmt::format("max |g(B,B) - c| {:.2e}", worst);
  return chk;
}

Check ac4() {
  Check chk;
  double h = 0.0;
  for (auto [n, s] : {std::pair{2, 1}, {3, 1}, {3, 2}}) {
    RunConfig c = cfg(ModelKind::Hopf, n, s, {"thm1-totally-geodesic", "eq1-leaf-index"}, 100);
    c.tol_fd = kTolCurvature / 10.0;  // suite tolerance is 10 * tol_fd
    chk.worst(h, run_suites(chk, c));
  }
  if (chk.ok) chk.detail = fmt::format("max h residual {:.2e}, leaf index exact", h);
  return chk;
}

Check ac5() {
  Check chk;
  double worst = 0.0;
  for (int n = 2; n <= 4; ++n) {
    RunConfig c = cfg(ModelKind::SyntheticNull, n, 1, {"eq8-transversal", "eq5-nv-invariance"}, 1000);
    c.tol_analytic = kTolNullTransversal * 10.0;  // eq8 runs at 0.1 * tol_analytic
    RunConfig c8 = c;
    c8.suites = {"eq8-transversal"};
    chk.worst(worst, run_suites(chk, c8));
    RunConfig c5 = c;
    c5.suites = {"eq5-nv-invariance"};
    c5.tol_analytic = kTolAnalytic;
    chk.worst(worst, run_suites(chk, c5));
  }
  if (chk.ok) chk.detail = fmt::format("max residual {:.2e} over 3 x 1000 configurations", worst);
  return chk;
}

Check ac6() {
  Check chk;
  RunConfig c = cfg(ModelKind::Hopf, 2, 1, {"thm4-integrability", "thm4-plane-gram"}, 100);
  c.tol_fd = kTolCurvature / 10.0;
  double worst = run_suites(chk, c);
  chk.worst(worst, run_suites(chk, cfg(ModelKind::Hopf, 3, 1, {"thm4-plane-gram"}, 100)));
  // Rad P = P on c = 0 data, by an explicit rank count.
  Rng rng(6);
  for (int k = 0; k < 100; ++k) {
    const SemiEuclideanForm h = SemiEuclideanForm::standard(2, 6);
    const PointData d = synthetic_point_data(h, random_null_vector(3, 1, rng));
    const FoliationFibre p = second_foliation_fibre(d);
    const FrameSubspace rad = radical(h, p.tangent);
    chk.require(p.tangent.dim() == 2 && rad.dim() == 2 && same_span(rad.basis(), p.tangent.basis(), 1e-9),
                "synthetic radical differs from P");
  }
  if (chk.ok) chk.detail = fmt::format("max residual {:.2e}, Rad P = P at 100 null configurations", worst);
  return chk;
}

Check ac7() {
  Check chk;
  double worst = 0.0;
  for (auto [n, s] : {std::pair{3, 1}, {4, 2}}) {
    RunConfig c = cfg(ModelKind::SyntheticNull, n, s, {"lemma6-pair"}, 1000);
    c.tol_analytic = kTolPair * 10.0;
    chk.worst(worst, run_suites(chk, c));
    chk.worst(worst, run_suites(chk, cfg(ModelKind::SyntheticNull, n, s, {"lemma6-frame-invariance"}, 1000)));
  }
  const SemiEuclideanForm h = SemiEuclideanForm::standard(2, 6);
  const PointData d = synthetic_point_data(h, RVec::Unit(6, 0) + RVec::Unit(6, 2));
  RMat scr(6, 2);
  scr << RVec::Unit(6, 4), RVec::Unit(6, 5);
  const TransversalPair p =
      isotropic_transversal_pair(h, d.omega, d.theta, d.A, d.B, FrameSubspace(h, scr), RVec::Unit(6, 0), RVec::Unit(6, 1));
  RVec n1(6), n2(6);
  n1 << 0, 0.5, 0, -0.5, 0, 0;
  n2 << -0.5, 0, 0.5, 0, 0, 0;
  const double ex = std::max((p.N1 - n1).cwiseAbs().maxCoeff(), (p.N2 - n2).cwiseAbs().maxCoeff());
  chk.require(ex <= kTolExample, fmt::format("worked example off by {:.3g}", ex));
  if (chk.ok) chk.detail = fmt::format("max residual {:.2e}, worked example {:.1e}", worst, ex);
  return chk;
}

Check ac8() {
  Check chk;
  const LCKStructure lck = hopf_lck(HopfModel{});
  const double c0 = 0.3;
  ComplexImmersion offset{1, [c0](const CVec& u) { return cv({c0, u(0)}); },
                          [](const CVec&) { return CMat((CMat(2, 1) << 0.0, 1.0).finished()); }};
  ComplexImmersion lee_line{1, [](const CVec& u) { return cv({0.0, u(0)}); },
                            [](const CVec&) { return CMat((CMat(2, 1) << 0.0, 1.0).finished()); }};
  Rng rng(8);
  double e18 = 0.0, hb = 0.0, hmin = 0.0;
  for (int k = 0; k < 50; ++k) {
    const Complex u = rng.uniform(0.6, 2.0) * std::exp(Complex(0.0, rng.uniform(0.0, 2.0 * std::numbers::pi)));
    const MeanCurvatureReport r = complex_submanifold_mean_curvature(lck, offset, cv({u}));
    chk.worst(e18, r.eq18_residual);
    chk.worst(hb, r.h_plus_half_bperp);
    chk.require(r.bperp_norm > 1e-3, "offset line has B_perp = 0");
    chk.worst(hmin, complex_submanifold_mean_curvature(lck, lee_line, cv({u})).mean_curvature_norm);
  }
  chk.require(e18 < kTolCurvature, fmt::format("eq18 residual {:.3g}", e18));
  chk.require(hb < kTolCurvature, fmt::format("|H + B_perp/2| {:.3g}", hb));
  chk.require(hmin < kTolCurvature, fmt::format("|H| on the Lee-tangent line {:.3g}", hmin));
  if (chk.ok) chk.detail = fmt::format("eq18 {:.2e}, |H+B/2| {:.2e}, minimal |H| {:.2e}", e18, hb, hmin);
  return chk;
}

Check ac9() {
  Check chk;
  double worst = run_suites(chk, cfg(ModelKind::Hopf, 2, 1, {"thm5-leaf-space"}, 500));
  chk.worst(worst, run_suites(chk, cfg(ModelKind::Hopf, 2, 1, {"lemma7-leaf-radius"}, 20)));
  // w = i, lambda = 1/2: chart radius against a sample point of the leaf,
  // normalised into the annulus by deck steps.
  const HopfModel hm{};
  const double radius = leaf_label_from_w(hm, Complex(0.0, 1.0)).chart_radius;
  Rng rng(9);
  const CVec zeta = sample_pseudosphere(2, 1, 1.0, rng);
  CVec x = std::exp(0.25) * zeta;
  double r = std::sqrt(std::norm(x(1)) - std::norm(x(0)));
  while (r > 1.0) r *= 0.5;
  while (r <= 0.5) r /= 0.5;
  const double err = std::max(std::abs(radius - 0.5 * std::exp(0.25)), std::abs(radius - r));
  chk.require(err <= kTolExample, fmt::format("radius off by {:.3g}", err));
  if (chk.ok) chk.detail = fmt::format("max residual {:.2e}, radius {:.6f}", worst, radius);
  return chk;
}

Check ac10() {
  Check chk;
  double worst = 0.0;
  for (auto [n, s] : {std::pair{2, 1}, {3, 1}, {3, 2}})
    chk.worst(worst, run_suites(chk, cfg(ModelKind::Hopf, n, s, {"cayley-boundary", "levi-signature"}, 100)));
  if (chk.ok) chk.detail = fmt::format("max boundary residual {:.2e}, signatures exact", worst);
  return chk;
}

Check ac11() {
  Check chk;
  double worst = run_suites(chk, cfg(ModelKind::Hopf, 2, 1, {"hopf-diffeo-roundtrip", "retraction-monotonicity"}, 200));
  RunConfig c = cfg(ModelKind::Hopf, 2, 1, {"deck-invariance", "torus-isometry"}, 100);
  c.tol_analytic = kTolIsometry * 1e3;  // both suites run at 1e-3 * tol_analytic
  chk.worst(worst, run_suites(chk, c));
  c.n = 3;
  chk.worst(worst, run_suites(chk, c));
  if (chk.ok) chk.detail = fmt::format("max residual {:.2e}", worst);
  return chk;
}

Check ac12() {
  Check chk;
  double worst = 0.0;
  for (int n = 2; n <= 3; ++n)
    chk.worst(worst, run_suites(chk, cfg(ModelKind::Hopf, n, 1, {"submersion-fibre-invariance"}, 100)));
  if (chk.ok) chk.detail = fmt::format("max residual {:.2e}", worst);
  return chk;
}

Check ac13() {
  Check chk;
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<RunConfig> configs;
  for (ModelKind m : {ModelKind::Hopf, ModelKind::Tricerri, ModelKind::Flat, ModelKind::SyntheticNull}) {
    RunConfig c;
    c.model = m;
    if (m == ModelKind::SyntheticNull) c.n = 3;
    configs.push_back(c);
  }
  int suites = 0;
  for (const RunConfig& c : configs) {
    const VerificationReport a = run(c);
    const std::string ja = to_json(a);
    const std::string jb = to_json(run(c));
    chk.require(ja == jb, "JSON differs between runs for " + to_string(c.model));
    chk.require(a.pass(), "default run fails for " + to_string(c.model));
    suites += static_cast<int>(a.suites.size());
  }
  const double t = seconds_since(t0);
  chk.require(t / 2.0 < kRuntimeAll, fmt::format("all-suites runtime {:.1f}s", t / 2.0));
  if (chk.ok) chk.detail = fmt::format("{} suites byte-identical across two runs, {:.1f}s per pass", suites, t / 2.0);
  return chk;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Check()>>> criteria = {
      {"AC1", ac1}, {"AC2", ac2}, {"AC3", ac3},   {"AC4", ac4},   {"AC5", ac5},   {"AC6", ac6},  {"AC7", ac7},
      {"AC8", ac8}, {"AC9", ac9}, {"AC10", ac10}, {"AC11", ac11}, {"AC12", ac12}, {"AC13", ac13},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Check c;
    try {
      c = fn();
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = std::string("exception: ") + e.what();
    }
    std::printf("%s %s: %s\n", c.ok ? "PASS" : "FAIL", name, c.detail.c_str());
    std::fflush(stdout);
    if (!c.ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
