#include "lcklab/suites.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lcklab/cr.hpp"
#include "lcklab/foliations.hpp"
#include "lcklab/lck.hpp"
#include "lcklab/models.hpp"

namespace lcklab {

namespace {

using M = ModelKind;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// --- shared helpers --------------------------------------------------------

HopfModel hopf_model(const RunConfig& cfg, HopfRegion region) { return HopfModel{cfg.n, cfg.s, cfg.lambda, region}; }

HopfRegion random_region(Rng& rng) { return rng.uniform() < 0.5 ? HopfRegion::Plus : HopfRegion::Minus; }

TricerriModel tricerri_model(const RunConfig& cfg) { return TricerriModel{cfg.n, cfg.s}; }

struct Sample {
  LCKStructure lck;
  CVec z;
};

LCKStructure random_synthetic(const RunConfig& cfg, Rng& rng) {
  return synthetic_lee(cfg.n, cfg.s, TangentVector::from_real_coords(random_null_vector(cfg.n, cfg.s, rng)));
}

// A point of the configured model; Hopf picks a random region.
Sample sample_model(const RunConfig& cfg, Rng& rng) {
  switch (cfg.model) {
    case M::Hopf: {
      const HopfModel hm = hopf_model(cfg, random_region(rng));
      return {hopf_lck(hm), sample_hopf_point(hm, rng)};
    }
    case M::Tricerri: {
      const TricerriModel tm = tricerri_model(cfg);
      return {tricerri_lck(tm), sample_tricerri_point(tm, rng)};
    }
    case M::Flat:
      return {flat_kahler(cfg.n, cfg.s), sample_flat_point(cfg.n, rng)};
    case M::SyntheticNull: {
      LCKStructure lck = random_synthetic(cfg, rng);
      return {std::move(lck), sample_flat_point(cfg.n, rng)};
    }
  }
  throw UsageError("unknown model");
}

// Real vector field with holomorphic part c + K p + L conj(p) + q p*p.
VectorField random_field(int n, Rng& rng) {
  const CVec c = rng.complex_vector(n);
  CMat k(n, n), l(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      k(i, j) = 0.5 * rng.complex_normal();
      l(i, j) = 0.5 * rng.complex_normal();
    }
  const CVec q = 0.25 * rng.complex_vector(n);
  return [c, k, l, q](const CVec& p) {
    return TangentVector::real(CVec(c + k * p + l * p.conjugate() + q.cwiseProduct(p.cwiseProduct(p))));
  };
}

double rel(double err, double scale) { return err / std::max(1.0, scale); }


RMat col(const RVec& v) {
  RMat m(v.size(), 1);
  m.col(0) = v;
  return m;
}

SemiEuclideanForm standard_form(const RunConfig& cfg) { return SemiEuclideanForm::standard(2 * cfg.s, 2 * cfg.n); }

// --- charts ----------------------------------------------------------------

double christoffel_oracle(const RunConfig& cfg, Rng& rng) {
  const Sample smp = sample_model(cfg, rng);
  const MetricChart& chart = smp.lck.chart;
  const ConnectionCoefficients an = christoffel(chart, smp.z, ChristoffelPath::Preferred);
  const ConnectionCoefficients fd = christoffel(chart, smp.z, ChristoffelPath::FiniteDifference);
  double r = max_abs_difference(an, fd) / std::max(an.max_abs(), 1e-12);
  r = std::max(r, an.symmetry_residual());
  r = std::max(r, an.conjugation_residual());
  return r;
}

double metric_compatibility(const RunConfig& cfg, Rng& rng) {
  const Sample smp = sample_model(cfg, rng);
  const MetricChart& chart = smp.lck.chart;
  const int n = chart.n();
  const TangentVector x = random_real_vector(n, rng);
  const VectorField y = random_field(n, rng);
  const VectorField w = random_field(n, rng);
  auto gyw = [&](const CVec& p) { return metric_product(chart, p, y(p), w(p)); };
  const Complex lhs = derivative_along(chart, gyw, smp.z, x);
  const Complex t1 = metric_product(chart, smp.z, covariant_derivative(chart, x, y, smp.z), w(smp.z));
  const Complex t2 = metric_product(chart, smp.z, y(smp.z), covariant_derivative(chart, x, w, smp.z));
  return rel(std::abs(lhs - t1 - t2), std::max({std::abs(lhs), std::abs(t1), std::abs(t2)}));
}

double torsion_free(const RunConfig& cfg, Rng& rng) {
  const Sample smp = sample_model(cfg, rng);
  const MetricChart& chart = smp.lck.chart;
  const VectorField x = random_field(chart.n(), rng);
  const VectorField y = random_field(chart.n(), rng);
  const TangentVector a = covariant_derivative(chart, x(smp.z), y, smp.z);
  const TangentVector b = covariant_derivative(chart, y(smp.z), x, smp.z);
  const TangentVector br = lie_bracket(chart, x, y, smp.z);
  return rel((a - b - br).norm(), std::max({a.norm(), b.norm(), br.norm()}));
}

double kahler_closed(const RunConfig& cfg, Rng& rng) {
  const Sample smp = sample_model(cfg, rng);
  const MetricChart chart =
      cfg.model == M::Tricerri ? tricerri_auxiliary_chart(tricerri_model(cfg)) : smp.lck.chart;
  auto omega = [&](const CVec& p) { return RMat(kahler_form(chart, p)); };
  return exterior_derivative_2form(chart, omega, smp.z).max_abs();
}

double conformal_shift(const RunConfig& cfg, Rng& rng) {
  const Sample smp = sample_model(cfg, rng);
  const int n = smp.lck.chart.n();
  const TangentVector x = random_real_vector(n, rng);
  const VectorField y = random_field(n, rng);
  TangentVector predicted, direct;
  if (cfg.model == M::Hopf) {
    const int s = cfg.s;
    ScalarField f = [s](const CVec& p) { return std::log(std::abs(b_norm2(s, p))); };
    predicted = conformal_connection_shift(smp.lck.chart, f, x, y, smp.z);
    direct = covariant_derivative(flat_chart(cfg.n, cfg.s), x, y, smp.z);
  } else {
    const MetricChart aux = tricerri_auxiliary_chart(tricerri_model(cfg));
    ScalarField f = [](const CVec& p) { return std::log(p(0).imag()); };
    predicted = conformal_connection_shift(aux, f, x, y, smp.z);
    direct = covariant_derivative(smp.lck.chart, x, y, smp.z);
  }
  return rel((predicted - direct).norm(), direct.norm());
}

double chart_signature(const RunConfig& cfg, Rng& rng) {
  const Sample smp = sample_model(cfg, rng);
  const MetricChart& chart = smp.lck.chart;
  const CMat h = chart.metric(smp.z);
  double r = (h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, h.cwiseAbs().maxCoeff()) ? 1.0 : 0.0;
  const SemiEuclideanForm form = tangent_form(chart, smp.z);
  const Signature sig = signature_of(form, FrameSubspace::full(form));
  r += std::abs(sig.positive - 2 * (chart.n() - chart.s())) + std::abs(sig.negative - 2 * chart.s()) + sig.zero;
  return r;
}

// --- lck -------------------------------------------------------------------

double prop1_lee_field(const RunConfig& cfg, Rng& rng) {
  const HopfModel hm = hopf_model(cfg, random_region(rng));
  const LCKStructure lck = hopf_lck(hm);
  const CVec z = sample_hopf_point(hm, rng);
  const LeeData d = lee_data(lck, z);
  const double a = hm.region == HopfRegion::Plus ? 1.0 : -1.0;
  const TangentVector expected = TangentVector::real(CVec(-2.0 * a * z));
  double r = std::abs(d.c - 4.0 * a);
  r = std::max(r, rel((d.B - expected).norm(), expected.norm()));
  r = std::max(r, lee_identity_residual(lck, d));
  return r;
}

double prop2_lee_field(const RunConfig& cfg, Rng& rng) {
  const TricerriModel tm = tricerri_model(cfg);
  const LCKStructure lck = tricerri_lck(tm);
  const CVec p = sample_tricerri_point(tm, rng);
  const LeeData d = lee_data(lck, p);
  CVec hol = CVec::Zero(tm.n + 1);
  hol(0) = kI * p(0).imag();
  const TangentVector expected = TangentVector::real(hol);
  double r = std::abs(d.c - 1.0);
  r = std::max(r, rel((d.B - expected).norm(), expected.norm()));
  r = std::max(r, lee_identity_residual(lck, d));
  return r;
}

double parallel_lee(const RunConfig& cfg, Rng& rng) {
  const Sample smp = sample_model(cfg, rng);
  return parallel_lee_residual(smp.lck, smp.z);
}

double nonparallel_lee(const RunConfig& cfg, Rng& rng) {
  const TricerriModel tm = tricerri_model(cfg);
  CVec p = sample_tricerri_point(tm, rng);
  p(0) = Complex(p(0).real(), 1.0);
  return std::max(0.0, 0.01 - parallel_lee_residual(tricerri_lck(tm), p));
}

double prop2_lee_derivative(const RunConfig& cfg, Rng& rng) {
  const TricerriModel tm = tricerri_model(cfg);
  const LCKStructure lck = tricerri_lck(tm);
  const CVec p = sample_tricerri_point(tm, rng);
  const int m = tm.n + 1;
  const VectorField b = lee_field(lck);
  double r = 0.0;
  for (int j = 1; j < m; ++j) {
    for (int a : {j, m + j}) {
      CVec e = CVec::Zero(2 * m);
      e(a) = 1.0;
      const TangentVector zj(e);
      r = std::max(r, (covariant_derivative(lck.chart, zj, b, p) - 0.5 * zj).norm());
    }
  }
  return r;
}

double eq20_nabla_j(const RunConfig& cfg, Rng& rng) {
  const Sample smp = sample_model(cfg, rng);
  const int n = smp.lck.chart.n();
  const TangentVector x = random_real_vector(n, rng);
  const VectorField y = random_field(n, rng);
  const TangentVector ny = covariant_derivative(smp.lck.chart, x, y, smp.z);
  return rel(nabla_J_defect(smp.lck, x, y, smp.z).norm(), ny.norm());
}

double weyl_dj(const RunConfig& cfg, Rng& rng) {
  const Sample smp = sample_model(cfg, rng);
  const int n = smp.lck.chart.n();
  const TangentVector x = random_real_vector(n, rng);
  const VectorField y = random_field(n, rng);
  const TangentVector dy = weyl_connection(smp.lck, x, y, smp.z);
  return rel(weyl_J_defect(smp.lck, x, y, smp.z).norm(), dy.norm());
}

double lee_closed(const RunConfig& cfg, Rng& rng) {
  const Sample smp = sample_model(cfg, rng);
  double r = lee_closedness_residual(smp.lck, smp.z);
  if (smp.lck.conformal_factor) r = std::max(r, conformal_factor_residual(smp.lck, smp.z));
  return r;
}

// --- first foliation -------------------------------------------------------

double thm1_totally_geodesic(const RunConfig& cfg, Rng& rng) {
  const Sample smp = sample_model(cfg, rng);
  const FoliationFibre f = first_foliation_fibre(smp.lck, smp.z);
  double r = 0.0;
  for (int k = 0; k < 3; ++k) {
    const RVec x = f.tangent.basis() * rng.real_vector(f.tangent.dim());
    const RVec y = f.tangent.basis() * rng.real_vector(f.tangent.dim());
    const SecondFundamentalData h = gauss_weingarten(smp.lck, f, x, y, f.transversal.vector(0));
    r = std::max({r, h.h_xy.norm(), h.h_yx.norm(), h.symmetry_residual, h.extension_residual});
  }
  return r;
}

double eq1_leaf_index(const RunConfig& cfg, Rng& rng) {
  const HopfModel hm = hopf_model(cfg, random_region(rng));
  const CVec z = sample_hopf_point(hm, rng);
  const FoliationFibre f = first_foliation_fibre(hopf_lck(hm), z);
  const Signature sig = signature_of(f.form, f.tangent);
  const int expected = hm.region == HopfRegion::Plus ? 2 * cfg.s : 2 * cfg.s - 1;
  return std::abs(sig.negative - expected) + std::abs(sig.positive + sig.negative - (2 * cfg.n - 1)) +
         sig.zero + (sig.ill_conditioned ? 1 : 0);
}

double leaf_level_set(const RunConfig& cfg, Rng& rng) {
  const HopfModel hm = hopf_model(cfg, random_region(rng));
  const CVec z = sample_hopf_point(hm, rng);
  const FoliationFibre f = first_foliation_fibre(hopf_lck(hm), z);
  RMat db(1, 2 * cfg.n);
  for (int j = 0; j < cfg.n; ++j) {
    db(0, 2 * j) = 2.0 * eps(cfg.s, j) * z(j).real();
    db(0, 2 * j + 1) = 2.0 * eps(cfg.s, j) * z(j).imag();
  }
  return span_distance(f.tangent.basis(), null_space(db));
}

struct NullConfig {
  PointData d;
  FrameSubspace screen;
  RVec v0;
};

NullConfig random_null_config(const RunConfig& cfg, Rng& rng) {
  const PointData d = synthetic_point_data(standard_form(cfg), random_null_vector(cfg.n, cfg.s, rng));
  const FoliationFibre f = first_foliation_fibre(d);
  const FrameSubspace screen_perp = orthogonal_complement(d.form, f.screen);
  const RVec v0 = euclidean_complement_within(screen_perp.basis(), col(d.B)).col(0);
  return {d, f.screen, v0};
}

double eq5_nv_invariance(const RunConfig& cfg, Rng& rng) {
  const NullConfig c = random_null_config(cfg, rng);
  auto nv = [&](const RVec& v) { return lightlike_transversal(c.d.form, c.d.omega, c.d.B, c.screen, v); };
  const RVec n0 = nv(c.v0);
  double scale = rng.uniform(0.5, 5.0) * (rng.uniform() < 0.5 ? -1.0 : 1.0);
  double r = (nv(scale * c.v0) - n0).norm();
  for (int k = 0; k < 2; ++k) {
    scale = rng.uniform(0.5, 5.0) * (rng.uniform() < 0.5 ? -1.0 : 1.0);
    const RVec v = scale * c.v0 + rng.normal() * c.d.B;
    r = std::max(r, (nv(v) - n0).norm());
  }
  return rel(r, n0.norm());
}

double eq8_transversal(const RunConfig& cfg, Rng& rng) {
  const NullConfig c = random_null_config(cfg, rng);
  const RVec v = rng.uniform(0.5, 5.0) * c.v0 + rng.normal() * c.d.B;
  const RVec n = lightlike_transversal(c.d.form, c.d.omega, c.d.B, c.screen, v);
  double r = std::max(std::abs(inner(c.d.form, n, n)), std::abs(c.d.omega.dot(n) - 1.0));
  RMat bn(n.size(), 2);
  bn.col(0) = c.d.B;
  bn.col(1) = n;
  const FrameSubspace screen_perp = orthogonal_complement(c.d.form, c.screen);
  if (numerical_rank(bn) != 2 || !same_span(bn, screen_perp.basis(), 1e-9)) r = std::max(r, 1.0);
  return r;
}

// --- second foliation ------------------------------------------------------

struct PairConfig {
  PointData d;
  FrameSubspace screen;
  RMat e;  // frame of a complement of P in S(P-perp)-perp
};

PairConfig random_pair_config(const RunConfig& cfg, Rng& rng) {
  const PointData d = synthetic_point_data(standard_form(cfg), random_null_vector(cfg.n, cfg.s, rng));
  const FoliationFibre f = second_foliation_fibre(d);
  const FrameSubspace screen_perp = orthogonal_complement(d.form, f.screen);
  return {d, f.screen, euclidean_complement_within(screen_perp.basis(), f.tangent.basis())};
}

Eigen::Matrix2d random_frame_change(Rng& rng) {
  for (;;) {
    Eigen::Matrix2d f;
    f << rng.normal(), rng.normal(), rng.normal(), rng.normal();
    if (std::abs(f.determinant()) > 0.1) return f;
  }
}

std::pair<RVec, RVec> random_valid_frame(const PairConfig& c, Rng& rng) {
  const Eigen::Matrix2d f = random_frame_change(rng);
  const RVec v1 = c.e * f.col(0) + rng.normal() * c.d.A + rng.normal() * c.d.B;
  const RVec v2 = c.e * f.col(1) + rng.normal() * c.d.A + rng.normal() * c.d.B;
  return {v1, v2};
}

double lemma6_pair(const RunConfig& cfg, Rng& rng) {
  const PairConfig c = random_pair_config(cfg, rng);
  const auto [v1, v2] = random_valid_frame(c, rng);
  const TransversalPair p =
      isotropic_transversal_pair(c.d.form, c.d.omega, c.d.theta, c.d.A, c.d.B, c.screen, v1, v2);
  double r = pair_constraint_residual(c.d.form, c.d.omega, c.d.theta, p);
  for (int i = 0; i < c.screen.dim(); ++i) {
    r = std::max(r, std::abs(inner(c.d.form, p.N1, c.screen.vector(i))));
    r = std::max(r, std::abs(inner(c.d.form, p.N2, c.screen.vector(i))));
  }
  return r;
}

double lemma6_frame_invariance(const RunConfig& cfg, Rng& rng) {
  const PairConfig c = random_pair_config(cfg, rng);
  const auto [v1, v2] = random_valid_frame(c, rng);
  const Eigen::Matrix2d f = random_frame_change(rng);
  const RVec w1 = f(0, 0) * v1 + f(1, 0) * v2;
  const RVec w2 = f(0, 1) * v1 + f(1, 1) * v2;
  const auto pair = [&](const RVec& a, const RVec& b) {
    return isotropic_transversal_pair(c.d.form, c.d.omega, c.d.theta, c.d.A, c.d.B, c.screen, a, b);
  };
  const TransversalPair p = pair(v1, v2);
  const TransversalPair q = pair(w1, w2);
  return rel(std::max((p.N1 - q.N1).norm(), (p.N2 - q.N2).norm()), std::max(p.N1.norm(), p.N2.norm()));
}

double thm4_integrability(const RunConfig& cfg, Rng& rng) {
  const Sample smp = sample_model(cfg, rng);
  return integrability_residual(smp.lck, smp.z);
}

double thm4_plane_gram(const RunConfig& cfg, Rng& rng) {
  const Sample smp = sample_model(cfg, rng);
  const FoliationFibre f = second_foliation_fibre(smp.lck, smp.z);
  if (cfg.model == M::SyntheticNull) {
    const FrameSubspace rad = radical(f.form, f.tangent);
    return f.tangent.gram_restricted().cwiseAbs().maxCoeff() + std::abs(rad.dim() - 2);
  }
  const double c = lee_data(smp.lck, smp.z).c;
  const double sign = c > 0.0 ? 1.0 : -1.0;
  return (f.tangent.gram_restricted() - 4.0 * sign * RMat::Identity(2, 2)).cwiseAbs().maxCoeff();
}

double thm4_totally_geodesic(const RunConfig& cfg, Rng& rng) {
  const Sample smp = sample_model(cfg, rng);
  return h_P_residual(smp.lck, smp.z);
}

// --- complex submanifolds --------------------------------------------------

double eq18_mean_curvature(const RunConfig& cfg, Rng& rng) {
  const Sample smp = sample_model(cfg, rng);
  const CVec p = smp.z;
  const int n = smp.lck.chart.n();
  ComplexImmersion imm{1,
                       [p, n](const CVec& u) {
                         CVec q = p;
                         q(n - 1) = u(0);
                         return q;
                       },
                       [n](const CVec&) {
                         CMat j = CMat::Zero(n, 1);
                         j(n - 1, 0) = 1.0;
                         return j;
                       }};
  CVec u(1);
  u(0) = p(n - 1);
  const MeanCurvatureReport rep = complex_submanifold_mean_curvature(smp.lck, imm, u);
  return std::max(rel(rep.eq18_residual, rep.bperp_norm), rel(rep.h_plus_half_bperp, rep.bperp_norm));
}

double eq18_minimal(const RunConfig& cfg, Rng& rng) {
  const HopfModel hm = hopf_model(cfg, random_region(rng));
  const CVec p = sample_hopf_point(hm, rng);
  const int n = cfg.n;
  ComplexImmersion imm{1, [p](const CVec& u) { return CVec(u(0) * p); },
                       [p, n](const CVec&) {
                         CMat j(n, 1);
                         j.col(0) = p;
                         return j;
                       }};
  CVec u(1);
  u(0) = Complex(rng.uniform(0.8, 1.25), 0.0) * std::exp(kI * rng.uniform(0.0, kTwoPi));
  const MeanCurvatureReport rep = complex_submanifold_mean_curvature(hopf_lck(hm), imm, u);
  return std::max({rep.mean_curvature_norm, rep.bperp_norm, rep.eq18_residual});
}

// --- Hopf maps -------------------------------------------------------------

double hopf_diffeo_roundtrip(const RunConfig& cfg, Rng& rng) {
  const HopfModel hm = hopf_model(cfg, random_region(rng));
  const CVec z = sample_hopf_point(hm, rng);
  const HopfImage img = hopf_diffeo(hm, z);
  double r = std::abs(std::abs(b_norm2(cfg.s, img.zeta)) - 1.0) + std::abs(std::abs(img.w) - 1.0);
  const CVec back = hopf_diffeo_inv(hm, img.zeta, img.w);
  if (!deck_equivalent(hm, z, back)) r += 1.0;
  const HopfImage again = hopf_diffeo(hm, back);
  r = std::max(r, (again.zeta - img.zeta).norm() + std::abs(again.w - img.w));
  // F o F^{-1} on a random point of Sigma x S^1.
  const CVec zeta = hm.region == HopfRegion::Plus ? sample_pseudosphere(cfg.n, cfg.s, 1.0, rng)
                                                  : CVec(sample_hopf_point(hm, rng));
  const CVec unit = zeta / std::sqrt(std::abs(b_norm2(cfg.s, zeta)));
  const Complex w = std::exp(kI * rng.uniform(0.0, kTwoPi));
  const HopfImage fw = hopf_diffeo(hm, hopf_diffeo_inv(hm, unit, w));
  return std::max(r, (fw.zeta - unit).norm() + std::abs(fw.w - w));
}

double deck_invariance(const RunConfig& cfg, Rng& rng) {
  const HopfModel hm = hopf_model(cfg, random_region(rng));
  const CVec z = sample_hopf_point(hm, rng);
  double r = 0.0;
  for (int m = -2; m <= 2; ++m) {
    r = std::max(r, deck_pullback_residual(hm, m, z));
    const auto found = deck_equivalent(hm, z, CVec(std::pow(cfg.lambda, m) * z));
    if (!found || *found != m) r += 1.0;
  }
  return r;
}

double torus_isometry(const RunConfig& cfg, Rng& rng) {
  const HopfModel hm = hopf_model(cfg, random_region(rng));
  const CVec z = sample_hopf_point(hm, rng);
  const Complex zeta(rng.uniform(-1.0, 1.0), rng.uniform(0.0, kTwoPi));
  return torus_pullback_isometry_residual(hm, zeta, z);
}

double retraction_monotonicity(const RunConfig& cfg, Rng& rng) {
  const HopfModel hm = hopf_model(cfg, HopfRegion::Plus);
  const CVec z = sample_hopf_point(hm, rng);
  const double t = rng.uniform();
  const double b = b_norm2(cfg.s, z);
  double r = std::max(0.0, b - b_norm2(cfg.s, retraction(hm, t, z)));
  r += (retraction(hm, 0.0, z) - z).norm();
  r += retraction(hm, 1.0, z).head(cfg.s).norm();
  return r;
}

double submersion_fibre_invariance(const RunConfig& cfg, Rng& rng) {
  const HopfModel hm = hopf_model(cfg, HopfRegion::Plus);
  const CVec z = sample_pseudosphere(cfg.n, cfg.s, 1.0, rng);
  const FibrationSplit split = fibration_split(hm, z);
  const int k = split.horizontal.dim();
  const TangentVector u = TangentVector::from_real_coords(split.horizontal.basis() * rng.real_vector(k));
  const TangentVector v = TangentVector::from_real_coords(split.horizontal.basis() * rng.real_vector(k));
  double r = submersion_isometry_residual(hm, z, u, v);
  r = std::max(r, (split.vertical.gram_restricted() - 4.0 * RMat::Identity(2, 2)).cwiseAbs().maxCoeff());
  if (k != 2 * cfg.n - 2) r += 1.0;
  return r;
}

double gab_invariance(const RunConfig& cfg, Rng& rng) {
  const TricerriModel tm = tricerri_model(cfg);
  const CVec p = sample_tricerri_point(tm, rng);
  const double alpha = rng.uniform(1.5, 4.0);
  const Complex beta = std::exp(kI * rng.uniform(0.0, kTwoPi)) / std::sqrt(alpha);
  return gab_invariance_residual(tm, alpha, beta, p);
}

// --- CR layer --------------------------------------------------------------

double lemma7_oracle_radius(const HopfModel& hm, Complex w, const CVec& zeta) {
  CVec x = std::exp(arg_0_2pi(w) / kTwoPi) * zeta;
  double r = std::sqrt(b_norm2(hm.s, x));
  while (r > 1.0) r *= hm.lambda;
  while (r <= hm.lambda) r /= hm.lambda;
  return r;
}

double thm5_leaf_space(const RunConfig& cfg, Rng& rng) {
  const HopfModel hm = hopf_model(cfg, HopfRegion::Plus);
  const CVec z = sample_hopf_point(hm, rng);
  const Complex w0 = leaf_label(hm, z).w;
  double r = 0.0;
  for (int m = -3; m <= 3; ++m) r = std::max(r, std::abs(leaf_label(hm, CVec(std::pow(cfg.lambda, m) * z)).w - w0));
  if (same_leaf(hm, z, CVec(std::exp(0.1) * z), 1e-6)) r += 1.0;
  return r;
}

double lemma7_leaf_radius(const RunConfig& cfg, Rng& rng) {
  const HopfModel hm = hopf_model(cfg, HopfRegion::Plus);
  Complex w;
  do {
    w = std::exp(kI * rng.uniform(0.0, kTwoPi));
  } while (is_excluded_leaf(hm, w, 1e-9));
  std::vector<CVec> zetas;
  for (int k = 0; k < 5; ++k) zetas.push_back(sample_pseudosphere(cfg.n, cfg.s, 1.0, rng));
  double r = leaf_chart_image_check(hm, w, zetas);
  const double radius = leaf_label_from_w(hm, w).chart_radius;
  for (const CVec& zeta : zetas) r = std::max(r, std::abs(radius - lemma7_oracle_radius(hm, w, zeta)));
  return r;
}

CVec cayley_sample(const RunConfig& cfg, Rng& rng, double& r) {
  for (;;) {
    r = rng.uniform(0.5, 2.0);
    const CVec z = sample_pseudosphere(cfg.n, cfg.s, r, rng);
    if (std::abs(z(cfg.n - 1) + r) > 1e-3 * r) return z;
  }
}

double cayley_boundary(const RunConfig& cfg, Rng& rng) {
  double r = 0.0;
  const CVec z = cayley_sample(cfg, rng, r);
  const SiegelBoundaryPoint q = cayley(cfg.s, r, z);
  return std::max(std::abs(q.residual) / std::max(1.0, q.zeta.squaredNorm()), cayley_cr_residual(cfg.s, r, z));
}

double levi_signature(const RunConfig& cfg, Rng& rng) {
  double r = 0.0;
  const CVec z = cayley_sample(cfg, rng, r);
  const HermitianSignature sig = hermitian_signature(siegel_levi_matrix(cfg.n, cfg.s, cayley(cfg.s, r, z).zeta));
  return std::abs(sig.negative - cfg.s) + std::abs(sig.positive - (cfg.n - cfg.s - 1)) + sig.zero;
}

double cr_leaf_coherence(const RunConfig& cfg, Rng& rng) {
  const HopfModel hm = hopf_model(cfg, HopfRegion::Plus);
  const CVec z = sample_hopf_point(hm, rng);
  const CRFibre f = cr_fibre(hopf_lck(hm), z);
  CVec db(cfg.n);
  for (int j = 0; j < cfg.n; ++j) db(j) = eps(cfg.s, j) * std::conj(z(j));
  double r = 0.0;
  for (Eigen::Index k = 0; k < f.t10.cols(); ++k)
    r = std::max(r, std::abs((db.array() * f.t10.col(k).array()).sum()) / z.norm());
  if (f.t10.cols() != cfg.n - 1 || f.h_real.cols() != 2 * cfg.n - 2) r += 1.0;
  return r;
}

double levi_hermitian(const RunConfig& cfg, Rng& rng) {
  const HopfModel hm = hopf_model(cfg, HopfRegion::Plus);
  const CVec z = sample_hopf_point(hm, rng);
  const CMat l = levi_matrix(hopf_lck(hm), z);
  return rel((l - l.adjoint()).cwiseAbs().maxCoeff(), l.cwiseAbs().maxCoeff());
}

double levi_null(const RunConfig& cfg, Rng& rng) {
  const Sample smp = sample_model(cfg, rng);
  const LeeData d = lee_data(smp.lck, smp.z);
  const CVec zhol = (d.B + kI * d.A).hol();
  double r = std::abs(levi_form(smp.lck, smp.z, zhol, zhol));
  r += (d.B + kI * d.A).antihol().norm();
  if (cfg.n == 2) {
    const CRFibre f = cr_fibre(smp.lck, smp.z);
    RMat p(2 * cfg.n, 2);
    p.col(0) = d.A.real_coords();
    p.col(1) = d.B.real_coords();
    if (!levi_flat_detector(smp.lck, smp.z) || !same_span(f.h_real, p, 1e-9)) r += 1.0;
  }
  RMat row(1, 2 * cfg.n);
  row.row(0) = d.omega.real_coords().transpose();
  r = std::max(r, std::max(containment_residual(null_space(row), d.A.real_coords()),
                           containment_residual(null_space(row), d.B.real_coords())));
  return r;
}

// --- registry --------------------------------------------------------------

using Eval = double (*)(const RunConfig&, Rng&);

struct Entry {
  SuiteInfo info;
  Eval eval;
  int min_n;
};

const std::vector<Entry>& entries() {
  using K = ToleranceKind;
  static const std::vector<Entry> table = {
      {{"christoffel-oracle", "Proposition 1 / Proposition 2 (Christoffel symbols)", K::FiniteDifference, 1.0,
        {M::Hopf, M::Tricerri, M::Flat}, {M::Hopf, M::Tricerri, M::Flat}}, christoffel_oracle, 0},
      {{"metric-compatibility", "Levi-Civita connection (nabla g = 0)", K::FiniteDifference, 1.0,
        {M::Hopf, M::Tricerri, M::Flat, M::SyntheticNull}, {M::Hopf, M::Tricerri, M::Flat, M::SyntheticNull}},
       metric_compatibility, 0},
      {{"torsion-free", "Levi-Civita connection (torsion)", K::FiniteDifference, 1.0,
        {M::Hopf, M::Tricerri, M::Flat, M::SyntheticNull}, {M::Hopf, M::Tricerri, M::Flat, M::SyntheticNull}},
       torsion_free, 0},
      {{"chart-signature", "Eq. (10) (metric of index 2s)", K::Exact, 0.0,
        {M::Hopf, M::Tricerri, M::Flat, M::SyntheticNull}, {M::Hopf, M::Tricerri, M::Flat, M::SyntheticNull}},
       chart_signature, 0},
      {{"kahler-closed", "Proposition 2 (d Omega_0 = 0)", K::FiniteDifference, 1.0, {M::Tricerri, M::Flat},
        {M::Tricerri, M::Flat}}, kahler_closed, 0},
      {{"conformal-shift", "conformal change of the Levi-Civita connection", K::FiniteDifference, 1.0,
        {M::Hopf, M::Tricerri}, {M::Hopf, M::Tricerri}}, conformal_shift, 0},
      {{"prop1-lee-field", "Proposition 1 / Eq. (12)", K::Analytic, 0.1, {M::Hopf}, {M::Hopf}}, prop1_lee_field, 0},
      {{"prop2-lee-field", "Proposition 2 (Lee field)", K::Analytic, 0.1, {M::Tricerri}, {M::Tricerri}},
       prop2_lee_field, 0},
      {{"lee-closed", "closed Lee form, omega = df", K::FiniteDifference, 1.0,
        {M::Hopf, M::Tricerri, M::Flat, M::SyntheticNull}, {M::Hopf, M::Tricerri, M::Flat, M::SyntheticNull}},
       lee_closed, 0},
      {{"parallel-lee", "Proposition 1", K::FiniteDifference, 1.0, {M::Hopf, M::Tricerri, M::Flat, M::SyntheticNull},
        {M::Hopf, M::Flat, M::SyntheticNull}}, parallel_lee, 0},
      {{"nonparallel-lee", "Proposition 2", K::Exact, 0.0, {M::Tricerri}, {M::Tricerri}}, nonparallel_lee, 0},
      {{"prop2-lee-derivative", "Proposition 2 (nabla_{Z_j} B = Z_j / 2)", K::FiniteDifference, 1.0, {M::Tricerri},
        {M::Tricerri}}, prop2_lee_derivative, 0},
      {{"eq20-nabla-j", "Eq. (20)", K::FiniteDifference, 1.0, {M::Hopf, M::Tricerri, M::Flat},
        {M::Hopf, M::Tricerri, M::Flat}}, eq20_nabla_j, 0},
      {{"weyl-dj", "Weyl connection, DJ = 0", K::FiniteDifference, 1.0, {M::Hopf, M::Tricerri, M::Flat},
        {M::Hopf, M::Tricerri, M::Flat}}, weyl_dj, 0},
      {{"thm1-totally-geodesic", "Theorem 1", K::FiniteDifference, 10.0, {M::Hopf, M::SyntheticNull},
        {M::Hopf, M::SyntheticNull}}, thm1_totally_geodesic, 0},
      {{"eq1-leaf-index", "Eq. (1)", K::Exact, 0.0, {M::Hopf}, {M::Hopf}}, eq1_leaf_index, 0},
      {{"leaf-level-set", "Eq. (11) (leaves are level sets of |z|_{s,n})", K::Analytic, 1.0, {M::Hopf}, {M::Hopf}},
       leaf_level_set, 0},
      {{"eq5-nv-invariance", "Lemma 1 / Eq. (5)", K::Analytic, 1.0, {M::SyntheticNull}, {M::SyntheticNull}},
       eq5_nv_invariance, 0},
      {{"eq8-transversal", "Eq. (8)", K::Analytic, 0.1, {M::SyntheticNull}, {M::SyntheticNull}}, eq8_transversal, 0},
      {{"lemma6-pair", "Lemma 6 / Eqs. (22)-(23)", K::Analytic, 0.1, {M::SyntheticNull}, {M::SyntheticNull}},
       lemma6_pair, 3},
      {{"lemma6-frame-invariance", "Lemma 6 (independence of the frame)", K::Analytic, 1.0, {M::SyntheticNull},
        {M::SyntheticNull}}, lemma6_frame_invariance, 3},
      {{"thm4-integrability", "Theorem 4", K::FiniteDifference, 10.0, {M::Hopf, M::Tricerri, M::SyntheticNull},
        {M::Hopf, M::SyntheticNull}}, thm4_integrability, 0},
      {{"thm4-plane-gram", "Theorem 4 (metric on span{A,B})", K::Analytic, 1.0, {M::Hopf, M::SyntheticNull},
        {M::Hopf, M::SyntheticNull}}, thm4_plane_gram, 0},
      {{"thm4-totally-geodesic", "Theorem 4 (h^P = 0)", K::FiniteDifference, 10.0, {M::Hopf, M::SyntheticNull},
        {M::Hopf, M::SyntheticNull}}, thm4_totally_geodesic, 0},
      {{"eq18-mean-curvature", "Proposition 3 / Eq. (18)", K::FiniteDifference, 10.0,
        {M::Hopf, M::Tricerri, M::Flat}, {M::Hopf, M::Tricerri, M::Flat}}, eq18_mean_curvature, 0},
      {{"eq18-minimal", "Proposition 3 (minimal iff tangent to the Lee field)", K::FiniteDifference, 10.0, {M::Hopf},
        {M::Hopf}}, eq18_minimal, 0},
      {{"hopf-diffeo-roundtrip", "diffeomorphism F and its inverse", K::Analytic, 1.0, {M::Hopf},
        {M::Hopf}}, hopf_diffeo_roundtrip, 0},
      {{"deck-invariance", "Theorem 2", K::Analytic, 1e-3, {M::Hopf}, {M::Hopf}}, deck_invariance, 0},
      {{"torus-isometry", "Lemma 4", K::Analytic, 1e-3, {M::Hopf}, {M::Hopf}}, torus_isometry, 0},
      {{"retraction-monotonicity", "Theorem 3 (retraction F_t)", K::Analytic, 1.0, {M::Hopf}, {M::Hopf}},
       retraction_monotonicity, 0},
      {{"submersion-fibre-invariance", "Eq. (17)", K::FiniteDifference, 1.0, {M::Hopf}, {M::Hopf}},
       submersion_fibre_invariance, 0},
      {{"gab-invariance", "Proposition 2 (G_{alpha,beta} invariance)", K::Analytic, 1e-3, {M::Tricerri},
        {M::Tricerri}}, gab_invariance, 0},
      {{"thm5-leaf-space", "Theorem 5 / Eq. (28)", K::Analytic, 1.0, {M::Hopf}, {M::Hopf}}, thm5_leaf_space, 0},
      {{"lemma7-leaf-radius", "Lemma 7", K::Analytic, 1.0, {M::Hopf}, {M::Hopf}}, lemma7_leaf_radius, 0},
      {{"cayley-boundary", "Cayley transform", K::Analytic, 1.0, {M::Hopf}, {M::Hopf}}, cayley_boundary, 0},
      {{"levi-signature", "Levi form of signature (s, n-s-1)", K::Exact, 0.0, {M::Hopf}, {M::Hopf}},
       levi_signature, 0},
      {{"cr-leaf-coherence", "T_{1,0}(L)", K::Analytic, 1.0, {M::Hopf}, {M::Hopf}}, cr_leaf_coherence, 0},
      {{"levi-hermitian", "Levi form", K::FiniteDifference, 1.0, {M::Hopf}, {M::Hopf}}, levi_hermitian, 0},
      {{"levi-null", "Proposition 4", K::FiniteDifference, 1.0, {M::SyntheticNull}, {M::SyntheticNull}}, levi_null, 0},
  };
  return table;
}

const Entry* find_entry(const std::string& name) {
  for (const Entry& e : entries())
    if (e.info.name == name) return &e;
  return nullptr;
}

}  // namespace

double SuiteInfo::tolerance(const RunConfig& cfg) const {
  switch (kind) {
    case ToleranceKind::Analytic: return factor * cfg.tol_analytic;
    case ToleranceKind::FiniteDifference: return factor * cfg.tol_fd;
    case ToleranceKind::Exact: return 0.0;
  }
  return 0.0;
}

bool SuiteInfo::supports(ModelKind m) const { return std::find(supported.begin(), supported.end(), m) != supported.end(); }

bool SuiteInfo::expected_on(ModelKind m) const { return std::find(expected.begin(), expected.end(), m) != expected.end(); }

const std::vector<SuiteInfo>& suite_catalogue() {
  static const std::vector<SuiteInfo> cat = [] {
    std::vector<SuiteInfo> v;
    for (const Entry& e : entries()) v.push_back(e.info);
    return v;
  }();
  return cat;
}

const SuiteInfo* find_suite(const std::string& name) {
  const Entry* e = find_entry(name);
  return e ? &e->info : nullptr;
}

bool suite_applicable(const SuiteInfo& suite, const RunConfig& cfg) {
  const Entry* e = find_entry(suite.name);
  return e && suite.expected_on(cfg.model) && cfg.n >= e->min_n;
}

double evaluate_suite_point(const SuiteInfo& suite, const RunConfig& cfg, Rng& rng) {
  const Entry* e = find_entry(suite.name);
  if (!e) throw UsageError("unknown suite '" + suite.name + "'");
  return e->eval(cfg, rng);
}

}  // namespace lcklab
