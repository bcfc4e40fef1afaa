#include <gtest/gtest.h>

#include <cmath>

#include "lcklab/foliations.hpp"
#include "lcklab/models.hpp"
#include "lcklab/sampling.hpp"

using namespace lcklab;

namespace {

CVec cv(std::initializer_list<Complex> xs) {
  CVec v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index k = 0;
  for (Complex x : xs) v(k++) = x;
  return v;
}

RVec e(int i, int dim) { return RVec::Unit(dim, i - 1); }

RMat cols(std::initializer_list<RVec> vs) {
  RMat m(vs.begin()->size(), static_cast<Eigen::Index>(vs.size()));
  Eigen::Index k = 0;
  for (const RVec& v : vs) m.col(k++) = v;
  return m;
}

}  // namespace

TEST(FirstFoliation, HopfUnitPoint) {
  const FoliationFibre f = first_foliation_fibre(hopf_lck(HopfModel{}), cv({0.0, 1.0}));
  EXPECT_EQ(f.tangent.dim(), 3);
  const RVec b = lee_data(hopf_lck(HopfModel{}), cv({0.0, 1.0})).B.real_coords();
  EXPECT_GT(containment_residual(f.tangent.basis(), b), 0.5);
  EXPECT_EQ(signature_of(f.form, f.tangent).negative, 2);
  EXPECT_NEAR(f.c, 4.0, 1e-12);
}

TEST(FirstFoliation, HopfMinusIndex) {
  const HopfModel hm{2, 1, 0.5, HopfRegion::Minus};
  const FoliationFibre f = first_foliation_fibre(hopf_lck(hm), cv({1.0, Complex(0.2, 0.3)}));
  const Signature sig = signature_of(f.form, f.tangent);
  EXPECT_EQ(sig.negative, 1);
  EXPECT_EQ(sig.positive, 2);
}

TEST(FirstFoliation, LeafIndexTable) {
  Rng rng(41);
  for (auto [n, s] : {std::pair{2, 1}, {3, 1}, {3, 2}}) {
    for (HopfRegion r : {HopfRegion::Plus, HopfRegion::Minus}) {
      const HopfModel hm{n, s, 0.5, r};
      const FoliationFibre f = first_foliation_fibre(hopf_lck(hm), sample_hopf_point(hm, rng));
      EXPECT_EQ(signature_of(f.form, f.tangent).negative, r == HopfRegion::Plus ? 2 * s : 2 * s - 1);
    }
  }
}

TEST(FirstFoliation, SyntheticNullLee) {
  const SemiEuclideanForm h = SemiEuclideanForm::standard(2, 4);
  const RVec b = e(1, 4) + e(3, 4);
  const FoliationFibre f = first_foliation_fibre(synthetic_point_data(h, b));
  EXPECT_TRUE(same_span(f.tangent.basis(), cols({b, e(2, 4), e(4, 4)})));
  EXPECT_TRUE(same_span(f.radical.basis(), cols({b})));
  EXPECT_EQ(f.c, 0.0);
}

TEST(FirstFoliation, VanishingLeeFieldRejected) {
  EXPECT_THROW(first_foliation_fibre(flat_kahler(2, 1), cv({0.1, 0.2})), PreconditionError);
}

TEST(LightlikeTransversal, HandExample) {
  const SemiEuclideanForm h = SemiEuclideanForm::standard(2, 4);
  const RVec b = e(1, 4) + e(3, 4);
  const RVec omega = h.gram() * b;
  const FrameSubspace screen(h, cols({e(2, 4), e(4, 4)}));
  const RVec n = lightlike_transversal(h, omega, b, screen, e(1, 4));
  const RVec want = -0.5 * e(1, 4) + 0.5 * e(3, 4);
  EXPECT_LT((n - want).norm(), 1e-15);
  EXPECT_EQ(inner(h, n, n), 0.0);
  EXPECT_EQ(omega.dot(n), 1.0);
  // Scaling V and changing the complement leave N_V unchanged.
  EXPECT_LT((lightlike_transversal(h, omega, b, screen, 5.0 * e(1, 4)) - want).norm(), 1e-15);
  EXPECT_LT((lightlike_transversal(h, omega, b, screen, e(1, 4) + 2.0 * b) - want).norm(), 1e-15);
}

TEST(LightlikeTransversal, Preconditions) {
  const SemiEuclideanForm h = SemiEuclideanForm::standard(2, 4);
  const RVec b = e(1, 4) + e(3, 4);
  const RVec omega = h.gram() * b;
  const FrameSubspace screen(h, cols({e(2, 4), e(4, 4)}));
  EXPECT_THROW(lightlike_transversal(h, omega, b, screen, e(2, 4)), PreconditionError);
  EXPECT_THROW(lightlike_transversal(h, omega, b, screen, 3.0 * b), PreconditionError);
}

TEST(GaussWeingarten, HopfTotallyGeodesic) {
  Rng rng(43);
  const HopfModel hm{3, 1};
  const LCKStructure lck = hopf_lck(hm);
  for (int k = 0; k < 50; ++k) {
    const FoliationFibre f = first_foliation_fibre(lck, sample_hopf_point(hm, rng));
    const RVec x = f.tangent.basis() * rng.real_vector(f.tangent.dim());
    const RVec y = f.tangent.basis() * rng.real_vector(f.tangent.dim());
    const SecondFundamentalData h = gauss_weingarten(lck, f, x, y, f.transversal.vector(0));
    EXPECT_LT(h.h_xy.norm(), 1e-6);
  }
}

TEST(GaussWeingarten, NullLeeTotallyGeodesic) {
  const LCKStructure lck = synthetic_null(2, 1);
  const FoliationFibre f = first_foliation_fibre(lck, cv({0.3, 0.1}));
  const SecondFundamentalData h = gauss_weingarten(lck, f, f.tangent.vector(0), f.tangent.vector(1),
                                                   f.transversal.vector(0));
  EXPECT_LT(h.h_xy.norm(), 1e-12);
}

TEST(SecondFoliation, HopfPlaneGram) {
  const FoliationFibre p = second_foliation_fibre(hopf_lck(HopfModel{}), cv({0.2, 1.0}));
  EXPECT_LT((p.tangent.gram_restricted() - 4.0 * RMat::Identity(2, 2)).norm(), 1e-12);
  const HopfModel minus{2, 1, 0.5, HopfRegion::Minus};
  const FoliationFibre q = second_foliation_fibre(hopf_lck(minus), cv({1.0, 0.2}));
  EXPECT_LT((q.tangent.gram_restricted() + 4.0 * RMat::Identity(2, 2)).norm(), 1e-12);
}

TEST(SecondFoliation, SyntheticPlaneIsTotallyNull) {
  const SemiEuclideanForm h = SemiEuclideanForm::standard(2, 6);
  const FoliationFibre p = second_foliation_fibre(synthetic_point_data(h, e(1, 6) + e(3, 6)));
  EXPECT_EQ(p.tangent.dim(), 2);
  EXPECT_EQ(p.tangent.gram_restricted().cwiseAbs().maxCoeff(), 0.0);
  EXPECT_EQ(radical(h, p.tangent).dim(), 2);
}

TEST(SecondFoliation, Integrability) {
  Rng rng(47);
  const HopfModel hm{3, 2};
  for (int k = 0; k < 20; ++k) EXPECT_LT(integrability_residual(hopf_lck(hm), sample_hopf_point(hm, rng)), 1e-5);
  EXPECT_EQ(integrability_residual(synthetic_null(3, 1), cv({0.1, 0.2, 0.3})), 0.0);
}

TEST(SecondFoliation, LeePlaneTotallyGeodesic) {
  Rng rng(53);
  const HopfModel hm{2, 1};
  for (int k = 0; k < 20; ++k) EXPECT_LT(h_P_residual(hopf_lck(hm), sample_hopf_point(hm, rng)), 1e-5);
  EXPECT_EQ(h_P_residual(synthetic_null(3, 1), cv({0.1, 0.2, 0.3})), 0.0);
}

TEST(TransversalPair, HandExample) {
  const SemiEuclideanForm h = SemiEuclideanForm::standard(2, 6);
  const RVec b = e(1, 6) + e(3, 6);
  const PointData d = synthetic_point_data(h, b);
  EXPECT_LT((d.A + e(2, 6) + e(4, 6)).norm(), 1e-15);
  const FrameSubspace screen(h, cols({e(5, 6), e(6, 6)}));
  const TransversalPair p = isotropic_transversal_pair(h, d.omega, d.theta, d.A, d.B, screen, e(1, 6), e(2, 6));
  EXPECT_NEAR(p.D, 1.0, 1e-15);
  RVec n1(6), n2(6);
  n1 << 0, 0.5, 0, -0.5, 0, 0;
  n2 << -0.5, 0, 0.5, 0, 0, 0;
  EXPECT_LT((p.N1 - n1).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LT((p.N2 - n2).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_EQ(pair_constraint_residual(h, d.omega, d.theta, p), 0.0);

  // V'_i = f_i^j V_j with f = [[2,1],[0,3]].
  const TransversalPair q =
      isotropic_transversal_pair(h, d.omega, d.theta, d.A, d.B, screen, 2.0 * e(1, 6) + e(2, 6), 3.0 * e(2, 6));
  EXPECT_LT((q.N1 - n1).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LT((q.N2 - n2).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(TransversalPair, DegenerateComplementRejected) {
  const SemiEuclideanForm h = SemiEuclideanForm::standard(2, 6);
  const RVec b = e(1, 6) + e(3, 6);
  const PointData d = synthetic_point_data(h, b);
  const FrameSubspace screen(h, cols({e(5, 6), e(6, 6)}));
  EXPECT_THROW(isotropic_transversal_pair(h, d.omega, d.theta, d.A, d.B, screen, e(1, 6), RVec(e(1, 6) + b)),
               DegenerateError);
}

TEST(TransversalPair, NeedsRealDimensionSix) {
  const SemiEuclideanForm h = SemiEuclideanForm::standard(2, 4);
  const PointData d = synthetic_point_data(h, e(1, 4) + e(3, 4));
  EXPECT_THROW(isotropic_transversal_pair(h, d.omega, d.theta, d.A, d.B, FrameSubspace::zero(4), e(1, 4), e(2, 4)),
               PreconditionError);
}

TEST(MeanCurvature, LeeTangentLineIsMinimal) {
  ComplexImmersion imm{1, [](const CVec& u) { return cv({0.0, u(0)}); },
                       [](const CVec&) { return CMat((CMat(2, 1) << 0.0, 1.0).finished()); }};
  const MeanCurvatureReport r = complex_submanifold_mean_curvature(hopf_lck(HopfModel{}), imm, cv({Complex(0.6, 0.8)}));
  EXPECT_LT(r.bperp_norm, 1e-9);
  EXPECT_LT(r.mean_curvature_norm, 1e-5);
}

TEST(MeanCurvature, OffsetLine) {
  const double c0 = 0.3;
  ComplexImmersion imm{1, [c0](const CVec& u) { return cv({c0, u(0)}); },
                       [](const CVec&) { return CMat((CMat(2, 1) << 0.0, 1.0).finished()); }};
  const MeanCurvatureReport r = complex_submanifold_mean_curvature(hopf_lck(HopfModel{}), imm, cv({1.0}));
  EXPECT_LT(r.eq18_residual, 1e-5);
  EXPECT_LT(r.h_plus_half_bperp, 1e-5);
  EXPECT_GT(r.bperp_norm, 0.1);
}

TEST(MeanCurvature, FlatLinearSubspace) {
  ComplexImmersion imm{1, [](const CVec& u) { return cv({u(0), 0.0}); },
                       [](const CVec&) { return CMat((CMat(2, 1) << 1.0, 0.0).finished()); }};
  const MeanCurvatureReport r = complex_submanifold_mean_curvature(flat_kahler(2, 1), imm, cv({0.4}));
  EXPECT_EQ(r.eq18_residual, 0.0);
  EXPECT_EQ(r.bperp_norm, 0.0);
  EXPECT_EQ(r.mean_curvature_norm, 0.0);
}
