#include <gtest/gtest.h>

#include <cmath>

#include "lcklab/lck.hpp"
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

VectorField affine_field(const CVec& c, const CMat& m) {
  return [c, m](const CVec& p) { return TangentVector::real(CVec(c + m * p)); };
}

}  // namespace

TEST(LeeField, HopfPlusRegion) {
  const HopfModel hm{2, 1, 0.5, HopfRegion::Plus};
  const CVec z = cv({Complex(0.3, 0.4), Complex(1.1, -0.2)});
  const LeeData d = lee_data(hopf_lck(hm), z);
  // B = -2 (z^j Z_j + zbar^j Zbar_j), g(B,B) = 4.
  EXPECT_LT((d.B.hol() + 2.0 * z).norm(), 1e-12);
  EXPECT_LT((d.B.antihol() + 2.0 * z.conjugate()).norm(), 1e-12);
  EXPECT_NEAR(d.c, 4.0, 1e-10);
}

TEST(LeeField, HopfMinusRegionIsTimelike) {
  const HopfModel hm{2, 1, 0.5, HopfRegion::Minus};
  const LeeData d = lee_data(hopf_lck(hm), cv({Complex(1.0, 0.5), Complex(0.2, 0.3)}));
  EXPECT_NEAR(d.c, -4.0, 1e-10);
}

TEST(LeeField, Tricerri) {
  const CVec p = cv({Complex(0.4, 1.6), Complex(0.1, 0.2)});
  const LeeData d = lee_data(tricerri_lck(TricerriModel{1, 1}), p);
  // B = i Im(w) (d/dw - d/dwbar)
  EXPECT_LT(std::abs(d.B[0] - Complex(0.0, 1.6)), 1e-12);
  EXPECT_LT(std::abs(d.B[2] - Complex(0.0, -1.6)), 1e-12);
  EXPECT_LT(std::abs(d.B[1]) + std::abs(d.B[3]), 1e-12);
  EXPECT_NEAR(d.c, 1.0, 1e-10);
}

TEST(LeeField, Identities) {
  Rng rng(5);
  const HopfModel hm{3, 1, 0.5, HopfRegion::Plus};
  const LCKStructure lck = hopf_lck(hm);
  for (int k = 0; k < 20; ++k) {
    const LeeData d = lee_data(lck, sample_hopf_point(hm, rng));
    EXPECT_LT(lee_identity_residual(lck, d), 1e-9);
  }
}

TEST(LeeForm, TricerriIsExact) {
  const LCKStructure lck = tricerri_lck(TricerriModel{2, 1});
  const CVec p = cv({Complex(-0.2, 0.9), 0.3, Complex(0, 0.4)});
  EXPECT_LT(conformal_factor_residual(lck, p), 1e-9);
  EXPECT_LT(lee_closedness_residual(lck, p), 1e-6);
}

TEST(Weyl, ZeroLeeFormGivesLeviCivita) {
  const LCKStructure lck = flat_kahler(2, 1);
  const CVec z = cv({0.5, Complex(0.1, 0.2)});
  const VectorField y = affine_field(cv({1.0, 0.0}), CMat::Identity(2, 2));
  const TangentVector x = TangentVector::real(cv({0.3, Complex(0, 1)}));
  EXPECT_LT((weyl_connection(lck, x, y, z) - covariant_derivative(lck.chart, x, y, z)).norm(), 1e-15);
}

TEST(Weyl, HopfPreservesJ) {
  Rng rng(9);
  const HopfModel hm{2, 1};
  const LCKStructure lck = hopf_lck(hm);
  for (int k = 0; k < 50; ++k) {
    const CVec z = sample_hopf_point(hm, rng);
    CMat m(2, 2);
    m << rng.complex_normal(), rng.complex_normal(), rng.complex_normal(), rng.complex_normal();
    const VectorField y = affine_field(rng.complex_vector(2), m);
    const TangentVector x = random_real_vector(2, rng);
    EXPECT_LT(weyl_J_defect(lck, x, y, z).norm(), 1e-6);
  }
}

TEST(Weyl, LeeFieldSelfDerivative) {
  // D_B B = nabla_B B - 1/2 (2 c B - c B) = -2 B on the Plus region.
  const LCKStructure lck = hopf_lck(HopfModel{2, 1});
  const CVec z = cv({Complex(0.2, 0.1), Complex(0.6, 0.7)});
  const VectorField b = lee_field(lck);
  const TangentVector bz = b(z);
  EXPECT_LT((weyl_connection(lck, bz, b, z) + 2.0 * bz).norm(), 1e-8 * bz.norm());
}

TEST(NablaJ, FlatKahlerVanishes) {
  const LCKStructure lck = flat_kahler(2, 1);
  const VectorField y = affine_field(cv({1.0, 2.0}), CMat::Identity(2, 2));
  EXPECT_LT(nabla_J_defect(lck, TangentVector::real(cv({1.0, 0.0})), y, cv({0.1, 0.2})).norm(), 1e-15);
}

TEST(NablaJ, HopfAndTricerriSatisfyIdentity) {
  Rng rng(13);
  const HopfModel hm{3, 2};
  const TricerriModel tm{2, 1};
  const LCKStructure hopf = hopf_lck(hm);
  const LCKStructure tric = tricerri_lck(tm);
  for (int k = 0; k < 100; ++k) {
    {
      const CVec z = sample_hopf_point(hm, rng);
      CMat m = CMat::Identity(3, 3) * rng.complex_normal();
      const VectorField y = affine_field(rng.complex_vector(3), m);
      EXPECT_LT(nabla_J_defect(hopf, random_real_vector(3, rng), y, z).norm(), 1e-6);
    }
    {
      const CVec p = sample_tricerri_point(tm, rng);
      CMat m = CMat::Identity(3, 3) * rng.complex_normal();
      const VectorField y = affine_field(rng.complex_vector(3), m);
      EXPECT_LT(nabla_J_defect(tric, random_real_vector(3, rng), y, p).norm(), 1e-6);
    }
  }
}

TEST(ParallelLee, HopfIsParallel) {
  Rng rng(17);
  for (HopfRegion r : {HopfRegion::Plus, HopfRegion::Minus}) {
    const HopfModel hm{3, 1, 0.5, r};
    const LCKStructure lck = hopf_lck(hm);
    for (int k = 0; k < 20; ++k) EXPECT_LT(parallel_lee_residual(lck, sample_hopf_point(hm, rng)), 1e-6);
  }
}

TEST(ParallelLee, TricerriIsNotParallel) {
  const LCKStructure lck = tricerri_lck(TricerriModel{1, 1});
  EXPECT_GT(parallel_lee_residual(lck, cv({Complex(0.3, 1.0), 0.5})), 0.01);
}

TEST(ParallelLee, FlatKahlerIsZero) {
  EXPECT_EQ(parallel_lee_residual(flat_kahler(2, 1), cv({0.1, 0.2})), 0.0);
}
