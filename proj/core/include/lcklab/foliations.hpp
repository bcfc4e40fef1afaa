#pragma once

// The two canonical foliations: ker(omega) and the plane field span{A, B}.
// Fibres are expressed in real interleaved coordinates.

#include <functional>

#include "lcklab/lck.hpp"
#include "lcklab/semieuclid.hpp"

namespace lcklab {

/// Pointwise Lee data in real coordinates.
struct PointData {
  SemiEuclideanForm form;
  RVec omega;
  RVec theta;
  RVec B;
  RVec A;
  double c = 0.0;
};

PointData point_data(const LCKStructure& lck, const CVec& z);
/// omega = g(., B), A = -JB, theta = omega o J for the standard J on
/// interleaved coordinates. The form must be J-invariant.
PointData synthetic_point_data(const SemiEuclideanForm& form, const RVec& b);

/// J on interleaved real coordinates: d/dx -> d/dy, d/dy -> -d/dx.
RMat standard_J(int real_dim);

struct FoliationFibre {
  CVec z;
  SemiEuclideanForm form;
  FrameSubspace tangent;
  FrameSubspace radical;
  FrameSubspace screen;
  FrameSubspace transversal;
  double c = 0.0;
};

/// |c| at or below this (relative to |B|^2) counts as a null Lee field.
inline constexpr double kNullLeeTolerance = 1e-9;

FoliationFibre first_foliation_fibre(const PointData& d);
FoliationFibre first_foliation_fibre(const LCKStructure& lck, const CVec& z);

/// N_V = (1/omega(V)) { V - g(V,V)/(2 omega(V)) B }.
RVec lightlike_transversal(const SemiEuclideanForm& form, const RVec& omega, const RVec& b,
                           const FrameSubspace& screen, const RVec& v);

struct SecondFundamentalData {
  RVec h_xy;            // h(X, Y)
  RVec h_yx;            // h(Y, X)
  RVec induced;         // tan(nabla_X Y)
  RVec shape;           // A_V X = -tan(nabla_X V)
  RVec transversal_V;   // tra(nabla_X V)
  double symmetry_residual = 0.0;
  double extension_residual = 0.0;  // h(X,Y) from two different extensions of Y
};

/// Gauss and Weingarten split of the first foliation at z. X, Y are tangent,
/// V transversal (real coordinates).
SecondFundamentalData gauss_weingarten(const LCKStructure& lck, const FoliationFibre& fibre, const RVec& x,
                                       const RVec& y, const RVec& v, const FdOptions& fd = {});

FoliationFibre second_foliation_fibre(const PointData& d);
FoliationFibre second_foliation_fibre(const LCKStructure& lck, const CVec& z);

/// |[A,B] - (its Euclidean projection onto span{A,B})|.
double integrability_residual(const LCKStructure& lck, const CVec& z, const FdOptions& fd = {});

struct TransversalPair {
  RVec N1;
  RVec N2;
  double D = 0.0;  // theta(V1) omega(V2) - omega(V1) theta(V2)
  double lambda11 = 0.0;
  double lambda12 = 0.0;
  double lambda22 = 0.0;
};

/// Isotropic pair for c = 0, n >= 3. {V1, V2} frames a complement of P in
/// S(P-perp)-perp.
TransversalPair isotropic_transversal_pair(const SemiEuclideanForm& form, const RVec& omega, const RVec& theta,
                                           const RVec& a, const RVec& b, const FrameSubspace& screen,
                                           const RVec& v1, const RVec& v2);

/// Max of |theta(N1) - 1|, |omega(N2) - 1|, |theta(N2)|, |omega(N1)|, |g(Ni, Nj)|.
double pair_constraint_residual(const SemiEuclideanForm& form, const RVec& omega, const RVec& theta,
                                const TransversalPair& pair);

/// Max transversal component of nabla_X Y over X, Y in {A, B}.
double h_P_residual(const LCKStructure& lck, const CVec& z, const FdOptions& fd = {});

/// Holomorphic immersion of an open set of C^m.
struct ComplexImmersion {
  int m = 1;
  std::function<CVec(const CVec&)> map;
  std::function<CMat(const CVec&)> jacobian;  // n x m
};

struct MeanCurvatureReport {
  double eq18_residual = 0.0;      // max |h(JX,JY) + h(X,Y) + g(X,Y) B_perp|
  double h_plus_half_bperp = 0.0;  // |H + B_perp / 2|
  double bperp_norm = 0.0;
  double mean_curvature_norm = 0.0;
};

MeanCurvatureReport complex_submanifold_mean_curvature(const LCKStructure& lck, const ComplexImmersion& imm,
                                                       const CVec& u, const FdOptions& fd = {});

}  // namespace lcklab
