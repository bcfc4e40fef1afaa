#pragma once

// Locally conformal Kähler apparatus over a metric chart.

#include <functional>

#include "lcklab/charts.hpp"

namespace lcklab {

using LeeFormFn = std::function<Covector(const CVec&)>;

struct LCKStructure {
  MetricChart chart;
  LeeFormFn lee_form;
  /// Optional local f with omega = df.
  ScalarField conformal_factor;
  /// Chart carries a parallel Lee form; c is then constant.
  bool parallel_lee = false;
};

struct LeeData {
  CVec z;
  TangentVector B;  // g(X, B) = omega(X)
  TangentVector A;  // -J B
  Covector omega;
  Covector theta;   // omega o J
  RMat Omega;       // g(X, JY) in real coordinates
  double c = 0.0;   // g(B, B)
};

LeeData lee_data(const LCKStructure& lck, const CVec& z);

VectorField lee_field(const LCKStructure& lck);
VectorField anti_lee_field(const LCKStructure& lck);

/// Max of |theta(B)|, |omega(A)|, |theta(A) - c|, |omega(B) - c| and the
/// lowering roundtrip |g(., B) - omega|.
double lee_identity_residual(const LCKStructure& lck, const LeeData& d);

/// max |d omega| in real coordinates.
double lee_closedness_residual(const LCKStructure& lck, const CVec& z, const FdOptions& fd = {});
/// max |omega - df| when the structure has a conformal factor.
double conformal_factor_residual(const LCKStructure& lck, const CVec& z, const FdOptions& fd = {});

/// D_X Y = nabla_X Y - 1/2 { omega(X) Y + omega(Y) X - g(X,Y) B }.
TangentVector weyl_connection(const LCKStructure& lck, const TangentVector& x, const VectorField& y,
                              const CVec& z, const FdOptions& fd = {});

/// D_X (JY) - J D_X Y.
TangentVector weyl_J_defect(const LCKStructure& lck, const TangentVector& x, const VectorField& y,
                            const CVec& z, const FdOptions& fd = {});

/// (nabla_X J) Y - 1/2 { theta(Y) X - omega(Y) JX - g(X,Y) A - Omega(X,Y) B }.
TangentVector nabla_J_defect(const LCKStructure& lck, const TangentVector& x, const VectorField& y,
                             const CVec& z, const FdOptions& fd = {});

/// max over frame fields X, Y of |X(omega(Y)) - omega(nabla_X Y)|.
double parallel_lee_residual(const LCKStructure& lck, const CVec& z, const FdOptions& fd = {});

}  // namespace lcklab
