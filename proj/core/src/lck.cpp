#include "lcklab/lck.hpp"

#include <cmath>

namespace lcklab {

namespace {

TangentVector frame_vector(int n, int a) {
  CVec c = CVec::Zero(2 * n);
  c(a) = 1.0;
  return TangentVector(std::move(c));
}

}  // namespace

LeeData lee_data(const LCKStructure& lck, const CVec& z) {
  LeeData d;
  d.z = z;
  d.omega = lck.lee_form(z);
  d.B = raise(lck.chart, z, d.omega);
  d.A = -apply_J(d.B);
  d.theta = compose_J(d.omega);
  d.Omega = kahler_form(lck.chart, z);
  d.c = metric_product(lck.chart, z, d.B, d.B).real();
  return d;
}

VectorField lee_field(const LCKStructure& lck) {
  return [lck](const CVec& p) { return raise(lck.chart, p, lck.lee_form(p)); };
}

VectorField anti_lee_field(const LCKStructure& lck) {
  return [lck](const CVec& p) { return -apply_J(raise(lck.chart, p, lck.lee_form(p))); };
}

double lee_identity_residual(const LCKStructure& lck, const LeeData& d) {
  double r = std::abs(d.theta(d.B));
  r = std::max(r, std::abs(d.omega(d.A)));
  r = std::max(r, std::abs(d.theta(d.A) - d.c));
  r = std::max(r, std::abs(d.omega(d.B) - d.c));
  const Covector back = lower(lck.chart, d.z, d.B);
  r = std::max(r, (back.components() - d.omega.components()).cwiseAbs().maxCoeff());
  return r;
}

double lee_closedness_residual(const LCKStructure& lck, const CVec& z, const FdOptions& fd) {
  auto alpha = [&](const CVec& p) { return RVec(lck.lee_form(p).real_coords()); };
  return exterior_derivative_1form(lck.chart, alpha, z, fd).cwiseAbs().maxCoeff();
}

double conformal_factor_residual(const LCKStructure& lck, const CVec& z, const FdOptions& fd) {
  if (!lck.conformal_factor) throw PreconditionError("structure has no conformal factor");
  auto f = [&](const CVec& p) { return Complex(lck.conformal_factor(p), 0.0); };
  const Covector df = differential(lck.chart, f, z, fd);
  return (df.components() - lck.lee_form(z).components()).cwiseAbs().maxCoeff();
}

TangentVector weyl_connection(const LCKStructure& lck, const TangentVector& x, const VectorField& y,
                              const CVec& z, const FdOptions& fd) {
  const LeeData d = lee_data(lck, z);
  const TangentVector yz = y(z);
  const TangentVector shift = d.omega(x) * yz + d.omega(yz) * x - metric_product(lck.chart, z, x, yz) * d.B;
  return covariant_derivative(lck.chart, x, y, z, fd) - 0.5 * shift;
}

TangentVector weyl_J_defect(const LCKStructure& lck, const TangentVector& x, const VectorField& y,
                            const CVec& z, const FdOptions& fd) {
  VectorField jy = [&](const CVec& p) { return apply_J(y(p)); };
  return weyl_connection(lck, x, jy, z, fd) - apply_J(weyl_connection(lck, x, y, z, fd));
}

TangentVector nabla_J_defect(const LCKStructure& lck, const TangentVector& x, const VectorField& y,
                             const CVec& z, const FdOptions& fd) {
  const LeeData d = lee_data(lck, z);
  const TangentVector yz = y(z);
  VectorField jy = [&](const CVec& p) { return apply_J(y(p)); };
  const TangentVector lhs =
      covariant_derivative(lck.chart, x, jy, z, fd) - apply_J(covariant_derivative(lck.chart, x, y, z, fd));
  const Complex gxy = metric_product(lck.chart, z, x, yz);
  const Complex omega_xy = metric_product(lck.chart, z, x, apply_J(yz));
  const TangentVector rhs =
      d.theta(yz) * x - d.omega(yz) * apply_J(x) - gxy * d.A - omega_xy * d.B;
  return lhs - 0.5 * rhs;
}

double parallel_lee_residual(const LCKStructure& lck, const CVec& z, const FdOptions& fd) {
  const MetricChart& chart = lck.chart;
  const int m = 2 * chart.n();
  const Covector omega = lck.lee_form(z);
  const ConnectionCoefficients gamma = christoffel(chart, z, ChristoffelPath::Preferred, fd);
  auto comps = [&](const CVec& p) { return CVec(lck.lee_form(p).components()); };
  double r = 0.0;
  for (int a = 0; a < m; ++a) {
    const CVec d_omega = derivative_along(chart, comps, z, frame_vector(chart.n(), a), fd);
    for (int b = 0; b < m; ++b) {
      Complex conn = 0.0;
      for (int c = 0; c < m; ++c) conn += gamma(c, a, b) * omega.components()(c);
      r = std::max(r, std::abs(d_omega(b) - conn));
    }
  }
  return r;
}

}  // namespace lcklab
