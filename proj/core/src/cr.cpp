#include "lcklab/cr.hpp"

#include <cmath>
#include <numbers>

namespace lcklab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Hermitian-orthonormal basis of {v : row . v = 0}.
CMat kernel_of_row(const CVec& row) {
  const Eigen::Index n = row.size();
  CMat col = row.conjugate();
  Eigen::HouseholderQR<CMat> qr(col);
  CMat q = qr.householderQ();
  return q.rightCols(n - 1);
}

// Affine vector field on C^n: frame components c + M (zeta, conj zeta).
struct AffineField {
  CVec c;
  CMat m;
  CVec at(const CVec& zeta) const {
    CVec p(2 * zeta.size());
    p << zeta, zeta.conjugate();
    return c + m * p;
  }
};

CVec bracket(const AffineField& x, const AffineField& y, const CVec& zeta) {
  return y.m * x.at(zeta) - x.m * y.at(zeta);
}

}  // namespace

CRFibre cr_fibre(const LCKStructure& lck, const CVec& z) {
  const int n = lck.chart.n();
  if (n < 2) throw PreconditionError("CR fibre needs n >= 2");
  const LeeData d = lee_data(lck, z);
  if (d.B.norm() < 1e-8) throw PreconditionError("Lee field vanishes at the point");
  CRFibre f;
  f.z = z;
  f.c = d.c;
  f.t10 = kernel_of_row(d.omega.components().head(n));
  f.h_real.resize(2 * n, 2 * (n - 1));
  for (int k = 0; k < n - 1; ++k) {
    f.h_real.col(2 * k) = TangentVector::real(f.t10.col(k)).real_coords();
    f.h_real.col(2 * k + 1) = TangentVector::real(kI * f.t10.col(k)).real_coords();
  }
  if (std::abs(d.c) > 1e-9 * d.B.components().squaredNorm()) {
    f.characteristic = apply_J(d.B);
  } else {
    RMat row(1, 2 * n);
    row.row(0) = d.omega.real_coords().transpose();
    const RMat tf = null_space(row);
    f.characteristic = TangentVector::from_real_coords(euclidean_complement_within(tf, f.h_real).col(0));
  }
  return f;
}

CVec project_t10(const LCKStructure& lck, const CVec& p, const CVec& v) {
  const int n = lck.chart.n();
  const CVec r = lck.lee_form(p).components().head(n);
  const Complex rv = (r.array() * v.array()).sum();
  return v - r.conjugate() * (rv / r.squaredNorm());
}

double tangential_cr_residual(const LCKStructure& lck, const CVec& z, const ComplexScalarField& f,
                              const FdOptions& fd) {
  const CRFibre fib = cr_fibre(lck, z);
  double r = 0.0;
  for (Eigen::Index k = 0; k < fib.t10.cols(); ++k) {
    const TangentVector zbar = TangentVector::antiholomorphic(fib.t10.col(k).conjugate());
    r = std::max(r, std::abs(derivative_along(lck.chart, f, z, zbar, fd)));
  }
  return r;
}

namespace {

Complex levi_with_fibre(const LCKStructure& lck, const CRFibre& fib, const CVec& v, const CVec& w,
                        const FdOptions& fd) {
  const int n = lck.chart.n();
  const CVec& z = fib.z;
  VectorField x = [&](const CVec& p) { return TangentVector::holomorphic(project_t10(lck, p, v)); };
  VectorField y = [&](const CVec& p) {
    return TangentVector::antiholomorphic(project_t10(lck, p, w).conjugate());
  };
  const TangentVector br = lie_bracket(lck.chart, x, y, z, fd);
  const Eigen::Index k = fib.t10.cols();
  CMat basis = CMat::Zero(2 * n, 2 * k + 1);
  basis.block(0, 0, n, k) = fib.t10;
  basis.block(n, k, n, k) = fib.t10.conjugate();
  basis.col(2 * k) = fib.characteristic.components();
  const CVec coeff = basis.colPivHouseholderQr().solve(br.components());
  return kI * coeff(2 * k);
}

}  // namespace

Complex levi_form(const LCKStructure& lck, const CVec& z, const CVec& v, const CVec& w, const FdOptions& fd) {
  const CRFibre fib = cr_fibre(lck, z);
  return levi_with_fibre(lck, fib, v, w, fd);
}

CMat levi_matrix(const LCKStructure& lck, const CVec& z, const FdOptions& fd) {
  const CRFibre fib = cr_fibre(lck, z);
  const Eigen::Index k = fib.t10.cols();
  CMat l(k, k);
  for (Eigen::Index a = 0; a < k; ++a)
    for (Eigen::Index b = 0; b < k; ++b) l(a, b) = levi_with_fibre(lck, fib, fib.t10.col(a), fib.t10.col(b), fd);
  return l;
}

bool levi_flat_detector(const LCKStructure& lck, const CVec& z, double tol, const FdOptions& fd) {
  return levi_matrix(lck, z, fd).cwiseAbs().maxCoeff() < tol;
}

HermitianSignature hermitian_signature(const CMat& m, double rel_tol) {
  HermitianSignature sig;
  if (m.size() == 0) return sig;
  const CMat h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<CMat> es(h, Eigen::EigenvaluesOnly);
  const RVec ev = es.eigenvalues();
  const double scale = ev.cwiseAbs().maxCoeff();
  const double tau = rel_tol * (scale > 0.0 ? scale : 1.0);
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) > tau) ++sig.positive;
    else if (ev(i) < -tau) ++sig.negative;
    else ++sig.zero;
  }
  return sig;
}

LeafLabel leaf_label_from_w(const HopfModel& model, Complex w) {
  model.validate();
  if (std::abs(std::abs(w) - 1.0) > 1e-9) throw PreconditionError("leaf label needs |w| = 1");
  LeafLabel l;
  l.w = w;
  l.a = arg_0_2pi(w) / (kTwoPi * std::log(model.lambda));
  l.chart_radius = std::pow(model.lambda, -std::floor(l.a)) * std::exp(arg_0_2pi(w) / kTwoPi);
  return l;
}

LeafLabel leaf_label(const HopfModel& model, const CVec& z) {
  model.validate();
  const double b = b_norm2(model.s, z);
  if (!(b > 0.0)) throw DomainError("leaf label needs b_{s,n}(z,z) > 0");
  const double r = std::sqrt(b);
  return leaf_label_from_w(model, std::exp(kI * (kTwoPi * std::log(r) / std::log(model.lambda))));
}

bool same_leaf(const HopfModel& model, const CVec& z, const CVec& zp, double tol) {
  return std::abs(leaf_label(model, z).w - leaf_label(model, zp).w) <= tol;
}

std::optional<int> lemma7_same_leaf(const HopfModel& model, Complex w, Complex wp, int max_m, double tol) {
  model.validate();
  const double step = kTwoPi * std::log(model.lambda);
  for (int k = 0; k <= max_m; ++k) {
    for (int m : {k, -k}) {
      if (std::abs(wp - std::exp(kI * (m * step)) * w) <= tol) return m;
      if (k == 0) break;
    }
  }
  return std::nullopt;
}

bool is_excluded_leaf(const HopfModel& model, Complex w, double tol) {
  const double a = leaf_label_from_w(model, w).a;
  return std::abs(a - std::round(a)) <= tol;
}

double leaf_chart_image_check(const HopfModel& model, Complex w, const std::vector<CVec>& zetas) {
  if (is_excluded_leaf(model, w))
    throw PreconditionError("leaf L_0: use the chart on the annulus lambda < eps < 1 instead");
  const LeafLabel l = leaf_label_from_w(model, w);
  const double scale = std::pow(model.lambda, -std::floor(l.a)) * std::exp(arg_0_2pi(w) / kTwoPi);
  double r = 0.0;
  for (const CVec& zeta : zetas) {
    if (std::abs(b_norm2(model.s, zeta) - 1.0) > 1e-9) throw PreconditionError("zeta is not on the pseudosphere");
    const double norm = std::sqrt(b_norm2(model.s, CVec(scale * zeta)));
    r = std::max(r, std::abs(norm - l.chart_radius));
    if (!(norm > model.lambda && norm < 1.0)) r = std::max(r, 1.0 + std::abs(norm - l.chart_radius));
  }
  return r;
}

CMat siegel_levi_matrix(int n, int s, const CVec& zeta) {
  if (n < 2 || s < 0 || s > n - 1) throw PreconditionError("Siegel Levi matrix needs n >= 2, 0 <= s <= n-1");
  if (zeta.size() != n) throw DimensionError("Siegel point has wrong size");
  const int k = n - 1;
  std::vector<AffineField> l, lbar;
  for (int a = 0; a < k; ++a) {
    AffineField f{CVec::Zero(2 * n), CMat::Zero(2 * n, 2 * n)};
    f.c(a) = 1.0;
    f.m(n - 1, n + a) = 2.0 * kI * eps(s, a);
    AffineField g{CVec::Zero(2 * n), CMat::Zero(2 * n, 2 * n)};
    g.c(n + a) = 1.0;
    g.m(2 * n - 1, a) = -2.0 * kI * eps(s, a);
    l.push_back(f);
    lbar.push_back(g);
  }
  CMat basis(2 * n, 2 * k + 1);
  for (int a = 0; a < k; ++a) {
    basis.col(a) = l[a].at(zeta);
    basis.col(k + a) = lbar[a].at(zeta);
  }
  CVec t = CVec::Zero(2 * n);
  t(n - 1) = 1.0;
  t(2 * n - 1) = 1.0;
  basis.col(2 * k) = t;
  const auto qr = basis.colPivHouseholderQr();
  CMat out(k, k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) out(a, b) = kI * qr.solve(bracket(l[a], lbar[b], zeta))(2 * k);
  return out;
}

double cayley_cr_residual(int s, double r, const CVec& z) {
  const Eigen::Index n = z.size();
  CVec db(n);
  for (Eigen::Index j = 0; j < n; ++j) db(j) = eps(s, static_cast<int>(j)) * std::conj(z(j));
  const CMat t10 = kernel_of_row(db);
  const SiegelBoundaryPoint q = cayley(s, r, z);
  const CMat jac = cayley_jacobian(r, z);
  CVec drho(n);
  for (Eigen::Index a = 0; a + 1 < n; ++a) drho(a) = -eps(s, static_cast<int>(a)) * std::conj(q.zeta(a));
  drho(n - 1) = -0.5 * kI;
  double res = 0.0;
  for (Eigen::Index k = 0; k < t10.cols(); ++k) {
    const CVec w = jac * t10.col(k);
    res = std::max(res, std::abs((drho.array() * w.array()).sum()) / std::max(1.0, w.norm()));
  }
  return res;
}

bool full_leaf_extension_applicable(int n, int s) { return s > 0 && s < n && n != 2 * s + 1; }

}  // namespace lcklab
