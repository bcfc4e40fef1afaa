#include "lcklab/semieuclid.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace lcklab {

namespace {

constexpr double kSignatureRelTol = 1e-9;

RMat orthonormalize(const RMat& m) {
  if (m.cols() == 0) return m;
  Eigen::HouseholderQR<RMat> qr(m);
  return qr.householderQ() * RMat::Identity(m.rows(), m.cols());
}

// tau_sig; eigenvalues below 1e-12 of the ambient scale count as all zero.
double signature_threshold(const SemiEuclideanForm& form, const FrameSubspace& w, const RVec& ev) {
  const double scale = ev.cwiseAbs().maxCoeff();
  const double ambient = form.gram().cwiseAbs().maxCoeff() * w.basis().colwise().squaredNorm().maxCoeff();
  if (scale <= 1e-12 * ambient) return kSignatureRelTol;
  return kSignatureRelTol * scale;
}

}  // namespace

SemiEuclideanForm SemiEuclideanForm::standard(int index, int dim) {
  if (dim <= 0 || index < 0 || index > dim) {
    throw DimensionError("standard form needs 0 <= index <= dim and dim > 0");
  }
  RVec diag = RVec::Ones(dim);
  diag.head(index).setConstant(-1.0);
  return SemiEuclideanForm(RMat(diag.asDiagonal()));
}

SemiEuclideanForm::SemiEuclideanForm(RMat gram) : gram_(std::move(gram)) {
  if (gram_.rows() == 0 || gram_.rows() != gram_.cols()) {
    throw DimensionError("Gram matrix must be square and nonempty");
  }
  const double scale = std::max(1.0, gram_.cwiseAbs().maxCoeff());
  if ((gram_ - gram_.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw DegenerateError("Gram matrix is not symmetric");
  }
  gram_ = 0.5 * (gram_ + gram_.transpose());
  Eigen::SelfAdjointEigenSolver<RMat> eig(gram_, Eigen::EigenvaluesOnly);
  const RVec& ev = eig.eigenvalues();
  const double tau = 1e-13 * std::max(ev.cwiseAbs().maxCoeff(), 1e-300);
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (std::abs(ev(i)) <= tau) throw DegenerateError("ambient form is degenerate");
    if (ev(i) < 0) ++index_;
  }
}

FrameSubspace::FrameSubspace(const SemiEuclideanForm& form, RMat basis)
    : ambient_dim_(form.dim()), basis_(std::move(basis)) {
  if (basis_.cols() > 0 && basis_.rows() != form.dim()) {
    throw DimensionError("basis vectors do not match the ambient dimension");
  }
  if (basis_.cols() == 0) basis_.resize(form.dim(), 0);
  if (numerical_rank(basis_) != basis_.cols()) {
    throw DegenerateError("frame basis is rank deficient");
  }
  gram_ = basis_.transpose() * form.gram() * basis_;
}

FrameSubspace FrameSubspace::zero(int ambient_dim) {
  return FrameSubspace(ambient_dim, RMat(ambient_dim, 0), RMat(0, 0));
}

FrameSubspace FrameSubspace::full(const SemiEuclideanForm& form) {
  return FrameSubspace(form, RMat::Identity(form.dim(), form.dim()));
}

double inner(const SemiEuclideanForm& form, const RVec& u, const RVec& v) {
  if (u.size() != form.dim() || v.size() != form.dim()) {
    throw DimensionError("inner: vector length differs from form dimension");
  }
  return u.dot(form.gram() * v);
}

int numerical_rank(const RMat& m, double tol) {
  if (m.cols() == 0 || m.rows() == 0) return 0;
  Eigen::ColPivHouseholderQR<RMat> qr(m);
  qr.setThreshold(tol);
  return static_cast<int>(qr.rank());
}

RMat null_space(const RMat& constraints, double tol) {
  const Eigen::Index n = constraints.cols();
  if (constraints.rows() == 0) return RMat::Identity(n, n);
  Eigen::ColPivHouseholderQR<RMat> qr(constraints.transpose());
  qr.setThreshold(tol);
  const Eigen::Index r = qr.rank();
  RMat q = qr.householderQ();
  return q.rightCols(n - r);
}

RMat euclidean_complement_within(const RMat& ambient, const RMat& sub, double tol) {
  if (sub.cols() == 0) return orthonormalize(ambient);
  RMat coeffs = null_space(sub.transpose() * ambient, tol);
  return orthonormalize(ambient * coeffs);
}

FrameSubspace orthogonal_complement(const SemiEuclideanForm& form, const FrameSubspace& w) {
  if (w.ambient_dim() != form.dim()) {
    throw DimensionError("orthogonal_complement: ambient dimension mismatch");
  }
  RMat constraints = w.basis().transpose() * form.gram();
  RMat basis = null_space(constraints);
  if (basis.cols() != form.dim() - w.dim()) {
    throw DegenerateError("orthogonal_complement: unexpected complement dimension");
  }
  return FrameSubspace(form, std::move(basis));
}

FrameSubspace radical(const SemiEuclideanForm& form, const FrameSubspace& w) {
  if (w.ambient_dim() != form.dim()) throw DimensionError("radical: ambient dimension mismatch");
  if (w.dim() == 0) return FrameSubspace::zero(form.dim());
  Eigen::SelfAdjointEigenSolver<RMat> eig(w.gram_restricted());
  const RVec& ev = eig.eigenvalues();
  const double tau = signature_threshold(form, w, ev);
  std::vector<Eigen::Index> idx;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (std::abs(ev(i)) <= tau) idx.push_back(i);
  }
  RMat basis(form.dim(), static_cast<Eigen::Index>(idx.size()));
  for (std::size_t k = 0; k < idx.size(); ++k) {
    basis.col(static_cast<Eigen::Index>(k)) = w.basis() * eig.eigenvectors().col(idx[k]);
  }
  return FrameSubspace(form, orthonormalize(basis));
}

Signature signature_of(const SemiEuclideanForm& form, const FrameSubspace& w) {
  if (w.ambient_dim() != form.dim()) {
    throw DimensionError("signature_of: ambient dimension mismatch");
  }
  Signature sig;
  if (w.dim() == 0) return sig;
  Eigen::SelfAdjointEigenSolver<RMat> eig(w.gram_restricted(), Eigen::EigenvaluesOnly);
  const RVec& ev = eig.eigenvalues();
  const double tau = signature_threshold(form, w, ev);
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    const double a = std::abs(ev(i));
    if (a > tau / 10 && a < 10 * tau) sig.ill_conditioned = true;
    if (a <= tau) {
      ++sig.zero;
    } else if (ev(i) > 0) {
      ++sig.positive;
    } else {
      ++sig.negative;
    }
  }
  return sig;
}

double containment_residual(const RMat& basis, const RVec& v) {
  const double norm = v.norm();
  if (norm == 0.0) return 0.0;
  if (basis.cols() == 0) return 1.0;
  Eigen::ColPivHouseholderQR<RMat> qr(basis);
  RVec x = qr.solve(v);
  return (v - basis * x).norm() / norm;
}

double span_distance(const RMat& a, const RMat& b) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < b.cols(); ++i) {
    worst = std::max(worst, containment_residual(a, b.col(i)));
  }
  for (Eigen::Index i = 0; i < a.cols(); ++i) {
    worst = std::max(worst, containment_residual(b, a.col(i)));
  }
  return worst;
}

bool same_span(const RMat& a, const RMat& b, double tol) {
  return numerical_rank(a) == numerical_rank(b) && span_distance(a, b) < tol;
}

}  // namespace lcklab
