#pragma once

// Linear algebra of a single semi-Euclidean space (R^N, g) with g symmetric
// and nondegenerate of index nu.

#include "lcklab/types.hpp"

namespace lcklab {

class SemiEuclideanForm {
 public:
  /// h_{nu,N}: diag(-1,...,-1,+1,...,+1) with `index` minus signs.
  static SemiEuclideanForm standard(int index, int dim);

  /// Validates symmetry and nondegeneracy; the index is read off the spectrum.
  explicit SemiEuclideanForm(RMat gram);

  int dim() const { return static_cast<int>(gram_.rows()); }
  int index() const { return index_; }
  const RMat& gram() const { return gram_; }

 private:
  RMat gram_;
  int index_ = 0;
};

/// An ordered, linearly independent list of vectors (the columns of `basis`)
/// together with their Gram matrix under the ambient form.
class FrameSubspace {
 public:
  FrameSubspace(const SemiEuclideanForm& form, RMat basis);
  static FrameSubspace zero(int ambient_dim);
  static FrameSubspace full(const SemiEuclideanForm& form);

  int ambient_dim() const { return ambient_dim_; }
  int dim() const { return static_cast<int>(basis_.cols()); }
  const RMat& basis() const { return basis_; }
  const RMat& gram_restricted() const { return gram_; }
  RVec vector(int i) const { return basis_.col(i); }

 private:
  FrameSubspace(int ambient_dim, RMat basis, RMat gram)
      : ambient_dim_(ambient_dim), basis_(std::move(basis)), gram_(std::move(gram)) {}

  int ambient_dim_ = 0;
  RMat basis_;
  RMat gram_;
};

struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  // Some eigenvalue lies within a factor 10 of the zero threshold.
  bool ill_conditioned = false;

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.positive == b.positive && a.negative == b.negative && a.zero == b.zero;
  }
};

double inner(const SemiEuclideanForm& form, const RVec& u, const RVec& v);

FrameSubspace orthogonal_complement(const SemiEuclideanForm& form, const FrameSubspace& w);

/// W ∩ W⊥. Zero-dimensional iff W is nondegenerate.
FrameSubspace radical(const SemiEuclideanForm& form, const FrameSubspace& w);

/// (positive, negative, zero) eigenvalue counts of the restricted Gram matrix,
/// with the scale-invariant threshold 1e-9 * max|eigenvalue|.
Signature signature_of(const SemiEuclideanForm& form, const FrameSubspace& w);

/// Relative least-squares residual |v - P_W v| / |v| of projecting v onto span(basis).
/// Zero vectors are contained in every span.
double containment_residual(const RMat& basis, const RVec& v);

/// Largest containment residual of the columns of `b` in span(a) and vice versa.
double span_distance(const RMat& a, const RMat& b);

bool same_span(const RMat& a, const RMat& b, double tol = 1e-10);

/// Numerical rank with relative threshold `tol`.
int numerical_rank(const RMat& m, double tol = 1e-10);

/// Orthonormal (Euclidean) basis of the null space of `constraints` (rows are
/// linear functionals), from a column-pivoted Householder QR of its transpose.
RMat null_space(const RMat& constraints, double tol = 1e-10);

/// Euclidean orthogonal complement of span(sub) inside span(ambient); returns
/// an orthonormal basis.
RMat euclidean_complement_within(const RMat& ambient, const RMat& sub, double tol = 1e-10);

}  // namespace lcklab
