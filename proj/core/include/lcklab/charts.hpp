#pragma once

// Hermitian metric charts on complex coordinate domains and the Levi-Civita
// calculus built on them. Tangent objects live in the complexified frame
// {Z_1..Z_n, Zbar_1..Zbar_n}, Z_j = d/dz^j. Real coordinates are interleaved
// (x_1, y_1, x_2, y_2, ...) with z^j = x_j + i y_j.

#include <functional>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "lcklab/semieuclid.hpp"
#include "lcklab/types.hpp"

namespace lcklab {

class TangentVector {
 public:
  TangentVector() = default;
  explicit TangentVector(CVec components);

  /// hol^j Z_j + conj(hol^j) Zbar_j.
  static TangentVector real(const CVec& hol);
  static TangentVector holomorphic(const CVec& hol);
  static TangentVector antiholomorphic(const CVec& antihol);
  static TangentVector from_real_coords(const RVec& v);
  static TangentVector zero(int n);

  int n() const { return static_cast<int>(c_.size() / 2); }
  const CVec& components() const { return c_; }
  Complex operator[](Eigen::Index a) const { return c_(a); }
  CVec hol() const { return c_.head(n()); }
  CVec antihol() const { return c_.tail(n()); }

  bool is_real(double tol = 1e-12) const;
  /// Conjugate vector: swaps and conjugates the (1,0) and (0,1) parts.
  TangentVector conj() const;
  /// X = real_part() + i imag_part(), both real vectors.
  TangentVector real_part() const;
  TangentVector imag_part() const;
  /// Real coordinates of real_part().
  RVec real_coords() const;
  /// Equals the Euclidean norm of real_coords() for real vectors.
  double norm() const;

  TangentVector& operator+=(const TangentVector& o);
  TangentVector& operator-=(const TangentVector& o);
  friend TangentVector operator+(TangentVector a, const TangentVector& b) { return a += b; }
  friend TangentVector operator-(TangentVector a, const TangentVector& b) { return a -= b; }
  friend TangentVector operator*(Complex k, const TangentVector& v) { return TangentVector(k * v.c_); }
  friend TangentVector operator*(double k, const TangentVector& v) { return TangentVector(k * v.c_); }
  TangentVector operator-() const { return TangentVector(-c_); }

 private:
  CVec c_;
};

/// 1-form components on the complexified frame: (alpha(Z_j), alpha(Zbar_j)).
class Covector {
 public:
  Covector() = default;
  explicit Covector(CVec components) : c_(std::move(components)) {}
  static Covector from_real_coords(const RVec& alpha);

  int n() const { return static_cast<int>(c_.size() / 2); }
  const CVec& components() const { return c_; }
  Complex operator()(const TangentVector& v) const;
  RVec real_coords() const;
  bool is_real(double tol = 1e-12) const;

 private:
  CVec c_;
};

/// J Z_j = i Z_j, J Zbar_j = -i Zbar_j.
TangentVector apply_J(const TangentVector& v);
/// alpha o J.
Covector compose_J(const Covector& alpha);

/// Frame components of the real coordinate basis vectors, as columns.
CMat real_basis_in_frame(int n);

struct MetricDerivatives {
  std::vector<CMat> dz;     // dH/dz^l
  std::vector<CMat> dzbar;  // dH/dzbar^l
};

/// Gamma^A_{BC}, A,B,C in {1..n, 1bar..nbar} (stored 0..2n-1).
class ConnectionCoefficients {
 public:
  ConnectionCoefficients(CVec point, int n);

  int n() const { return n_; }
  const CVec& point() const { return point_; }
  Complex& operator()(int a, int b, int c) { return data_[index(a, b, c)]; }
  Complex operator()(int a, int b, int c) const { return data_[index(a, b, c)]; }

  /// (Gamma^A_{BC} X^B Y^C)_A.
  TangentVector contract(const TangentVector& x, const TangentVector& y) const;
  double symmetry_residual() const;
  double conjugation_residual() const;
  double max_abs() const;

  friend double max_abs_difference(const ConnectionCoefficients& a,
                                   const ConnectionCoefficients& b);

 private:
  std::size_t index(int a, int b, int c) const {
    const auto m = static_cast<std::size_t>(2 * n_);
    return (static_cast<std::size_t>(a) * m + static_cast<std::size_t>(b)) * m +
           static_cast<std::size_t>(c);
  }

  int n_;
  CVec point_;
  std::vector<Complex> data_;
};

class MetricChart {
 public:
  using MetricFn = std::function<CMat(const CVec&)>;
  using DomainFn = std::function<bool(const CVec&)>;
  using DerivativeFn = std::function<MetricDerivatives(const CVec&)>;
  using ChristoffelFn = std::function<ConnectionCoefficients(const CVec&)>;

  /// `metric` returns the Hermitian matrix g_{j kbar}(z); `index_s` is the
  /// index parameter (real index 2s).
  MetricChart(std::string name, int n, int index_s, MetricFn metric, DomainFn domain);

  MetricChart& with_metric_derivatives(DerivativeFn fn);
  MetricChart& with_christoffel(ChristoffelFn fn);

  const std::string& name() const { return name_; }
  int n() const { return n_; }
  int s() const { return s_; }
  bool in_domain(const CVec& z) const;
  /// Throws DomainError outside the domain.
  CMat metric(const CVec& z) const;
  bool has_metric_derivatives() const { return static_cast<bool>(deriv_); }
  MetricDerivatives analytic_metric_derivatives(const CVec& z) const;
  bool has_analytic_christoffel() const { return static_cast<bool>(christoffel_); }
  ConnectionCoefficients analytic_christoffel(const CVec& z) const;

 private:
  std::string name_;
  int n_;
  int s_;
  MetricFn metric_;
  DomainFn domain_;
  DerivativeFn deriv_;
  ChristoffelFn christoffel_;
};

/// Central differences with step rel_step * max(1, |z|) and one Richardson level.
struct FdOptions {
  double rel_step = 1e-5;
  bool richardson = true;

  double step(const CVec& z) const { return rel_step * std::max(1.0, z.norm()); }
};

using VectorField = std::function<TangentVector(const CVec&)>;
using ScalarField = std::function<double(const CVec&)>;
using ComplexScalarField = std::function<Complex(const CVec&)>;
/// Real-coordinate components of a 1-form / 2-form field.
using OneFormField = std::function<RVec(const CVec&)>;
using TwoFormField = std::function<RMat(const CVec&)>;

/// 2n x 2n complex-frame Gram matrix G_{AB} = g(Z_A, Z_B).
CMat frame_gram(const MetricChart& chart, const CVec& z);
RMat real_gram(const MetricChart& chart, const CVec& z);
SemiEuclideanForm tangent_form(const MetricChart& chart, const CVec& z);

/// Complex-bilinear extension of g.
Complex metric_product(const MetricChart& chart, const CVec& z, const TangentVector& x,
                       const TangentVector& y);
Covector lower(const MetricChart& chart, const CVec& z, const TangentVector& v);
/// Throws DegenerateError when the metric is singular at z.
TangentVector raise(const MetricChart& chart, const CVec& z, const Covector& alpha);

namespace detail {

template <class F>
auto central_difference(const MetricChart& chart, const F& f, const CVec& z, const CVec& dir,
                        double t) {
  using R = std::decay_t<decltype(f(z))>;
  const CVec zp = z + t * dir;
  const CVec zm = z - t * dir;
  if (!chart.in_domain(zp) || !chart.in_domain(zm)) {
    throw DomainError("finite-difference stencil leaves the domain of chart '" + chart.name() + "'");
  }
  return R((f(zp) - f(zm)) / (2.0 * t));
}

}  // namespace detail

/// d/dt f(z + t dir) at t = 0, where dir is a point displacement in C^n.
template <class F>
auto real_directional_derivative(const MetricChart& chart, const F& f, const CVec& z,
                                 const CVec& dir, const FdOptions& fd = {}) {
  using R = std::decay_t<decltype(f(z))>;
  const double len = dir.norm();
  if (len == 0.0) return R(f(z) * 0.0);
  const double t = fd.step(z) / len;
  R d1 = detail::central_difference(chart, f, z, dir, t);
  if (!fd.richardson) return d1;
  R d2 = detail::central_difference(chart, f, z, dir, 0.5 * t);
  return R((4.0 * d2 - d1) / 3.0);
}

/// X(f) for a complexified tangent vector X and a complex-valued f.
template <class F>
auto derivative_along(const MetricChart& chart, const F& f, const CVec& z, const TangentVector& x,
                      const FdOptions& fd = {}) {
  using R = std::decay_t<decltype(f(z))>;
  static_assert(!std::is_same_v<R, double>, "derivative_along expects complex-valued functions");
  const TangentVector re = x.real_part();
  const TangentVector im = x.imag_part();
  R out = real_directional_derivative(chart, f, z, re.hol(), fd);
  if (im.norm() > 0.0) out = R(out + kI * real_directional_derivative(chart, f, z, im.hol(), fd));
  return out;
}

/// X(f) for a real scalar field and a real tangent vector.
double derivative_along_real(const MetricChart& chart, const ScalarField& f, const CVec& z,
                             const TangentVector& x, const FdOptions& fd = {});

/// Wirtinger derivatives (df/dz^j, df/dzbar^j) of a complex scalar, as frame covector components.
Covector differential(const MetricChart& chart, const ComplexScalarField& f, const CVec& z,
                      const FdOptions& fd = {});

MetricDerivatives metric_derivatives_fd(const MetricChart& chart, const CVec& z,
                                        const FdOptions& fd = {});

enum class ChristoffelPath {
  Preferred,         // closed form if the chart has one, else Solved
  Solved,            // 2 g_{AD} Gamma^A_{BC} = Z_B g_{CD} + Z_C g_{BD} - Z_D g_{BC}
  FiniteDifference,  // Solved, with metric derivatives from finite differences
};

ConnectionCoefficients christoffel(const MetricChart& chart, const CVec& z,
                                   ChristoffelPath path = ChristoffelPath::Preferred,
                                   const FdOptions& fd = {});

/// (nabla_X Y)^A = X(Y^A) + Gamma^A_{BC} X^B Y^C.
TangentVector covariant_derivative(const MetricChart& chart, const TangentVector& x,
                                   const VectorField& y, const CVec& z, const FdOptions& fd = {});

/// Index-raised differential: g(grad f, X) = X(f).
TangentVector gradient(const MetricChart& chart, const ScalarField& f, const CVec& z,
                       const FdOptions& fd = {});

TangentVector lie_bracket(const MetricChart& chart, const VectorField& x, const VectorField& y,
                          const CVec& z, const FdOptions& fd = {});

/// Fully antisymmetric 3-index array in real coordinates.
class ThreeForm {
 public:
  explicit ThreeForm(int dim) : dim_(dim), data_(static_cast<std::size_t>(dim * dim * dim), 0.0) {}
  int dim() const { return dim_; }
  double& operator()(int a, int b, int c) { return data_[index(a, b, c)]; }
  double operator()(int a, int b, int c) const { return data_[index(a, b, c)]; }
  double max_abs() const;

 private:
  std::size_t index(int a, int b, int c) const {
    return static_cast<std::size_t>((a * dim_ + b) * dim_ + c);
  }
  int dim_;
  std::vector<double> data_;
};

/// (d alpha)_{ab} = d_a alpha_b - d_b alpha_a in real coordinates.
RMat exterior_derivative_1form(const MetricChart& chart, const OneFormField& alpha, const CVec& z,
                               const FdOptions& fd = {});
/// (d Omega)_{abc} = d_a Omega_bc + d_b Omega_ca + d_c Omega_ab in real coordinates.
ThreeForm exterior_derivative_2form(const MetricChart& chart, const TwoFormField& omega,
                                    const CVec& z, const FdOptions& fd = {});

/// Omega(X, Y) = g(X, JY) in real coordinates.
RMat kahler_form(const MetricChart& chart, const CVec& z);

/// The chart of e^f g on the same domain.
MetricChart conformal_rescale(const MetricChart& chart, ScalarField f);

/// Levi-Civita connection of e^f g predicted from that of g:
/// nabla_X Y + 1/2 { X(f) Y + Y(f) X - g(X,Y) grad f }.
TangentVector conformal_connection_shift(const MetricChart& chart, const ScalarField& f,
                                         const TangentVector& x, const VectorField& y,
                                         const CVec& z, const FdOptions& fd = {});

}  // namespace lcklab
