#include "lcklab/charts.hpp"

#include <cmath>

namespace lcklab {

namespace {

void require_size(const CVec& v, Eigen::Index size, const char* what) {
  if (v.size() != size) throw DimensionError(std::string(what) + ": size mismatch");
}

Eigen::FullPivLU<CMat> factor_gram(const CMat& g) {
  Eigen::FullPivLU<CMat> lu(g);
  lu.setThreshold(1e-13);
  if (lu.rank() < g.rows()) throw DegenerateError("metric Gram matrix is singular");
  return lu;
}

// Displacement in C^n of the real coordinate direction a (x_j for even a, y_j for odd a).
CVec coordinate_direction(int n, int a) {
  CVec d = CVec::Zero(n);
  d(a / 2) = (a % 2 == 0) ? Complex(1.0, 0.0) : kI;
  return d;
}

}  // namespace

// --- TangentVector ---------------------------------------------------------

TangentVector::TangentVector(CVec components) : c_(std::move(components)) {
  if (c_.size() % 2 != 0) throw DimensionError("tangent vector needs 2n frame components");
}

TangentVector TangentVector::real(const CVec& hol) {
  CVec c(2 * hol.size());
  c << hol, hol.conjugate();
  return TangentVector(std::move(c));
}

TangentVector TangentVector::holomorphic(const CVec& hol) {
  CVec c = CVec::Zero(2 * hol.size());
  c.head(hol.size()) = hol;
  return TangentVector(std::move(c));
}

TangentVector TangentVector::antiholomorphic(const CVec& antihol) {
  CVec c = CVec::Zero(2 * antihol.size());
  c.tail(antihol.size()) = antihol;
  return TangentVector(std::move(c));
}

TangentVector TangentVector::from_real_coords(const RVec& v) {
  if (v.size() % 2 != 0) throw DimensionError("real coordinates need even length");
  const Eigen::Index n = v.size() / 2;
  CVec hol(n);
  for (Eigen::Index j = 0; j < n; ++j) hol(j) = Complex(v(2 * j), v(2 * j + 1));
  return real(hol);
}

TangentVector TangentVector::zero(int n) { return TangentVector(CVec::Zero(2 * n)); }

bool TangentVector::is_real(double tol) const {
  return (antihol() - hol().conjugate()).cwiseAbs().maxCoeff() <= tol * std::max(1.0, c_.cwiseAbs().maxCoeff());
}

TangentVector TangentVector::conj() const {
  CVec c(c_.size());
  c << antihol().conjugate(), hol().conjugate();
  return TangentVector(std::move(c));
}

TangentVector TangentVector::real_part() const {
  return real(0.5 * (hol() + antihol().conjugate()));
}

TangentVector TangentVector::imag_part() const {
  return real((hol() - antihol().conjugate()) / (2.0 * kI));
}

RVec TangentVector::real_coords() const {
  const CVec h = 0.5 * (hol() + antihol().conjugate());
  RVec v(2 * h.size());
  for (Eigen::Index j = 0; j < h.size(); ++j) {
    v(2 * j) = h(j).real();
    v(2 * j + 1) = h(j).imag();
  }
  return v;
}

double TangentVector::norm() const { return c_.norm() / std::sqrt(2.0); }

TangentVector& TangentVector::operator+=(const TangentVector& o) {
  require_size(o.c_, c_.size(), "tangent vector sum");
  c_ += o.c_;
  return *this;
}

TangentVector& TangentVector::operator-=(const TangentVector& o) {
  require_size(o.c_, c_.size(), "tangent vector difference");
  c_ -= o.c_;
  return *this;
}

// --- Covector --------------------------------------------------------------

Covector Covector::from_real_coords(const RVec& alpha) {
  if (alpha.size() % 2 != 0) throw DimensionError("real coordinates need even length");
  const Eigen::Index n = alpha.size() / 2;
  CVec c(2 * n);
  for (Eigen::Index j = 0; j < n; ++j) {
    c(j) = 0.5 * Complex(alpha(2 * j), -alpha(2 * j + 1));
    c(n + j) = std::conj(c(j));
  }
  return Covector(std::move(c));
}

Complex Covector::operator()(const TangentVector& v) const {
  require_size(v.components(), c_.size(), "covector evaluation");
  return (c_.array() * v.components().array()).sum();
}

RVec Covector::real_coords() const {
  const Eigen::Index n = c_.size() / 2;
  RVec a(2 * n);
  for (Eigen::Index j = 0; j < n; ++j) {
    a(2 * j) = (c_(j) + c_(n + j)).real();
    a(2 * j + 1) = (kI * (c_(j) - c_(n + j))).real();
  }
  return a;
}

bool Covector::is_real(double tol) const {
  const Eigen::Index n = c_.size() / 2;
  return (c_.tail(n) - c_.head(n).conjugate()).cwiseAbs().maxCoeff() <=
         tol * std::max(1.0, c_.cwiseAbs().maxCoeff());
}

TangentVector apply_J(const TangentVector& v) {
  CVec c(v.components().size());
  c << kI * v.hol(), -kI * v.antihol();
  return TangentVector(std::move(c));
}

Covector compose_J(const Covector& alpha) {
  const int n = alpha.n();
  CVec c(2 * n);
  c << kI * alpha.components().head(n), -kI * alpha.components().tail(n);
  return Covector(std::move(c));
}

CMat real_basis_in_frame(int n) {
  CMat r = CMat::Zero(2 * n, 2 * n);
  for (int j = 0; j < n; ++j) {
    r(j, 2 * j) = 1.0;
    r(n + j, 2 * j) = 1.0;
    r(j, 2 * j + 1) = kI;
    r(n + j, 2 * j + 1) = -kI;
  }
  return r;
}

// --- ConnectionCoefficients ------------------------------------------------

ConnectionCoefficients::ConnectionCoefficients(CVec point, int n)
    : n_(n), point_(std::move(point)), data_(static_cast<std::size_t>(8 * n * n * n), Complex(0.0, 0.0)) {}

TangentVector ConnectionCoefficients::contract(const TangentVector& x, const TangentVector& y) const {
  const int m = 2 * n_;
  require_size(x.components(), m, "connection contraction");
  require_size(y.components(), m, "connection contraction");
  CVec out = CVec::Zero(m);
  for (int a = 0; a < m; ++a) {
    Complex acc = 0.0;
    for (int b = 0; b < m; ++b) {
      if (x[b] == 0.0) continue;
      for (int c = 0; c < m; ++c) acc += (*this)(a, b, c) * x[b] * y[c];
    }
    out(a) = acc;
  }
  return TangentVector(std::move(out));
}

double ConnectionCoefficients::symmetry_residual() const {
  const int m = 2 * n_;
  double r = 0.0;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = b + 1; c < m; ++c) r = std::max(r, std::abs((*this)(a, b, c) - (*this)(a, c, b)));
  return r;
}

double ConnectionCoefficients::conjugation_residual() const {
  const int m = 2 * n_;
  auto bar = [&](int a) { return (a + n_) % m; };
  double r = 0.0;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        r = std::max(r, std::abs((*this)(bar(a), bar(b), bar(c)) - std::conj((*this)(a, b, c))));
  return r;
}

double ConnectionCoefficients::max_abs() const {
  double r = 0.0;
  for (const auto& v : data_) r = std::max(r, std::abs(v));
  return r;
}

double max_abs_difference(const ConnectionCoefficients& a, const ConnectionCoefficients& b) {
  if (a.n_ != b.n_) throw DimensionError("connection coefficient size mismatch");
  double r = 0.0;
  for (std::size_t i = 0; i < a.data_.size(); ++i) r = std::max(r, std::abs(a.data_[i] - b.data_[i]));
  return r;
}

// --- MetricChart -----------------------------------------------------------

MetricChart::MetricChart(std::string name, int n, int index_s, MetricFn metric, DomainFn domain)
    : name_(std::move(name)), n_(n), s_(index_s), metric_(std::move(metric)), domain_(std::move(domain)) {
  if (n < 1) throw PreconditionError("chart dimension must be positive");
  if (index_s < 0 || index_s > n) throw PreconditionError("chart index parameter out of range");
}

MetricChart& MetricChart::with_metric_derivatives(DerivativeFn fn) {
  deriv_ = std::move(fn);
  return *this;
}

MetricChart& MetricChart::with_christoffel(ChristoffelFn fn) {
  christoffel_ = std::move(fn);
  return *this;
}

bool MetricChart::in_domain(const CVec& z) const {
  return z.size() == n_ && z.allFinite() && domain_(z);
}

CMat MetricChart::metric(const CVec& z) const {
  require_size(z, n_, "metric evaluation");
  if (!in_domain(z)) throw DomainError("point outside the domain of chart '" + name_ + "'");
  return metric_(z);
}

MetricDerivatives MetricChart::analytic_metric_derivatives(const CVec& z) const {
  if (!deriv_) throw PreconditionError("chart '" + name_ + "' has no analytic metric derivatives");
  if (!in_domain(z)) throw DomainError("point outside the domain of chart '" + name_ + "'");
  return deriv_(z);
}

ConnectionCoefficients MetricChart::analytic_christoffel(const CVec& z) const {
  if (!christoffel_) throw PreconditionError("chart '" + name_ + "' has no closed-form Christoffels");
  if (!in_domain(z)) throw DomainError("point outside the domain of chart '" + name_ + "'");
  return christoffel_(z);
}

// --- metric algebra --------------------------------------------------------

CMat frame_gram(const MetricChart& chart, const CVec& z) {
  const int n = chart.n();
  const CMat h = chart.metric(z);
  CMat g = CMat::Zero(2 * n, 2 * n);
  g.topRightCorner(n, n) = h;
  g.bottomLeftCorner(n, n) = h.transpose();
  return g;
}

RMat real_gram(const MetricChart& chart, const CVec& z) {
  const CMat r = real_basis_in_frame(chart.n());
  return (r.transpose() * frame_gram(chart, z) * r).real();
}

SemiEuclideanForm tangent_form(const MetricChart& chart, const CVec& z) {
  RMat g = real_gram(chart, z);
  g = 0.5 * (g + g.transpose()).eval();
  return SemiEuclideanForm(std::move(g));
}

Complex metric_product(const MetricChart& chart, const CVec& z, const TangentVector& x,
                       const TangentVector& y) {
  require_size(x.components(), 2 * chart.n(), "metric product");
  require_size(y.components(), 2 * chart.n(), "metric product");
  return x.components().transpose() * frame_gram(chart, z) * y.components();
}

Covector lower(const MetricChart& chart, const CVec& z, const TangentVector& v) {
  require_size(v.components(), 2 * chart.n(), "lowering");
  return Covector(frame_gram(chart, z) * v.components());
}

TangentVector raise(const MetricChart& chart, const CVec& z, const Covector& alpha) {
  require_size(alpha.components(), 2 * chart.n(), "raising");
  return TangentVector(factor_gram(frame_gram(chart, z)).solve(alpha.components()));
}

double derivative_along_real(const MetricChart& chart, const ScalarField& f, const CVec& z,
                             const TangentVector& x, const FdOptions& fd) {
  if (!x.is_real(1e-12)) throw PreconditionError("real derivative along a non-real vector");
  return real_directional_derivative(chart, f, z, x.real_part().hol(), fd);
}

Covector differential(const MetricChart& chart, const ComplexScalarField& f, const CVec& z,
                      const FdOptions& fd) {
  const int n = chart.n();
  CVec c(2 * n);
  for (int j = 0; j < n; ++j) {
    const Complex dx = real_directional_derivative(chart, f, z, coordinate_direction(n, 2 * j), fd);
    const Complex dy = real_directional_derivative(chart, f, z, coordinate_direction(n, 2 * j + 1), fd);
    c(j) = 0.5 * (dx - kI * dy);
    c(n + j) = 0.5 * (dx + kI * dy);
  }
  return Covector(std::move(c));
}

MetricDerivatives metric_derivatives_fd(const MetricChart& chart, const CVec& z, const FdOptions& fd) {
  const int n = chart.n();
  auto h = [&](const CVec& p) { return chart.metric(p); };
  MetricDerivatives d;
  for (int l = 0; l < n; ++l) {
    const CMat dx = real_directional_derivative(chart, h, z, coordinate_direction(n, 2 * l), fd);
    const CMat dy = real_directional_derivative(chart, h, z, coordinate_direction(n, 2 * l + 1), fd);
    d.dz.push_back(0.5 * (dx - kI * dy));
    d.dzbar.push_back(0.5 * (dx + kI * dy));
  }
  return d;
}

ConnectionCoefficients christoffel(const MetricChart& chart, const CVec& z, ChristoffelPath path,
                                   const FdOptions& fd) {
  if (path == ChristoffelPath::Preferred && chart.has_analytic_christoffel()) {
    return chart.analytic_christoffel(z);
  }
  const int n = chart.n();
  const int m = 2 * n;
  const CMat g = frame_gram(chart, z);
  const auto lu = factor_gram(g);

  const MetricDerivatives md = (path != ChristoffelPath::FiniteDifference && chart.has_metric_derivatives())
                                   ? chart.analytic_metric_derivatives(z)
                                   : metric_derivatives_fd(chart, z, fd);
  // Z_E applied to the frame Gram matrix.
  std::vector<CMat> dg(static_cast<std::size_t>(m), CMat::Zero(m, m));
  for (int e = 0; e < m; ++e) {
    const CMat& dh = e < n ? md.dz[static_cast<std::size_t>(e)] : md.dzbar[static_cast<std::size_t>(e - n)];
    dg[static_cast<std::size_t>(e)].topRightCorner(n, n) = dh;
    dg[static_cast<std::size_t>(e)].bottomLeftCorner(n, n) = dh.transpose();
  }

  ConnectionCoefficients gamma(z, n);
  CVec rhs(m);
  for (int b = 0; b < m; ++b) {
    for (int c = b; c < m; ++c) {
      for (int d = 0; d < m; ++d) {
        rhs(d) = dg[static_cast<std::size_t>(b)](c, d) + dg[static_cast<std::size_t>(c)](b, d) -
                 dg[static_cast<std::size_t>(d)](b, c);
      }
      const CVec sol = lu.solve(0.5 * rhs);
      for (int a = 0; a < m; ++a) {
        gamma(a, b, c) = sol(a);
        gamma(a, c, b) = sol(a);
      }
    }
  }
  return gamma;
}

TangentVector covariant_derivative(const MetricChart& chart, const TangentVector& x, const VectorField& y,
                                   const CVec& z, const FdOptions& fd) {
  auto comps = [&](const CVec& p) { return CVec(y(p).components()); };
  const CVec dy = derivative_along(chart, comps, z, x, fd);
  return TangentVector(dy) + christoffel(chart, z, ChristoffelPath::Preferred, fd).contract(x, y(z));
}

TangentVector gradient(const MetricChart& chart, const ScalarField& f, const CVec& z, const FdOptions& fd) {
  auto fc = [&](const CVec& p) { return Complex(f(p), 0.0); };
  return raise(chart, z, differential(chart, fc, z, fd));
}

TangentVector lie_bracket(const MetricChart& chart, const VectorField& x, const VectorField& y, const CVec& z,
                          const FdOptions& fd) {
  auto xc = [&](const CVec& p) { return CVec(x(p).components()); };
  auto yc = [&](const CVec& p) { return CVec(y(p).components()); };
  const CVec xy = derivative_along(chart, yc, z, x(z), fd);
  const CVec yx = derivative_along(chart, xc, z, y(z), fd);
  return TangentVector(CVec(xy - yx));
}

double ThreeForm::max_abs() const {
  double r = 0.0;
  for (double v : data_) r = std::max(r, std::abs(v));
  return r;
}

RMat exterior_derivative_1form(const MetricChart& chart, const OneFormField& alpha, const CVec& z,
                               const FdOptions& fd) {
  const int dim = 2 * chart.n();
  RMat partial(dim, dim);  // partial(a, b) = d_a alpha_b
  for (int a = 0; a < dim; ++a) {
    const RVec da = real_directional_derivative(chart, alpha, z, coordinate_direction(chart.n(), a), fd);
    if (da.size() != dim) throw DimensionError("1-form field has wrong size");
    partial.row(a) = da.transpose();
  }
  return partial - partial.transpose();
}

ThreeForm exterior_derivative_2form(const MetricChart& chart, const TwoFormField& omega, const CVec& z,
                                    const FdOptions& fd) {
  const int dim = 2 * chart.n();
  std::vector<RMat> partial;
  partial.reserve(static_cast<std::size_t>(dim));
  for (int a = 0; a < dim; ++a) {
    partial.push_back(real_directional_derivative(chart, omega, z, coordinate_direction(chart.n(), a), fd));
    if (partial.back().rows() != dim || partial.back().cols() != dim)
      throw DimensionError("2-form field has wrong size");
  }
  ThreeForm out(dim);
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b)
      for (int c = 0; c < dim; ++c)
        out(a, b, c) = partial[static_cast<std::size_t>(a)](b, c) + partial[static_cast<std::size_t>(b)](c, a) +
                       partial[static_cast<std::size_t>(c)](a, b);
  return out;
}

RMat kahler_form(const MetricChart& chart, const CVec& z) {
  const int n = chart.n();
  const CMat r = real_basis_in_frame(n);
  CMat jr = r;
  jr.topRows(n) *= kI;
  jr.bottomRows(n) *= -kI;
  return (r.transpose() * frame_gram(chart, z) * jr).real();
}

MetricChart conformal_rescale(const MetricChart& chart, ScalarField f) {
  auto metric = [chart, f](const CVec& z) { return CMat(std::exp(f(z)) * chart.metric(z)); };
  auto domain = [chart](const CVec& z) { return chart.in_domain(z); };
  return MetricChart("exp(f)*" + chart.name(), chart.n(), chart.s(), metric, domain);
}

TangentVector conformal_connection_shift(const MetricChart& chart, const ScalarField& f, const TangentVector& x,
                                         const VectorField& y, const CVec& z, const FdOptions& fd) {
  auto fc = [&](const CVec& p) { return Complex(f(p), 0.0); };
  const Covector df = differential(chart, fc, z, fd);
  const TangentVector yz = y(z);
  const TangentVector grad = raise(chart, z, df);
  const TangentVector shift = df(x) * yz + df(yz) * x - metric_product(chart, z, x, yz) * grad;
  return covariant_derivative(chart, x, y, z, fd) + 0.5 * shift;
}

}  // namespace lcklab
