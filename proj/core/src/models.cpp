#include "lcklab/models.hpp"

#include <cmath>
#include <numbers>

namespace lcklab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double richardson(const std::function<Complex(double)>& f, double h) {
  auto d = [&](double t) { return (f(t) - f(-t)) / (2.0 * t); };
  return std::abs((4.0 * d(0.5 * h) - d(h)) / 3.0);
}

double max_entry_difference(const CMat& a, const CMat& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace

Complex b_form(int s, const CVec& z, const CVec& w) {
  if (z.size() != w.size()) throw DimensionError("b_form: size mismatch");
  if (s < 0 || s > z.size()) throw PreconditionError("b_form: s out of range");
  Complex acc = 0.0;
  for (Eigen::Index j = 0; j < z.size(); ++j) acc += eps(s, static_cast<int>(j)) * z(j) * std::conj(w(j));
  return acc;
}

double b_norm2(int s, const CVec& z) { return b_form(s, z, z).real(); }

void HopfModel::validate() const {
  if (n < 2) throw PreconditionError("Hopf model needs n >= 2");
  if (s <= 0 || s >= n) throw PreconditionError("Hopf model needs 0 < s < n");
  if (!(lambda > 0.0 && lambda < 1.0)) throw PreconditionError("Hopf model needs 0 < lambda < 1");
}

MetricChart hopf_chart(const HopfModel& model) {
  model.validate();
  const int n = model.n;
  const int s = model.s;
  const double sign = model.region == HopfRegion::Plus ? 1.0 : -1.0;
  auto metric = [n, s](const CVec& z) {
    const double rho = 1.0 / std::abs(b_norm2(s, z));
    CMat h = CMat::Zero(n, n);
    for (int j = 0; j < n; ++j) h(j, j) = 0.5 * rho * eps(s, j);
    return h;
  };
  auto domain = [s, sign](const CVec& z) { return sign * b_norm2(s, z) > 0.0; };
  auto deriv = [n, s](const CVec& z) {
    const double b = b_norm2(s, z);
    const double a = b > 0.0 ? 1.0 : -1.0;
    const double rho = 1.0 / std::abs(b);
    MetricDerivatives d;
    for (int l = 0; l < n; ++l) {
      CMat dz = CMat::Zero(n, n);
      CMat dzb = CMat::Zero(n, n);
      const Complex drho = -a * rho * rho * eps(s, l) * std::conj(z(l));
      for (int j = 0; j < n; ++j) {
        dz(j, j) = 0.5 * eps(s, j) * drho;
        dzb(j, j) = 0.5 * eps(s, j) * std::conj(drho);
      }
      d.dz.push_back(dz);
      d.dzbar.push_back(dzb);
    }
    return d;
  };
  MetricChart chart(model.region == HopfRegion::Plus ? "hopf+" : "hopf-", n, s, metric, domain);
  chart.with_metric_derivatives(deriv).with_christoffel([n, s](const CVec& z) { return hopf_christoffel(s, n, z); });
  return chart;
}

ConnectionCoefficients hopf_christoffel(int s, int n, const CVec& z) {
  const double b = b_norm2(s, z);
  if (b == 0.0) throw DomainError("Hopf Christoffels on the null cone");
  const double a = b > 0.0 ? 1.0 : -1.0;
  const double k = 0.5 * a / std::abs(b);
  auto d = [](int i, int j) { return i == j ? 1.0 : 0.0; };
  ConnectionCoefficients g(z, n);
  for (int l = 0; l < n; ++l) {
    for (int j = 0; j < n; ++j) {
      for (int kk = 0; kk < n; ++kk) {
        const Complex hh =
            -k * (eps(s, j) * std::conj(z(j)) * d(kk, l) + eps(s, kk) * std::conj(z(kk)) * d(j, l));
        const Complex mixed = k * (eps(s, j) * d(j, kk) * z(l) - eps(s, kk) * z(kk) * d(j, l));
        const Complex mixed_bar =
            k * (eps(s, j) * d(j, kk) * std::conj(z(l)) - eps(s, j) * std::conj(z(j)) * d(l, kk));
        g(l, j, kk) = hh;
        g(n + l, n + j, n + kk) = std::conj(hh);
        g(l, j, n + kk) = mixed;
        g(l, n + kk, j) = mixed;
        g(n + l, j, n + kk) = mixed_bar;
        g(n + l, n + kk, j) = mixed_bar;
      }
    }
  }
  return g;
}

LCKStructure hopf_lck(const HopfModel& model) {
  const int n = model.n;
  const int s = model.s;
  auto omega = [n, s](const CVec& z) {
    const double b = b_norm2(s, z);
    CVec c(2 * n);
    for (int j = 0; j < n; ++j) {
      c(j) = -eps(s, j) * std::conj(z(j)) / b;
      c(n + j) = -eps(s, j) * z(j) / b;
    }
    return Covector(std::move(c));
  };
  auto f = [s](const CVec& z) { return -std::log(std::abs(b_norm2(s, z))); };
  return LCKStructure{hopf_chart(model), omega, f, true};
}

MetricChart flat_chart(int n, int s) {
  if (s < 0 || s > n) throw PreconditionError("flat chart needs 0 <= s <= n");
  CMat h = CMat::Zero(n, n);
  for (int j = 0; j < n; ++j) h(j, j) = 0.5 * eps(s, j);
  auto metric = [h](const CVec&) { return h; };
  auto domain = [](const CVec&) { return true; };
  auto deriv = [n](const CVec&) {
    MetricDerivatives d;
    d.dz.assign(static_cast<std::size_t>(n), CMat::Zero(n, n));
    d.dzbar.assign(static_cast<std::size_t>(n), CMat::Zero(n, n));
    return d;
  };
  MetricChart chart("flat", n, s, metric, domain);
  chart.with_metric_derivatives(deriv).with_christoffel([n](const CVec& z) { return ConnectionCoefficients(z, n); });
  return chart;
}

LCKStructure flat_kahler(int n, int s) {
  auto omega = [n](const CVec&) { return Covector(CVec::Zero(2 * n)); };
  auto f = [](const CVec&) { return 0.0; };
  return LCKStructure{flat_chart(n, s), omega, f, true};
}

LCKStructure constant_lee_structure(int n, int s, const Covector& omega) {
  if (omega.n() != n) throw DimensionError("constant Lee form has wrong size");
  auto w = [omega](const CVec&) { return omega; };
  return LCKStructure{flat_chart(n, s), w, {}, true};
}

LCKStructure synthetic_lee(int n, int s, const TangentVector& b) {
  if (b.n() != n) throw DimensionError("synthetic Lee field has wrong size");
  if (!b.is_real()) throw PreconditionError("synthetic Lee field must be real");
  const MetricChart chart = flat_chart(n, s);
  return constant_lee_structure(n, s, lower(chart, CVec::Zero(n), b));
}

LCKStructure synthetic_null(int n, int s) {
  if (s <= 0 || s >= n) throw PreconditionError("synthetic null data needs 0 < s < n");
  CVec hol = CVec::Zero(n);
  hol(0) = 1.0;
  hol(s) = 1.0;
  return synthetic_lee(n, s, TangentVector::real(hol));
}

void TricerriModel::validate() const {
  if (n < 1) throw PreconditionError("Tricerri model needs n >= 1");
  if (s < 0 || s > n) throw PreconditionError("Tricerri model needs 0 <= s <= n");
}

namespace {

// Sign of z_j (1-based j >= 1) in the Tricerri chart; w itself is positive.
double tricerri_eps(int s, int j) { return j == 0 ? 1.0 : eps(s, j - 1); }

MetricChart tricerri_like(const TricerriModel& model, const char* name, double w_power, double z_power) {
  model.validate();
  const int m = model.n + 1;
  const int s = model.s;
  auto metric = [m, s, w_power, z_power](const CVec& p) {
    const double y = p(0).imag();
    CMat h = CMat::Zero(m, m);
    h(0, 0) = 0.5 * std::pow(y, w_power);
    for (int j = 1; j < m; ++j) h(j, j) = 0.5 * tricerri_eps(s, j) * std::pow(y, z_power);
    return h;
  };
  auto domain = [](const CVec& p) { return p(0).imag() > 0.0; };
  auto deriv = [m, s, w_power, z_power](const CVec& p) {
    const double y = p(0).imag();
    MetricDerivatives d;
    d.dz.assign(static_cast<std::size_t>(m), CMat::Zero(m, m));
    d.dzbar.assign(static_cast<std::size_t>(m), CMat::Zero(m, m));
    // d/dw Im(w) = -i/2, d/dwbar Im(w) = i/2.
    CMat dy = CMat::Zero(m, m);
    dy(0, 0) = 0.5 * w_power * std::pow(y, w_power - 1.0);
    for (int j = 1; j < m; ++j) dy(j, j) = 0.5 * tricerri_eps(s, j) * z_power * std::pow(y, z_power - 1.0);
    d.dz[0] = -0.5 * kI * dy;
    d.dzbar[0] = 0.5 * kI * dy;
    return d;
  };
  MetricChart chart(name, m, s, metric, domain);
  chart.with_metric_derivatives(deriv);
  return chart;
}

}  // namespace

MetricChart tricerri_chart(const TricerriModel& model) {
  MetricChart chart = tricerri_like(model, "tricerri", -2.0, 1.0);
  chart.with_christoffel([model](const CVec& p) { return tricerri_christoffel(model, p); });
  return chart;
}

MetricChart tricerri_auxiliary_chart(const TricerriModel& model) {
  return tricerri_like(model, "tricerri-g0", -3.0, 0.0);
}

ConnectionCoefficients tricerri_christoffel(const TricerriModel& model, const CVec& p) {
  const int m = model.n + 1;
  const double y = p(0).imag();
  if (!(y > 0.0)) throw DomainError("Tricerri chart needs Im(w) > 0");
  ConnectionCoefficients g(p, m);
  const Complex q = 0.25 * kI / y;
  g(0, 0, 0) = kI / y;
  g(m, m, m) = -kI / y;
  for (int j = 1; j < m; ++j) {
    const double e = tricerri_eps(model.s, j);
    // holomorphic pair
    g(j, j, 0) = -q;
    g(j, 0, j) = -q;
    g(m + j, m + j, m) = std::conj(-q);
    g(m + j, m, m + j) = std::conj(-q);
    // Gamma^j_{j 0bar} and Gamma^{jbar}_{0 jbar}
    g(j, j, m) = q;
    g(j, m, j) = q;
    g(m + j, 0, m + j) = -q;
    g(m + j, m + j, 0) = -q;
    // Gamma^0_{j jbar} and Gamma^{0bar}_{j jbar}
    const Complex r = -0.25 * kI * e * y * y;
    g(0, j, m + j) = r;
    g(0, m + j, j) = r;
    g(m, j, m + j) = std::conj(r);
    g(m, m + j, j) = std::conj(r);
  }
  return g;
}

LCKStructure tricerri_lck(const TricerriModel& model) {
  const int m = model.n + 1;
  auto omega = [m](const CVec& p) {
    const double y = p(0).imag();
    CVec c = CVec::Zero(2 * m);
    c(0) = -0.5 * kI / y;
    c(m) = 0.5 * kI / y;
    return Covector(std::move(c));
  };
  auto f = [](const CVec& p) { return std::log(p(0).imag()); };
  return LCKStructure{tricerri_chart(model), omega, f, false};
}

double gab_invariance_residual(const TricerriModel& model, double alpha, Complex beta, const CVec& p) {
  if (!(alpha > 0.0)) throw PreconditionError("G_{alpha,beta} needs alpha > 0");
  if (std::abs(alpha * std::norm(beta) - 1.0) > 1e-12) throw PreconditionError("G_{alpha,beta} needs alpha |beta|^2 = 1");
  const MetricChart chart = tricerri_chart(model);
  const int m = model.n + 1;
  CVec scale(m);
  scale(0) = alpha;
  for (int j = 1; j < m; ++j) scale(j) = beta;
  const CVec image = scale.cwiseProduct(p);
  const CMat pulled = scale.asDiagonal() * chart.metric(image) * scale.conjugate().asDiagonal();
  return max_entry_difference(pulled, chart.metric(p));
}

std::optional<int> deck_equivalent(const HopfModel& model, const CVec& z, const CVec& zp, double tol) {
  model.validate();
  if (z.size() != zp.size()) throw DimensionError("deck_equivalent: size mismatch");
  const double nz = z.norm();
  const double nzp = zp.norm();
  if (nz == 0.0 || nzp == 0.0) return std::nullopt;
  const double mm = std::round(std::log(nzp / nz) / std::log(model.lambda));
  if (std::abs(mm) > 1e6) return std::nullopt;
  const int m = static_cast<int>(mm);
  if ((zp - std::pow(model.lambda, m) * z).norm() <= tol * std::max(1.0, nzp)) return m;
  return std::nullopt;
}

double arg_0_2pi(Complex w) {
  double a = std::arg(w);
  if (a < 0.0) a += kTwoPi;
  if (a >= kTwoPi) a = 0.0;
  return a;
}

HopfImage hopf_diffeo(const HopfModel& model, const CVec& z) {
  model.validate();
  const double b = b_norm2(model.s, z);
  if (b == 0.0) throw DomainError("Hopf diffeomorphism on the null cone");
  const double r = std::sqrt(std::abs(b));
  return {z / r, std::exp(kI * (kTwoPi * std::log(r) / std::log(model.lambda)))};
}

CVec hopf_diffeo_inv(const HopfModel& model, const CVec& zeta, Complex w) {
  model.validate();
  return std::pow(model.lambda, arg_0_2pi(w) / kTwoPi) * zeta;
}

double torus_pullback_isometry_residual(const HopfModel& model, Complex zeta, const CVec& z) {
  const MetricChart chart = hopf_chart(model);
  const Complex k = std::exp(zeta);
  return max_entry_difference(std::norm(k) * chart.metric(k * z), chart.metric(z));
}

double deck_pullback_residual(const HopfModel& model, int m, const CVec& z) {
  return torus_pullback_isometry_residual(model, Complex(m * std::log(model.lambda), 0.0), z);
}

FibrationSplit fibration_split(const HopfModel& model, const CVec& z) {
  model.validate();
  if (model.region != HopfRegion::Plus) throw PreconditionError("fibration split lives on the Plus region");
  if (std::abs(b_norm2(model.s, z) - 1.0) > 1e-9) throw PreconditionError("fibration split needs |z|_{s,n} = 1");
  const LCKStructure lck = hopf_lck(model);
  const LeeData d = lee_data(lck, z);
  SemiEuclideanForm form = tangent_form(lck.chart, z);
  RMat v(2 * model.n, 2);
  v.col(0) = d.A.real_coords();
  v.col(1) = d.B.real_coords();
  FrameSubspace vertical(form, v);
  if (std::abs(vertical.gram_restricted().determinant()) < 1e-12) throw DegenerateError("degenerate vertical plane");
  FrameSubspace horizontal = orthogonal_complement(form, vertical);
  return {std::move(form), std::move(vertical), std::move(horizontal)};
}

double submersion_isometry_residual(const HopfModel& model, const CVec& z, const TangentVector& u,
                                    const TangentVector& v, const FdOptions& fd) {
  const LCKStructure lck = hopf_lck(model);
  const MetricChart& chart = lck.chart;
  const LeeData d = lee_data(lck, z);
  for (const TangentVector* x : {&u, &v}) {
    if (!x->is_real()) throw PreconditionError("submersion check needs real vectors");
    for (const TangentVector* f : {&d.A, &d.B}) {
      if (std::abs(metric_product(chart, z, *x, *f)) > 1e-8 * std::max(1.0, x->norm()) * std::max(1.0, f->norm()))
        throw PreconditionError("submersion check needs horizontal vectors");
    }
  }
  auto push = [](const TangentVector& x, Complex k) {
    CVec c(x.components().size());
    c << k * x.hol(), std::conj(k) * x.antihol();
    return TangentVector(std::move(c));
  };
  auto along_b = [&](double t) {
    const Complex k = std::exp(t);
    return metric_product(chart, k * z, push(u, k), push(v, k));
  };
  auto along_a = [&](double t) {
    const Complex k = std::exp(kI * t);
    return metric_product(chart, k * z, push(u, k), push(v, k));
  };
  const double h = fd.step(z);
  return std::max(richardson(along_b, h), richardson(along_a, h));
}

CVec retraction(const HopfModel& model, double t, const CVec& z) {
  model.validate();
  if (!(t >= 0.0 && t <= 1.0)) throw PreconditionError("retraction needs t in [0, 1]");
  if (z.size() != model.n) throw DimensionError("retraction: wrong point size");
  if (!(b_norm2(model.s, z) > 0.0)) throw DomainError("retraction needs b_{s,n}(z,z) > 0");
  CVec out = z;
  out.head(model.s) *= (1.0 - t);
  return out;
}

SiegelBoundaryPoint cayley(int s, double r, const CVec& z) {
  const Eigen::Index n = z.size();
  if (n < 1) throw DimensionError("Cayley transform needs n >= 1");
  const Complex den = r + z(n - 1);
  if (std::abs(den) <= 1e-9) throw DomainError("Cayley transform pole z_n = -r");
  SiegelBoundaryPoint p;
  p.zeta.resize(n);
  p.zeta.head(n - 1) = z.head(n - 1) / den;
  p.zeta(n - 1) = kI * (r - z(n - 1)) / den;
  double levi = 0.0;
  for (Eigen::Index a = 0; a + 1 < n; ++a) levi += eps(s, static_cast<int>(a)) * std::norm(p.zeta(a));
  p.residual = p.zeta(n - 1).imag() - levi;
  return p;
}

CMat cayley_jacobian(double r, const CVec& z) {
  const Eigen::Index n = z.size();
  const Complex den = r + z(n - 1);
  if (std::abs(den) <= 1e-9) throw DomainError("Cayley transform pole z_n = -r");
  CMat j = CMat::Zero(n, n);
  for (Eigen::Index a = 0; a + 1 < n; ++a) {
    j(a, a) = 1.0 / den;
    j(a, n - 1) = -z(a) / (den * den);
  }
  j(n - 1, n - 1) = -2.0 * kI * r / (den * den);
  return j;
}

}  // namespace lcklab
