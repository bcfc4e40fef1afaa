#include "lcklab/foliations.hpp"

#include <cmath>

namespace lcklab {

namespace {

bool null_lee(double c, const RVec& b) { return std::abs(c) <= kNullLeeTolerance * b.squaredNorm(); }

RVec interleave(const CVec& v) {
  RVec r(2 * v.size());
  for (Eigen::Index j = 0; j < v.size(); ++j) {
    r(2 * j) = v(j).real();
    r(2 * j + 1) = v(j).imag();
  }
  return r;
}

RMat single(const RVec& v) {
  RMat m(v.size(), 1);
  m.col(0) = v;
  return m;
}

// Fixed, generic linear perturbation used for the second extension of a tangent field.
RMat extension_matrix(int dim) {
  RMat m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = 0.5 * std::sin(1.0 + i + 2.0 * j);
  return m;
}

}  // namespace

RMat standard_J(int real_dim) {
  if (real_dim % 2 != 0) throw DimensionError("complex structure needs even dimension");
  RMat j = RMat::Zero(real_dim, real_dim);
  for (int k = 0; k < real_dim / 2; ++k) {
    j(2 * k + 1, 2 * k) = 1.0;
    j(2 * k, 2 * k + 1) = -1.0;
  }
  return j;
}

PointData point_data(const LCKStructure& lck, const CVec& z) {
  const LeeData d = lee_data(lck, z);
  return PointData{tangent_form(lck.chart, z), d.omega.real_coords(), d.theta.real_coords(), d.B.real_coords(),
                   d.A.real_coords(), d.c};
}

PointData synthetic_point_data(const SemiEuclideanForm& form, const RVec& b) {
  if (b.size() != form.dim()) throw DimensionError("synthetic Lee field has wrong size");
  const RMat j = standard_J(form.dim());
  if ((j.transpose() * form.gram() * j - form.gram()).cwiseAbs().maxCoeff() > 1e-12)
    throw PreconditionError("form is not J-invariant");
  const RVec omega = form.gram() * b;
  return PointData{form, omega, j.transpose() * omega, b, -(j * b), b.dot(omega)};
}

RVec lightlike_transversal(const SemiEuclideanForm& form, const RVec& omega, const RVec& b,
                           const FrameSubspace& screen, const RVec& v) {
  const int dim = form.dim();
  if (omega.size() != dim || b.size() != dim || v.size() != dim || screen.ambient_dim() != dim)
    throw DimensionError("lightlike_transversal: size mismatch");
  for (int i = 0; i < screen.dim(); ++i) {
    const RVec w = screen.vector(i);
    if (std::abs(inner(form, v, w)) > 1e-9 * std::max(1.0, v.norm()) * std::max(1.0, w.norm()))
      throw PreconditionError("V is not orthogonal to the screen");
  }
  if (containment_residual(single(b), v) <= 1e-9) throw PreconditionError("V lies in span{B}");
  const double ov = omega.dot(v);
  if (std::abs(ov) <= 1e-12 * omega.norm() * v.norm()) throw DegenerateError("omega(V) = 0");
  return (v - (inner(form, v, v) / (2.0 * ov)) * b) / ov;
}

FoliationFibre first_foliation_fibre(const PointData& d) {
  const int dim = d.form.dim();
  if (d.B.norm() < 1e-8) throw PreconditionError("Lee field vanishes at the point");
  RMat row(1, dim);
  row.row(0) = d.omega.transpose();
  FrameSubspace tangent(d.form, null_space(row));
  if (!null_lee(d.c, d.B)) {
    return FoliationFibre{CVec(), d.form, tangent, FrameSubspace::zero(dim), tangent,
                          FrameSubspace(d.form, single(d.B)), d.c};
  }
  const FrameSubspace rad(d.form, single(d.B));
  const FrameSubspace screen(d.form, euclidean_complement_within(tangent.basis(), single(d.B)));
  const FrameSubspace screen_perp = orthogonal_complement(d.form, screen);
  const RVec v = euclidean_complement_within(screen_perp.basis(), single(d.B)).col(0);
  const RVec nv = lightlike_transversal(d.form, d.omega, d.B, screen, v);
  return FoliationFibre{CVec(), d.form, tangent, rad, screen, FrameSubspace(d.form, single(nv)), d.c};
}

FoliationFibre first_foliation_fibre(const LCKStructure& lck, const CVec& z) {
  FoliationFibre f = first_foliation_fibre(point_data(lck, z));
  f.z = z;
  return f;
}

SecondFundamentalData gauss_weingarten(const LCKStructure& lck, const FoliationFibre& fibre, const RVec& x,
                                       const RVec& y, const RVec& v, const FdOptions& fd) {
  const MetricChart& chart = lck.chart;
  const CVec& z = fibre.z;
  if (z.size() != chart.n()) throw PreconditionError("fibre carries no base point for this chart");
  const bool null_case = fibre.radical.dim() > 0;
  const VectorField lee = lee_field(lck);

  auto generator = [&](const CVec& p) -> TangentVector {
    if (!null_case) return lee(p);
    return TangentVector::from_real_coords(first_foliation_fibre(lck, p).transversal.vector(0));
  };
  auto tan_at = [&](const CVec& p, const TangentVector& u) {
    const Covector omega = lck.lee_form(p);
    const TangentVector t = generator(p);
    return u - (omega(u) / omega(t)) * t;
  };

  const Covector omega = lck.lee_form(z);
  const TangentVector t0 = generator(z);
  const double cond = omega.components().norm() * t0.components().norm() / std::abs(omega(t0));
  if (!(cond <= 1e12)) throw DegenerateError("tangent/transversal decomposition is ill-conditioned");
  auto tra = [&](const TangentVector& u) { return (omega(u) / omega(t0)) * t0; };

  const TangentVector X = TangentVector::from_real_coords(x);
  const TangentVector Y = TangentVector::from_real_coords(y);
  const double scale = omega.components().norm();
  for (const TangentVector* w : {&X, &Y}) {
    if (std::abs(omega(*w)) > 1e-9 * std::max(1.0, scale * w->norm()))
      throw PreconditionError("argument is not tangent to the foliation");
  }
  if (containment_residual(fibre.transversal.basis(), v) > 1e-8)
    throw PreconditionError("V is not in the transversal bundle");

  const RMat m = extension_matrix(2 * chart.n());
  auto constant_ext = [&](const TangentVector& w) -> VectorField {
    return [&, w](const CVec& p) { return tan_at(p, w); };
  };
  VectorField y_affine = [&](const CVec& p) {
    const RVec shifted = y + m * interleave(CVec(p - z));
    return tan_at(p, TangentVector::from_real_coords(shifted));
  };

  SecondFundamentalData out;
  const TangentVector nxy = covariant_derivative(chart, X, constant_ext(Y), z, fd);
  const TangentVector nyx = covariant_derivative(chart, Y, constant_ext(X), z, fd);
  const TangentVector nxy2 = covariant_derivative(chart, X, y_affine, z, fd);
  out.h_xy = tra(nxy).real_coords();
  out.h_yx = tra(nyx).real_coords();
  out.induced = (nxy - tra(nxy)).real_coords();
  out.symmetry_residual = (out.h_xy - out.h_yx).norm();
  out.extension_residual = (out.h_xy - tra(nxy2).real_coords()).norm();

  const RVec t0r = t0.real_coords();
  const double kappa = t0r.dot(v) / t0r.squaredNorm();
  VectorField v_field = [&](const CVec& p) { return kappa * generator(p); };
  const TangentVector nxv = covariant_derivative(chart, X, v_field, z, fd);
  out.transversal_V = tra(nxv).real_coords();
  out.shape = -(nxv - tra(nxv)).real_coords();
  return out;
}

FoliationFibre second_foliation_fibre(const PointData& d) {
  const int dim = d.form.dim();
  RMat p(dim, 2);
  p.col(0) = d.A;
  p.col(1) = d.B;
  if (d.B.norm() < 1e-8 || numerical_rank(p) < 2)
    throw PreconditionError("A and B are dependent (point of Sing(B))");
  const FrameSubspace plane(d.form, p);
  if (!null_lee(d.c, d.B)) {
    return FoliationFibre{CVec(), d.form, plane, FrameSubspace::zero(dim), plane,
                          orthogonal_complement(d.form, plane), d.c};
  }
  const FrameSubspace plane_perp = orthogonal_complement(d.form, plane);
  const RMat screen_basis = euclidean_complement_within(plane_perp.basis(), p);
  const FrameSubspace screen =
      screen_basis.cols() > 0 ? FrameSubspace(d.form, screen_basis) : FrameSubspace::zero(dim);
  if (dim < 6) {
    return FoliationFibre{CVec(), d.form, plane, plane, screen, FrameSubspace::zero(dim), d.c};
  }
  const FrameSubspace screen_perp = orthogonal_complement(d.form, screen);
  const RMat e = euclidean_complement_within(screen_perp.basis(), p);
  const TransversalPair pair =
      isotropic_transversal_pair(d.form, d.omega, d.theta, d.A, d.B, screen, e.col(0), e.col(1));
  RMat ltr(dim, 2);
  ltr.col(0) = pair.N1;
  ltr.col(1) = pair.N2;
  return FoliationFibre{CVec(), d.form, plane, plane, screen, FrameSubspace(d.form, ltr), d.c};
}

FoliationFibre second_foliation_fibre(const LCKStructure& lck, const CVec& z) {
  FoliationFibre f = second_foliation_fibre(point_data(lck, z));
  f.z = z;
  return f;
}

double integrability_residual(const LCKStructure& lck, const CVec& z, const FdOptions& fd) {
  const TangentVector br = lie_bracket(lck.chart, anti_lee_field(lck), lee_field(lck), z, fd);
  const LeeData d = lee_data(lck, z);
  RMat p(2 * lck.chart.n(), 2);
  p.col(0) = d.A.real_coords();
  p.col(1) = d.B.real_coords();
  const RVec v = br.real_coords();
  const RVec proj = p * p.colPivHouseholderQr().solve(v);
  // A complex bracket would signal non-real fields; keep its imaginary part in the residual.
  return std::hypot((v - proj).norm(), br.imag_part().norm());
}

TransversalPair isotropic_transversal_pair(const SemiEuclideanForm& form, const RVec& omega, const RVec& theta,
                                           const RVec& a, const RVec& b, const FrameSubspace& screen,
                                           const RVec& v1, const RVec& v2) {
  const int dim = form.dim();
  if (dim < 6) throw PreconditionError("isotropic transversal pair needs n >= 3");
  for (const RVec* w : {&omega, &theta, &a, &b, &v1, &v2})
    if (w->size() != dim) throw DimensionError("isotropic_transversal_pair: size mismatch");
  TransversalPair out;
  out.D = theta.dot(v1) * omega.dot(v2) - omega.dot(v1) * theta.dot(v2);
  if (std::abs(out.D) < 1e-10) throw DegenerateError("D = 0: {V1, V2} does not frame a valid complement");
  for (int i = 0; i < screen.dim(); ++i) {
    const RVec w = screen.vector(i);
    for (const RVec* v : {&v1, &v2})
      if (std::abs(inner(form, *v, w)) > 1e-9 * std::max(1.0, v->norm()) * std::max(1.0, w.norm()))
        throw PreconditionError("V_i is not orthogonal to the screen");
  }
  const RVec w1 = (omega.dot(v2) * v1 - omega.dot(v1) * v2) / out.D;
  const RVec w2 = -(theta.dot(v2) * v1 - theta.dot(v1) * v2) / out.D;
  out.lambda11 = -0.5 * inner(form, w1, w1);
  out.lambda22 = -0.5 * inner(form, w2, w2);
  out.lambda12 = -0.5 * inner(form, w1, w2);
  out.N1 = out.lambda11 * a + out.lambda12 * b + w1;
  out.N2 = out.lambda12 * a + out.lambda22 * b + w2;
  return out;
}

double pair_constraint_residual(const SemiEuclideanForm& form, const RVec& omega, const RVec& theta,
                                const TransversalPair& pair) {
  double r = std::abs(theta.dot(pair.N1) - 1.0);
  r = std::max(r, std::abs(omega.dot(pair.N2) - 1.0));
  r = std::max(r, std::abs(theta.dot(pair.N2)));
  r = std::max(r, std::abs(omega.dot(pair.N1)));
  r = std::max(r, std::abs(inner(form, pair.N1, pair.N1)));
  r = std::max(r, std::abs(inner(form, pair.N2, pair.N2)));
  r = std::max(r, std::abs(inner(form, pair.N1, pair.N2)));
  return r;
}

double h_P_residual(const LCKStructure& lck, const CVec& z, const FdOptions& fd) {
  const MetricChart& chart = lck.chart;
  const LeeData d = lee_data(lck, z);
  const SemiEuclideanForm form = tangent_form(chart, z);
  RMat p(2 * chart.n(), 2);
  p.col(0) = d.A.real_coords();
  p.col(1) = d.B.real_coords();
  const bool null_case = null_lee(d.c, p.col(1));
  const RMat gram = p.transpose() * form.gram() * p;
  const VectorField fields[2] = {anti_lee_field(lck), lee_field(lck)};
  const TangentVector at_z[2] = {d.A, d.B};
  double r = 0.0;
  for (const auto& xv : at_z) {
    for (const auto& yf : fields) {
      const TangentVector u = covariant_derivative(chart, xv, yf, z, fd);
      const RVec ur = u.real_coords();
      const RVec along = null_case ? RVec(p * p.colPivHouseholderQr().solve(ur))
                                   : RVec(p * gram.fullPivLu().solve(p.transpose() * form.gram() * ur));
      r = std::max(r, std::hypot((ur - along).norm(), u.imag_part().norm()));
    }
  }
  return r;
}

MeanCurvatureReport complex_submanifold_mean_curvature(const LCKStructure& lck, const ComplexImmersion& imm,
                                                       const CVec& u, const FdOptions& fd) {
  const MetricChart& chart = lck.chart;
  const int m = imm.m;
  if (u.size() != m) throw DimensionError("immersion parameter has wrong size");
  const CVec p = imm.map(u);
  if (!chart.in_domain(p)) throw DomainError("immersed point outside the chart domain");
  const CMat jac = imm.jacobian(u);
  if (jac.rows() != chart.n() || jac.cols() != m) throw DimensionError("immersion Jacobian has wrong shape");

  std::vector<CVec> dirs;
  for (int a = 0; a < 2 * m; ++a) {
    CVec d = CVec::Zero(m);
    d(a / 2) = (a % 2 == 0) ? Complex(1.0, 0.0) : kI;
    dirs.push_back(d);
  }
  std::vector<TangentVector> e;
  for (const CVec& d : dirs) e.push_back(TangentVector::real(jac * d));
  const int k = 2 * m;
  RMat gram(k, k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) gram(a, b) = metric_product(chart, p, e[a], e[b]).real();
  Eigen::FullPivLU<RMat> lu(gram);
  lu.setThreshold(1e-10);
  if (lu.rank() < k) throw DegenerateError("induced metric is degenerate");
  const RMat ginv = lu.inverse();

  auto normal = [&](const TangentVector& w) {
    CVec coeff(k);
    for (int b = 0; b < k; ++b) coeff(b) = metric_product(chart, p, e[b], w);
    const CVec c = ginv.cast<Complex>() * coeff;
    TangentVector out = w;
    for (int a = 0; a < k; ++a) out -= c(a) * e[a];
    return out;
  };

  const ConnectionCoefficients gamma = christoffel(chart, p, ChristoffelPath::Preferred, fd);
  auto h = [&](const CVec& xi, const CVec& eta) {
    const TangentVector x = TangentVector::real(jac * xi);
    auto y_comps = [&](const CVec& v) {
      const CVec q = imm.map(v);
      if (!chart.in_domain(q)) throw DomainError("finite-difference stencil leaves the chart domain");
      return CVec(TangentVector::real(imm.jacobian(v) * eta).components());
    };
    const double t = fd.step(u) / xi.norm();
    auto central = [&](double s) { return CVec((y_comps(u + s * xi) - y_comps(u - s * xi)) / (2.0 * s)); };
    const CVec dy = fd.richardson ? CVec((4.0 * central(0.5 * t) - central(t)) / 3.0) : central(t);
    const TangentVector y = TangentVector::real(jac * eta);
    return normal(TangentVector(dy) + gamma.contract(x, y));
  };

  const TangentVector bperp = normal(lee_field(lck)(p));
  MeanCurvatureReport rep;
  TangentVector mean = TangentVector::zero(chart.n());
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      const TangentVector hab = h(dirs[a], dirs[b]);
      mean += (ginv(a, b) / k) * hab;
      const TangentVector jj = h(kI * dirs[a], kI * dirs[b]);
      rep.eq18_residual = std::max(rep.eq18_residual, (jj + hab + gram(a, b) * bperp).norm());
    }
  }
  rep.bperp_norm = bperp.norm();
  rep.mean_curvature_norm = mean.norm();
  rep.h_plus_half_bperp = (mean + 0.5 * bperp).norm();
  return rep;
}

}  // namespace lcklab
