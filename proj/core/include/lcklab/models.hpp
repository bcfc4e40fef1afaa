#pragma once

// Concrete geometries: the indefinite Hopf manifold, flat indefinite C^n,
// constant-Lee-form flat data, the Tricerri-family metric, and the maps
// between them.

#include <optional>

#include "lcklab/lck.hpp"
#include "lcklab/semieuclid.hpp"

namespace lcklab {

/// -1 for the first s (0-based j < s) coordinates, +1 otherwise.
inline double eps(int s, int j) { return j < s ? -1.0 : 1.0; }

/// b_{s,n}(z, w) = -sum_{j<s} z_j conj(w_j) + sum_{j>=s} z_j conj(w_j).
Complex b_form(int s, const CVec& z, const CVec& w);
/// b_{s,n}(z, z), real.
double b_norm2(int s, const CVec& z);

enum class HopfRegion { Plus, Minus };

struct HopfModel {
  int n = 2;
  int s = 1;
  double lambda = 0.5;
  HopfRegion region = HopfRegion::Plus;

  /// Throws PreconditionError unless n >= 2, 0 < s < n, 0 < lambda < 1.
  void validate() const;
};

// --- charts and structures -------------------------------------------------

/// g_{j kbar} = 1/2 |z|^{-2}_{s,n} eps_j delta_{jk} on the chosen region.
MetricChart hopf_chart(const HopfModel& model);
ConnectionCoefficients hopf_christoffel(int s, int n, const CVec& z);
/// omega = -d log |z|^2_{s,n}.
LCKStructure hopf_lck(const HopfModel& model);

/// Flat indefinite C^n_s with real Gram h_{2s,2n}.
MetricChart flat_chart(int n, int s);
/// Flat chart with omega = 0.
LCKStructure flat_kahler(int n, int s);
/// Flat chart with a constant Lee form.
LCKStructure constant_lee_structure(int n, int s, const Covector& omega);
/// Flat chart with omega = g_0(., B) for the null vector B with hol part
/// (1, 0.., 1, 0..) (first coordinate and coordinate s).
LCKStructure synthetic_null(int n, int s);
/// Same, for an arbitrary real B.
LCKStructure synthetic_lee(int n, int s, const TangentVector& b);

/// Points are (w, z_1..z_n); the chart has complex dimension n+1 and index s.
struct TricerriModel {
  int n = 1;
  int s = 1;
  void validate() const;
};

MetricChart tricerri_chart(const TricerriModel& model);
ConnectionCoefficients tricerri_christoffel(const TricerriModel& model, const CVec& p);
/// omega = (dw - dwbar)/(w - wbar) = d log Im(w).
LCKStructure tricerri_lck(const TricerriModel& model);
/// Im(w)^{-3} dw dwbar + sum eps_j dz^j dzbar^j.
MetricChart tricerri_auxiliary_chart(const TricerriModel& model);

/// Max metric-component difference under pullback by (w, z) -> (alpha w, beta z).
/// Requires alpha > 0 and alpha |beta|^2 = 1.
double gab_invariance_residual(const TricerriModel& model, double alpha, Complex beta, const CVec& p);

// --- Hopf maps -------------------------------------------------------------

/// m with z' = lambda^m z, if any.
std::optional<int> deck_equivalent(const HopfModel& model, const CVec& z, const CVec& zp, double tol = 1e-9);

struct HopfImage {
  CVec zeta;  // |zeta|_{s,n} = 1
  Complex w;  // |w| = 1
};

/// F(pi(z)) = (z / |z|_{s,n}, exp(2 pi i log|z|_{s,n} / log lambda)).
HopfImage hopf_diffeo(const HopfModel& model, const CVec& z);
/// lambda^{arg(w)/2pi} zeta, arg in [0, 2pi).
CVec hopf_diffeo_inv(const HopfModel& model, const CVec& zeta, Complex w);

/// arg in [0, 2pi).
double arg_0_2pi(Complex w);

/// Max component difference between g at z and the pullback of g at e^zeta z.
double torus_pullback_isometry_residual(const HopfModel& model, Complex zeta, const CVec& z);
/// Same for the deck transformation z -> lambda^m z.
double deck_pullback_residual(const HopfModel& model, int m, const CVec& z);

struct FibrationSplit {
  SemiEuclideanForm form;
  FrameSubspace vertical;    // span{A, B}
  FrameSubspace horizontal;  // g-orthogonal complement
};

/// Requires |z|_{s,n} = 1 on the Plus region.
FibrationSplit fibration_split(const HopfModel& model, const CVec& z);

/// Max over the A and B flows of |d/dt g(u_t, v_t)| for horizontal u, v
/// pushed along z -> e^t z and z -> e^{it} z.
double submersion_isometry_residual(const HopfModel& model, const CVec& z, const TangentVector& u,
                                    const TangentVector& v, const FdOptions& fd = {});

/// F_t(z) = ((1-t) z', z'') with z' the first s coordinates.
CVec retraction(const HopfModel& model, double t, const CVec& z);

struct SiegelBoundaryPoint {
  CVec zeta;
  /// Im(zeta_n) - sum_{alpha<n} eps_alpha |zeta_alpha|^2.
  double residual = 0.0;
};

/// (z' / (r + z_n), i (r - z_n) / (r + z_n)).
SiegelBoundaryPoint cayley(int s, double r, const CVec& z);
/// Holomorphic Jacobian d zeta / d z.
CMat cayley_jacobian(double r, const CVec& z);

}  // namespace lcklab
