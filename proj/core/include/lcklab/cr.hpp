#pragma once

// CR geometry of the first foliation's leaves, the leaf space of the Plus
// region of the Hopf manifold, and the Siegel-domain boundary.

#include <optional>
#include <vector>

#include "lcklab/lck.hpp"
#include "lcklab/models.hpp"
#include "lcklab/semieuclid.hpp"

namespace lcklab {

struct CRFibre {
  CVec z;
  CMat t10;                      // columns: (1,0) vectors (holomorphic parts), Hermitian-orthonormal
  RMat h_real;                   // real basis of the maximal complex distribution
  TangentVector characteristic;  // generator of T(F) / H(F)
  double c = 0.0;
};

/// T_{1,0} = {V of type (1,0) : omega(V) = 0}.
CRFibre cr_fibre(const LCKStructure& lck, const CVec& z);

/// Projection of a holomorphic vector onto T_{1,0} at p (Hermitian projection).
CVec project_t10(const LCKStructure& lck, const CVec& p, const CVec& v);

/// max over the T_{0,1} basis of |Zbar(f)|.
double tangential_cr_residual(const LCKStructure& lck, const CVec& z, const ComplexScalarField& f,
                              const FdOptions& fd = {});

/// i times the characteristic component of [V, conj W], V, W holomorphic
/// parts of T_{1,0} vectors at z.
Complex levi_form(const LCKStructure& lck, const CVec& z, const CVec& v, const CVec& w, const FdOptions& fd = {});
/// Levi matrix on the T_{1,0} basis of cr_fibre.
CMat levi_matrix(const LCKStructure& lck, const CVec& z, const FdOptions& fd = {});
bool levi_flat_detector(const LCKStructure& lck, const CVec& z, double tol = 1e-6, const FdOptions& fd = {});

/// Inertia of a Hermitian matrix: negative and positive eigenvalue counts.
struct HermitianSignature {
  int negative = 0;
  int positive = 0;
  int zero = 0;
};
HermitianSignature hermitian_signature(const CMat& m, double rel_tol = 1e-9);

struct LeafLabel {
  Complex w;
  double a = 0.0;             // arg(w) / (2 pi log lambda)
  double chart_radius = 0.0;  // lambda^{-[a]} e^{arg(w)/2pi}
};

LeafLabel leaf_label_from_w(const HopfModel& model, Complex w);
/// w = exp(2 pi i log|z|_{s,n} / log lambda). Requires b_{s,n}(z,z) > 0.
LeafLabel leaf_label(const HopfModel& model, const CVec& z);
bool same_leaf(const HopfModel& model, const CVec& z, const CVec& zp, double tol = 1e-9);
/// m with w' = e^{2 m pi i log lambda} w, searched over |m| <= max_m.
std::optional<int> lemma7_same_leaf(const HopfModel& model, Complex w, Complex wp, int max_m = 1000,
                                    double tol = 1e-9);
/// True when a = arg(w)/(2 pi log lambda) is an integer (the leaf L_0).
bool is_excluded_leaf(const HopfModel& model, Complex w, double tol = 1e-12);

/// For each zeta on the pseudosphere, the representative
/// lambda^{-[a]} e^{arg(w)/2pi} zeta must have |.|_{s,n} = chart_radius and lie
/// in lambda < |.|_{s,n} < 1. Returns the max residual. Throws
/// PreconditionError for the excluded leaf.
double leaf_chart_image_check(const HopfModel& model, Complex w, const std::vector<CVec>& zetas);

/// Levi matrix of the Siegel boundary at zeta from the spanning fields
/// d/dzeta_alpha + 2i eps_alpha conj(zeta_alpha) d/dzeta_n, bracketed analytically.
CMat siegel_levi_matrix(int n, int s, const CVec& zeta);

/// Max over the pseudosphere T_{1,0} basis at z of |d rho(dC V)|, rho the
/// Siegel boundary defining function.
double cayley_cr_residual(int s, double r, const CVec& z);

/// The full-leaf CR extension statement needs 0 < s < n and n != 2s + 1.
bool full_leaf_extension_applicable(int n, int s);

}  // namespace lcklab
