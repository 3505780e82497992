#pragma once

#include <cstddef>

#include "k3reg/numerics/cubature.hpp"
#include "k3reg/regulator/density.hpp"

namespace k3reg::regulator {

struct PsiOptions {
  /// Relative to the integral of the absolute integrand.
  double rel_tol = 1e-6;
  std::size_t max_evals = 60'000'000;
  /// Evaluate through density_general(.; alpha, alpha) instead of the
  /// diagonal formula.
  bool use_general = false;
};

struct PsiResult {
  double alpha = 0.0;
  double psi = 0.0;
  double eta = 0.0;
  /// psi / lattice_area(alpha)
  double psi_normalized = 0.0;
  double err_abs = 0.0;
  double eta_err_abs = 0.0;
  /// Imaginary residue of the psi integral (a realness check).
  double psi_imag = 0.0;
  std::size_t evals = 0;
  bool converged = false;
  /// alpha within 1e-3 of a point where the family degenerates.
  bool near_excluded = false;
};

/// psi(alpha) and eta(alpha) on the diagonal with sqrt(delta) = +i. Throws
/// DomainError at alpha in {0, 1, -1, 2}.
PsiResult psi(double alpha, const PsiOptions& opts = {});

/// The two sphere integrals log|zeta| Re(F), log|zeta| Im(F) for general
/// moduli, using the branch of sqrt(delta) they carry.
struct PairingResult {
  numerics::CubatureResult re_part;
  numerics::CubatureResult im_part;
};
PairingResult pairing(const KummerModuli& m, const PsiOptions& opts = {});

struct LimitResult {
  /// Integral of log|(g+i)/(g-i)| Im(g) / (|g^2-1|^2 |g^2+1|) over the sphere.
  double value = 0.0;
  double err_abs = 0.0;
  std::size_t evals = 0;
  bool converged = false;
};

/// The alpha = 1 integral, over the whole sphere or the upper half plane.
/// The limit of psi at alpha = 1 is -16 times the sphere value.
LimitResult psi_at_one(double rel_tol = 1e-6,
                       numerics::SphereSector sector = numerics::SphereSector::Whole);

/// Density of the alpha = 1 integrand with respect to dx dy.
double limit_density(Complex gamma);

}  // namespace k3reg::regulator
