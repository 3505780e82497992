#pragma once

#include <vector>

#include "k3reg/kummer/moduli.hpp"
#include "k3reg/numerics/quadrature.hpp"

namespace k3reg::regulator {

using kummer::KummerModuli;

/// Coefficient F of the pulled-back current F dgamma ^ dgamma-bar on the
/// normalized I1 fiber, for general (alpha, beta). Throws SingularPointError
/// at a pole.
Complex density_general(Complex gamma, const KummerModuli& m);

/// Same coefficient on the diagonal alpha = beta.
Complex density_diagonal(Complex gamma, Complex alpha);

/// Independent evaluation of the same coefficient as x'(gamma)/u times the
/// conjugate of y'(gamma)/v on the fiber, with u = sqrt(x(x-1)(x-alpha)) and
/// v = z x y / u. Derivatives come from a Cauchy contour integral around
/// gamma. Throws SingularPointError near branch points and poles.
Complex pullback_oracle(Complex gamma, const KummerModuli& m);

/// The square roots used by the oracle, exposed for identity checks.
struct OracleRoots {
  Complex x, y, z, u, v;
};
OracleRoots oracle_roots(Complex gamma, const KummerModuli& m);

/// Densities with respect to dx dy obtained from F dgamma ^ dgamma-bar
/// through dgamma ^ dgamma-bar = -2i dx ^ dy.
inline double real_part_density(Complex F) { return 2.0 * F.imag(); }
inline double imag_part_density(Complex F) { return -2.0 * F.real(); }

/// The gamma^2 values of the pole pairs, in the order
/// alpha, 1/beta, delta, 1+alpha-alpha beta, 1/(1+beta-alpha beta), then the
/// two roots of beta X^2 + (alpha^2 beta^2 - 3 alpha beta) X + alpha.
std::vector<Complex> pole_squares(const KummerModuli& m);

/// The 14 poles (inverse-modulus) plus the two points gamma = +-sqrt(delta)
/// where log|zeta| is singular (logarithmic).
numerics::SingularityRegistry density_registry(const KummerModuli& m);

/// log|(gamma + s)/(gamma - s)|, accurate near the real locus where it vanishes.
double log_abs_ratio(Complex gamma, Complex s);

}  // namespace k3reg::regulator
