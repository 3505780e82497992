#pragma once

#include "k3reg/kummer/moduli.hpp"

namespace k3reg::kummer {

/// Affine point (x, y) of the plane, or the point (inf, inf) reached where
/// Delta(xi) vanishes.
struct PlanePoint {
  Complex x{};
  Complex y{};
  bool at_infinity = false;
};

/// Rational parametrization of the mu = 1 conic by the slope coordinate xi.
PlanePoint conic_param(const SpherePoint& xi, const KummerModuli& m);
PlanePoint conic_param(Complex xi, const KummerModuli& m);

/// Left side of the mu = 1 conic equation R(x, y, 1) - x y.
Complex conic_equation(Complex x, Complex y, const KummerModuli& m);

/// xi(gamma) = (1 - beta gamma^2) / (gamma^2 - alpha); infinite at gamma^2 = alpha.
SpherePoint residual_xi(const SpherePoint& gamma, const KummerModuli& m);
SpherePoint residual_xi(Complex gamma, const KummerModuli& m);

/// gamma^2 = (1 + alpha xi) / (xi + beta), the inverse of residual_xi up to sign.
SpherePoint gamma_squared_from_xi(const SpherePoint& xi, const KummerModuli& m);

struct FiberPoint {
  SpherePoint gamma;
  SpherePoint xi;
  Complex x{};
  Complex y{};
  Complex z{};
  /// (x, y) = (inf, inf); x, y, z are then not meaningful.
  bool at_infinity = false;
};

/// Point of the normalized I1 fiber over gamma.
FiberPoint fiber_point(const SpherePoint& gamma, const KummerModuli& m);
FiberPoint fiber_point(Complex gamma, const KummerModuli& m);

/// Relative residual of Delta(xi)^2 z^2 = (xi+beta)(1+alpha xi)(beta+alpha xi)^2.
double i1_residual(const FiberPoint& p, const KummerModuli& m);
/// Relative residual of z^2 x y = (x-1)(x-alpha)(y-1)(y-beta).
double quartic_residual(const FiberPoint& p, const KummerModuli& m);

/// zeta = (gamma + sqrt(delta)) / (gamma - sqrt(delta)) with the branch
/// carried by the moduli.
SpherePoint zeta_coord(const SpherePoint& gamma, const KummerModuli& m);
SpherePoint zeta_inverse(const SpherePoint& zeta, const KummerModuli& m);

}  // namespace k3reg::kummer
