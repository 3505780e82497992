#include "k3reg/kummer/fiber.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace k3reg::kummer {

namespace {

double rel_residual(Complex lhs, Complex rhs) {
  const double scale = std::abs(lhs) + std::abs(rhs);
  return scale == 0.0 ? 0.0 : std::abs(lhs - rhs) / scale;
}

}  // namespace

PlanePoint conic_param(Complex xi, const KummerModuli& m) {
  const Complex a = m.alpha(), b = m.beta();
  const Complex D = m.Delta(xi);
  // Delta below its own rounding noise counts as a root.
  const double noise = 8 * std::numeric_limits<double>::epsilon() *
                       (std::abs(a * xi * xi) + std::abs(a * b * xi) + std::abs(b));
  if (std::abs(D) <= noise) {
    return {{}, {}, true};
  }
  return {a * (xi * xi + (b - 1.0) * xi) / D, b * ((a - 1.0) * xi + 1.0) / D, false};
}

PlanePoint conic_param(const SpherePoint& xi, const KummerModuli& m) {
  if (xi.infinite) {
    return {1.0, 0.0, false};
  }
  return conic_param(xi.value, m);
}

Complex conic_equation(Complex x, Complex y, const KummerModuli& m) {
  const Complex a = m.alpha(), b = m.beta();
  return -x * x / a - y * y / b + (a + 1.0) / a * x + (b + 1.0) / b * y - 1.0 - x * y;
}

SpherePoint residual_xi(Complex gamma, const KummerModuli& m) {
  const Complex g2 = gamma * gamma;
  const Complex den = g2 - m.alpha();
  if (std::abs(den) <= 8 * std::numeric_limits<double>::epsilon() * (std::abs(g2) + std::abs(m.alpha()))) {
    return SpherePoint::at_infinity();
  }
  return SpherePoint::finite((1.0 - m.beta() * g2) / den);
}

SpherePoint residual_xi(const SpherePoint& gamma, const KummerModuli& m) {
  if (gamma.infinite) {
    return SpherePoint::finite(-m.beta());
  }
  return residual_xi(gamma.value, m);
}

SpherePoint gamma_squared_from_xi(const SpherePoint& xi, const KummerModuli& m) {
  if (xi.infinite) {
    return SpherePoint::finite(m.alpha());
  }
  const Complex den = xi.value + m.beta();
  if (den == 0.0) {
    return SpherePoint::at_infinity();
  }
  return SpherePoint::finite((1.0 + m.alpha() * xi.value) / den);
}

FiberPoint fiber_point(const SpherePoint& gamma, const KummerModuli& m) {
  FiberPoint p;
  p.gamma = gamma;
  p.xi = residual_xi(gamma, m);
  const PlanePoint xy = conic_param(p.xi, m);
  if (xy.at_infinity) {
    p.at_infinity = true;
    return p;
  }
  p.x = xy.x;
  p.y = xy.y;
  const Complex a = m.alpha(), b = m.beta();
  if (gamma.infinite) {
    // (xi + beta) gamma = (1 - alpha beta) gamma / (gamma^2 - alpha) -> 0
    p.z = 0.0;
  } else if (p.xi.infinite) {
    // (alpha xi + beta)(xi + beta) / Delta(xi) -> 1
    p.z = gamma.value;
  } else {
    const Complex g = gamma.value, xi = p.xi.value;
    p.z = (a * xi + b) * (1.0 - a * b) * g / ((g * g - a) * m.Delta(xi));
  }
  return p;
}

FiberPoint fiber_point(Complex gamma, const KummerModuli& m) {
  return fiber_point(SpherePoint::finite(gamma), m);
}

double i1_residual(const FiberPoint& p, const KummerModuli& m) {
  if (p.at_infinity || p.xi.infinite) {
    return 0.0;
  }
  const Complex a = m.alpha(), b = m.beta(), xi = p.xi.value;
  const Complex D = m.Delta(xi);
  const Complex t = b + a * xi;
  return rel_residual(D * D * p.z * p.z, (xi + b) * (1.0 + a * xi) * t * t);
}

double quartic_residual(const FiberPoint& p, const KummerModuli& m) {
  if (p.at_infinity) {
    return 0.0;
  }
  const Complex a = m.alpha(), b = m.beta();
  return rel_residual(p.z * p.z * p.x * p.y, (p.x - 1.0) * (p.x - a) * (p.y - 1.0) * (p.y - b));
}

SpherePoint zeta_coord(const SpherePoint& gamma, const KummerModuli& m) {
  if (gamma.infinite) {
    return SpherePoint::finite(1.0);
  }
  const Complex s = m.sqrt_delta();
  const Complex den = gamma.value - s;
  if (den == 0.0) {
    return SpherePoint::at_infinity();
  }
  return SpherePoint::finite((gamma.value + s) / den);
}

SpherePoint zeta_inverse(const SpherePoint& zeta, const KummerModuli& m) {
  const Complex s = m.sqrt_delta();
  if (zeta.infinite) {
    return SpherePoint::finite(s);
  }
  const Complex den = zeta.value - 1.0;
  if (den == 0.0) {
    return SpherePoint::at_infinity();
  }
  return SpherePoint::finite(s * (zeta.value + 1.0) / den);
}

}  // namespace k3reg::kummer
