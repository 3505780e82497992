#pragma once

#include <cmath>
#include <limits>

#include <boost/math/constants/constants.hpp>

#include "k3reg/numerics/types.hpp"

namespace k3reg::numerics {

/// Arithmetic-geometric mean of two positive reals. The iteration is a pure
/// function of the current pair, so agm(a, b) == agm((a+b)/2, sqrt(ab)) holds
/// bit for bit.
template <class Real>
Real agm(Real a, Real b) {
  using std::abs;
  using std::sqrt;
  if (!(a > 0) || !(b > 0)) {
    throw DomainError("agm: arguments must be positive");
  }
  const Real eps = std::numeric_limits<Real>::epsilon();
  for (int it = 0; it < 100; ++it) {
    if (abs(a - b) <= 2 * eps * a) {
      break;
    }
    const Real next_a = (a + b) / 2;
    const Real next_b = sqrt(a * b);
    a = next_a;
    b = next_b;
  }
  return (a + b) / 2;
}

/// K(k) from the complementary modulus k' = sqrt(1 - k^2); accurate as k -> 1.
template <class Real>
Real elliptic_K_complement(Real kprime) {
  if (!(kprime > 0) || kprime > 1) {
    throw DomainError("elliptic_K: complementary modulus must lie in (0, 1]");
  }
  return boost::math::constants::pi<Real>() / (2 * agm(Real(1), kprime));
}

/// Complete elliptic integral of the first kind, modulus convention:
/// K(k) = int_0^{pi/2} dtheta / sqrt(1 - k^2 sin^2 theta), 0 <= k < 1.
template <class Real>
Real elliptic_K(Real k) {
  using std::sqrt;
  if (!(k >= 0) || !(k < 1)) {
    throw DomainError("elliptic_K: modulus must lie in [0, 1)");
  }
  return elliptic_K_complement(sqrt((1 - k) * (1 + k)));
}

/// Half-periods of the real cubic (x - e1)(x - e2)(x - e3), e1 > e2 > e3:
///   real = int_{e1}^{inf} dx / sqrt|f| = int_{e3}^{e2} dx / sqrt|f|
///   imag = int_{e2}^{e1} dx / sqrt|f|
template <class Real>
struct RealCubicHalfPeriods {
  Real real;
  Real imag;
};

template <class Real>
RealCubicHalfPeriods<Real> cubic_half_periods(Real e1, Real e2, Real e3) {
  using std::sqrt;
  if (!(e1 > e2) || !(e2 > e3)) {
    throw DomainError("cubic_half_periods: roots must be strictly decreasing");
  }
  const Real pi = boost::math::constants::pi<Real>();
  return {pi / agm(sqrt(e1 - e3), sqrt(e1 - e2)),
          pi / agm(sqrt(e1 - e3), sqrt(e2 - e3))};
}

// Non-template conveniences (double precision).
double agm(double a, double b);
double elliptic_K(double k);

}  // namespace k3reg::numerics
