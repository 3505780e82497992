#include "k3reg/regulator/lattice.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "k3reg/numerics/elliptic.hpp"

namespace k3reg::regulator {

LegendrePeriods legendre_periods(double alpha) {
  if (!std::isfinite(alpha) || alpha == 0.0 || alpha == 1.0) {
    throw DomainError("legendre_periods: alpha must be real and avoid 0, 1");
  }
  std::array<double, 3> e{0.0, 1.0, alpha};
  std::sort(e.begin(), e.end(), std::greater<>());
  const auto hp = numerics::cubic_half_periods(e[0], e[1], e[2]);
  return {Complex(2.0 * hp.real, 0.0), Complex(0.0, 2.0 * hp.imag)};
}

double lattice_area(double alpha) {
  const auto p = legendre_periods(alpha);
  return 2.0 * std::abs(std::imag(std::conj(p.omega1) * p.omega2));
}

}  // namespace k3reg::regulator
