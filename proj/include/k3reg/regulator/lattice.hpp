#pragma once

#include "k3reg/numerics/types.hpp"

namespace k3reg::regulator {

/// Period basis of dx/y on the Legendre curve y^2 = x(x-1)(x-alpha) for real
/// alpha outside {0, 1}: omega1 real, omega2 purely imaginary.
struct LegendrePeriods {
  Complex omega1;
  Complex omega2;
};

LegendrePeriods legendre_periods(double alpha);

/// |int_E dx/y ^ conj(dx/y)| = 2 |Im(conj(omega1) omega2)|.
double lattice_area(double alpha);

}  // namespace k3reg::regulator
