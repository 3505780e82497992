#pragma once

#include <array>

#include "k3reg/numerics/polynomial.hpp"

namespace k3reg::picardfuchs {

/// Weierstrass curve y^2 = 4x^3 - g2 x - g3 with g2 = g3 = 27j/(j-1).
struct WeierstrassSlice {
  double j;
  double g2;
  double g3;
};

WeierstrassSlice weierstrass_slice(double j);

/// g2^3 / (g2^3 - 27 g3^2) computed exactly for the slice at rational j.
numerics::BigRational slice_j_invariant(const numerics::BigRational& j);

/// Real roots e1 > e2 > e3 of 4x^3 - g2 x - g3 (j > 1).
std::array<double, 3> slice_roots(double j);

/// Real period 2 int_{e1}^inf dx/y of dx/y on the slice (AGM).
double real_period(double j);

/// Same period by 1D quadrature, used as an independent check.
double real_period_quadrature(double j, double rel_tol = 1e-13);

/// g2(j)^{1/4} times the real period. Throws DomainError for j <= 1.
double normalized_period(double j);

}  // namespace k3reg::picardfuchs
