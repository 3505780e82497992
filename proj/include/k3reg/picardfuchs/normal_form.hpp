#pragma once

#include <array>
#include <utility>

#include "k3reg/numerics/polynomial.hpp"
#include "k3reg/numerics/types.hpp"

namespace k3reg::picardfuchs {

using numerics::BigRational;

/// Weighted-projective point [a, b, d] of weights (2, 3, 6), d != 0.
struct MPolarizedPoint {
  BigRational a;
  BigRational b;
  BigRational d;
};

/// Quartic Y^2 Z W - 4 X^3 Z + 3a X Z W^2 + b Z W^3 - (d Z^2 W^2 + W^4)/2.
double qm_evaluate(double a, double b, double d, double X, double Y, double Z, double W);

/// Partials with respect to (X, Y, Z, W).
std::array<double, 4> qm_gradient(double a, double b, double d, double X, double Y, double Z,
                                  double W);

/// (a^3/d, b^2/d), exact. Throws DomainError if d == 0.
std::pair<BigRational, BigRational> invariants(const MPolarizedPoint& p);

/// (lambda^2 a, lambda^3 b, lambda^6 d).
MPolarizedPoint rescale(const MPolarizedPoint& p, const BigRational& lambda);

/// a = (t+16)(t+256), b = (t-512)(t-8)(t+64), d = 2^12 3^6 t^3.
MPolarizedPoint modular_parametrization(const BigRational& t);

/// Same family in floating point, for root finding along t.
std::array<double, 3> modular_parametrization(double t);

struct JPair {
  Complex j1;
  Complex j2;
  double sigma;
  double pi;
  /// The quadratic X^2 - sigma X + pi has a (numerically) double root.
  bool double_root = false;
};

/// Roots of X^2 - sigma X + pi.
JPair j_pair_from_symmetric(double sigma, double pi);

/// sigma = 1 + (a^3 - b^2)/d, pi = a^3/d, so that j1 j2 = a^3/d and
/// (j1 - 1)(j2 - 1) = b^2/d.
JPair j_pair_from_invariants(double a3_over_d, double b2_over_d);
JPair j_pair_from_point(const MPolarizedPoint& p);

/// Inverse direction: (a^3/d, b^2/d) = (j1 j2, (j1 - 1)(j2 - 1)).
std::pair<BigRational, BigRational> invariants_from_j_pair(const BigRational& j1,
                                                           const BigRational& j2);

}  // namespace k3reg::picardfuchs
