#include "k3reg/picardfuchs/normal_form.hpp"

#include <cmath>

namespace k3reg::picardfuchs {

double qm_evaluate(double a, double b, double d, double X, double Y, double Z, double W) {
  return Y * Y * Z * W - 4.0 * X * X * X * Z + 3.0 * a * X * Z * W * W + b * Z * W * W * W -
         0.5 * (d * Z * Z * W * W + W * W * W * W);
}

std::array<double, 4> qm_gradient(double a, double b, double d, double X, double Y, double Z,
                                  double W) {
  return {
      -12.0 * X * X * Z + 3.0 * a * Z * W * W,
      2.0 * Y * Z * W,
      Y * Y * W - 4.0 * X * X * X + 3.0 * a * X * W * W + b * W * W * W - d * Z * W * W,
      Y * Y * Z + 6.0 * a * X * Z * W + 3.0 * b * Z * W * W - d * Z * Z * W - 2.0 * W * W * W,
  };
}

std::pair<BigRational, BigRational> invariants(const MPolarizedPoint& p) {
  if (p.d == 0) {
    throw DomainError("invariants: d must be nonzero");
  }
  return {p.a * p.a * p.a / p.d, p.b * p.b / p.d};
}

MPolarizedPoint rescale(const MPolarizedPoint& p, const BigRational& lambda) {
  const BigRational l2 = lambda * lambda;
  const BigRational l3 = l2 * lambda;
  return {l2 * p.a, l3 * p.b, l3 * l3 * p.d};
}

MPolarizedPoint modular_parametrization(const BigRational& t) {
  if (t == 0) {
    throw DomainError("modular_parametrization: t = 0 gives d = 0");
  }
  MPolarizedPoint p;
  p.a = (t + 16) * (t + 256);
  p.b = (t - 512) * (t - 8) * (t + 64);
  p.d = BigRational(4096 * 729) * t * t * t;
  return p;
}

std::array<double, 3> modular_parametrization(double t) {
  if (t == 0.0) {
    throw DomainError("modular_parametrization: t = 0 gives d = 0");
  }
  return {(t + 16.0) * (t + 256.0), (t - 512.0) * (t - 8.0) * (t + 64.0),
          4096.0 * 729.0 * t * t * t};
}

JPair j_pair_from_symmetric(double sigma, double pi) {
  JPair out;
  out.sigma = sigma;
  out.pi = pi;
  const double disc = sigma * sigma - 4.0 * pi;
  const double scale = std::max(sigma * sigma, std::abs(4.0 * pi));
  out.double_root = std::abs(disc) <= 1e-12 * scale;
  if (out.double_root) {
    out.j1 = out.j2 = Complex(sigma / 2.0, 0.0);
  } else if (disc > 0) {
    // Larger root first, the other from the product to avoid cancellation.
    const double r = 0.5 * (sigma + std::copysign(std::sqrt(disc), sigma));
    out.j1 = Complex(r, 0.0);
    out.j2 = Complex(r != 0.0 ? pi / r : 0.0, 0.0);
  } else {
    const double im = 0.5 * std::sqrt(-disc);
    out.j1 = Complex(sigma / 2.0, im);
    out.j2 = Complex(sigma / 2.0, -im);
  }
  return out;
}

JPair j_pair_from_invariants(double a3_over_d, double b2_over_d) {
  return j_pair_from_symmetric(1.0 + a3_over_d - b2_over_d, a3_over_d);
}

JPair j_pair_from_point(const MPolarizedPoint& p) {
  const auto [u, v] = invariants(p);
  // sigma is formed exactly before rounding.
  const BigRational sigma = 1 + u - v;
  return j_pair_from_symmetric(static_cast<double>(sigma), static_cast<double>(u));
}

std::pair<BigRational, BigRational> invariants_from_j_pair(const BigRational& j1,
                                                           const BigRational& j2) {
  return {j1 * j2, (j1 - 1) * (j2 - 1)};
}

}  // namespace k3reg::picardfuchs
