#include "k3reg/picardfuchs/period.hpp"

#include <cmath>

#include <boost/math/constants/constants.hpp>

#include "k3reg/numerics/elliptic.hpp"
#include "k3reg/numerics/quadrature.hpp"

namespace k3reg::picardfuchs {

namespace {

constexpr double kPi = boost::math::constants::pi<double>();

void require_domain(double j) {
  if (!(j > 1.0) || !std::isfinite(j)) {
    throw DomainError("normalized_period: j must be a finite real > 1");
  }
}

// Trigonometric form of the three real roots: e_k = 2R cos(a - 2 pi k/3)
// with R = sqrt(c/12), cos(3a) = sqrt(27/c). Differences use the product
// formulas so that nothing cancels.
struct RootGeometry {
  double R;
  double a;
};

RootGeometry geometry(double j) {
  const double c = 27.0 * j / (j - 1.0);
  return {std::sqrt(c / 12.0), std::acos(std::sqrt((j - 1.0) / j)) / 3.0};
}

}  // namespace

WeierstrassSlice weierstrass_slice(double j) {
  if (j == 1.0) {
    throw DomainError("weierstrass_slice: j = 1 is a pole of the slice");
  }
  const double g = 27.0 * j / (j - 1.0);
  return {j, g, g};
}

numerics::BigRational slice_j_invariant(const numerics::BigRational& j) {
  if (j == 1) {
    throw DomainError("slice_j_invariant: j = 1 is a pole of the slice");
  }
  const numerics::BigRational g = 27 * j / (j - 1);
  const numerics::BigRational g3 = g * g * g;
  return g3 / (g3 - 27 * g * g);
}

std::array<double, 3> slice_roots(double j) {
  require_domain(j);
  const auto [R, a] = geometry(j);
  return {2.0 * R * std::cos(a), 2.0 * R * std::cos(a - 2.0 * kPi / 3.0),
          2.0 * R * std::cos(a + 2.0 * kPi / 3.0)};
}

double real_period(double j) {
  require_domain(j);
  const auto [R, a] = geometry(j);
  const double k = 2.0 * std::sqrt(3.0) * R;
  const double e13 = k * std::sin(kPi / 3.0 + a);
  const double e12 = k * std::sin(kPi / 3.0 - a);
  return kPi / numerics::agm(std::sqrt(e13), std::sqrt(e12));
}

double real_period_quadrature(double j, double rel_tol) {
  require_domain(j);
  const auto [R, a] = geometry(j);
  const double k = 2.0 * std::sqrt(3.0) * R;
  const double e12 = k * std::sin(kPi / 3.0 - a);
  const double e13 = k * std::sin(kPi / 3.0 + a);
  // 2 int_{e1}^inf dx / sqrt(4 f); x = e1 + q^2 removes the endpoint root.
  auto f = [&](double q) { return 2.0 / std::sqrt((q * q + e12) * (q * q + e13)); };
  const double inf = std::numeric_limits<double>::infinity();
  const auto r = numerics::integrate_1d<double>(f, 0.0, inf, {}, rel_tol);
  if (!r.converged) {
    throw DomainError("real_period_quadrature: quadrature did not converge");
  }
  return r.value;
}

double normalized_period(double j) {
  return std::pow(weierstrass_slice(j).g2, 0.25) * real_period(j);
}

}  // namespace k3reg::picardfuchs
