#include <doctest.h>

#include <cmath>

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "k3reg/numerics/elliptic.hpp"

using namespace k3reg;
using namespace k3reg::numerics;

namespace {
const double pi = boost::math::constants::pi<double>();

// Independent oracle: adaptive Gauss-Kronrod on the defining integrals.
double gk(auto f, double a, double b) {
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, 15, 1e-15);
}
}  // namespace

TEST_CASE("agm fixed points and domain") {
  CHECK(agm(1.0, 1.0) == 1.0);
  CHECK(agm(3.7, 3.7) == doctest::Approx(3.7).epsilon(1e-15));
  CHECK_THROWS_AS(agm(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(agm(-1.0, 1.0), DomainError);
}

TEST_CASE("agm(1,2) against the defining integral") {
  const double a = 1.0, b = 2.0;
  const double I = gk([&](double t) { return 1.0 / std::sqrt(a * a * std::cos(t) * std::cos(t) +
                                                             b * b * std::sin(t) * std::sin(t)); },
                      0.0, pi / 2);
  const double oracle = 1.0 / ((2.0 / pi) * I);
  CHECK(std::abs(agm(a, b) / oracle - 1.0) < 1e-12);
  CHECK(std::abs(agm(a, b) - 1.4567910310469068692) < 1e-15);
}

TEST_CASE("agm invariance and bracketing") {
  for (double a : {0.1, 0.7, 2.5, 40.0}) {
    for (double b : {0.3, 1.0, 9.0}) {
      const double m = agm(a, b);
      CHECK(m >= std::min(a, b));
      CHECK(m <= std::max(a, b));
      CHECK(m == doctest::Approx(agm((a + b) / 2, std::sqrt(a * b))).epsilon(1e-15));
    }
  }
}

TEST_CASE("elliptic_K values") {
  CHECK(elliptic_K(0.0) == doctest::Approx(pi / 2).epsilon(1e-15));
  const double k = 0.5;
  const double oracle =
      gk([&](double t) { return 1.0 / std::sqrt(1.0 - k * k * std::sin(t) * std::sin(t)); }, 0.0,
         pi / 2);
  CHECK(std::abs(elliptic_K(k) / oracle - 1.0) < 1e-12);
  CHECK(std::abs(elliptic_K(0.5) - 1.6857503548125960429) < 1e-14);
  CHECK_THROWS_AS(elliptic_K(1.0), DomainError);
  CHECK_THROWS_AS(elliptic_K(1.5), DomainError);
}

TEST_CASE("elliptic_K near k = 1") {
  double prev = 0.0;
  for (double k : {0.9, 0.99, 0.995, 0.999}) {
    const double K = elliptic_K(k);
    CHECK(K > prev);
    prev = K;
  }
  const double k = 0.999;
  const double ratio = elliptic_K(k) / std::log(4.0 / std::sqrt(1 - k * k));
  CHECK(std::abs(ratio - 1.0) < 0.02);
}

TEST_CASE("cubic half-periods match quadrature between the roots") {
  const double e1 = 2.0, e2 = 0.5, e3 = -2.5;
  const auto hp = cubic_half_periods(e1, e2, e3);
  // Substitutions x = e3 + (e2-e3) sin^2 t and x = e2 + (e1-e2) sin^2 t cancel
  // the two endpoint square roots analytically.
  const double Ir = gk([&](double t) {
    const double s = std::sin(t);
    const double x = e3 + (e2 - e3) * s * s;
    return 2 / std::sqrt(e1 - x);
  }, 0.0, pi / 2);
  const double Ii = gk([&](double t) {
    const double s = std::sin(t);
    const double x = e2 + (e1 - e2) * s * s;
    return 2 / std::sqrt(x - e3);
  }, 0.0, pi / 2);
  CHECK(std::abs(hp.real / Ir - 1) < 1e-12);
  CHECK(std::abs(hp.imag / Ii - 1) < 1e-12);
}
