#include <doctest.h>

#include <cmath>

#include "k3reg/numerics/ode.hpp"
#include "k3reg/picardfuchs/operators.hpp"
#include "k3reg/picardfuchs/period.hpp"

using namespace k3reg;
using namespace k3reg::picardfuchs;

TEST_CASE("decoupled operator coefficients") {
  const auto ode = decoupled_operator();
  REQUIRE(ode.order() == 2);
  const auto c = ode.coefficients_at(2.0);
  CHECK(c[2] == 576.0);
  CHECK(c[1] == 72.0 * 2 * 3);
  CHECK(c[0] == -5.0);
  // A constant is not annihilated.
  CHECK(c[0] * 3.0 == -15.0);
}

TEST_CASE("cubic operator transcription") {
  const auto ode = cubic_ode();
  REQUIRE(ode.order() == 3);
  const auto c = ode.coefficients_at(1.0);
  CHECK(c[3] == 1.0);
  CHECK(c[2] == doctest::Approx(393.0 / 130.0).epsilon(1e-15));
  CHECK(c[1] == doctest::Approx(269.0 / 260.0).epsilon(1e-15));
  CHECK(c[0] == doctest::Approx(1.0 / 520.0).epsilon(1e-15));
  const auto p = ode.poles();
  REQUIRE(p.size() == 2);
  CHECK(p[0] == doctest::Approx(-64.0));
  CHECK(p[1] == doctest::Approx(0.0));
}

TEST_CASE("quartic operator and factors") {
  const auto q = quartic_ode();
  REQUIRE(q.order() == 4);
  for (double v : q.coefficients_at(0.3)) CHECK(std::isfinite(v));
  const auto c = q.coefficients_at(2.0);
  CHECK(c[3] == doctest::Approx(2.0 * 8.0 / 6.0).epsilon(1e-15));
  CHECK(c[2] == doctest::Approx((1031.0 * 8 - 553.0 * 4 - 1175.0 * 2 - 167) / (72.0 * 4 * 9)));
  CHECK(c[1] == doctest::Approx((167.0 * 4 - 239.0 * 2 - 118) / (36.0 * 4 * 9)));
  CHECK(c[0] == doctest::Approx(385.0 / (20736.0 * 16 * 9)).epsilon(1e-15));
  const auto p = q.poles();
  REQUIRE(p.size() == 3);
  CHECK(p[0] == doctest::Approx(-1.0));
  CHECK(p[1] == doctest::Approx(0.0));
  CHECK(p[2] == doctest::Approx(1.0));

  const auto [f1, f2] = factor_odes();
  for (double s : {0.2, 0.7, 3.0}) {
    const auto a = f1.coefficients_at(s), b = f2.coefficients_at(s);
    CHECK(a[2] == b[2]);
    CHECK(a[1] == b[1]);
    CHECK(a[0] * s == doctest::Approx(b[0] * s * s));
  }
  CHECK(f1.coefficients_at(1.0)[0] == doctest::Approx(5.0 / 288.0));
}

TEST_CASE("suite bundles the five operators") {
  const auto s = pf_suite();
  CHECK(s.decoupled.variable == "j");
  CHECK(s.cubic_Yt.variable == "t");
  CHECK(s.quartic_sigma1.order() == 4);
  CHECK(s.factor1.name == "factor1");
  CHECK(s.factor2.name == "factor2");
}

TEST_CASE("Weierstrass slice has the prescribed j") {
  for (int j : {2, 5, 10, -3}) {
    CHECK(slice_j_invariant(numerics::BigRational(j)) == j);
    const auto w = weierstrass_slice(j);
    const double g2 = w.g2, g3 = w.g3;
    CHECK(g2 * g2 * g2 / (g2 * g2 * g2 - 27 * g3 * g3) == doctest::Approx(j).epsilon(1e-12));
  }
  CHECK_THROWS_AS(weierstrass_slice(1.0), DomainError);
}

TEST_CASE("slice roots and period") {
  for (double j : {1.5, 2.0, 5.0, 10.0, 100.0}) {
    const auto e = slice_roots(j);
    CHECK(e[0] > e[1]);
    CHECK(e[1] > e[2]);
    const double c = 27.0 * j / (j - 1.0);
    for (double x : e) CHECK(std::abs(4 * x * x * x - c * x - c) < 1e-12 * c * (1 + std::abs(x)));
    const double agm = real_period(j);
    const double quad = real_period_quadrature(j);
    CHECK(std::abs(agm - quad) / quad < 1e-9);
  }
  CHECK_THROWS_AS(normalized_period(1.0), DomainError);
  CHECK_THROWS_AS(normalized_period(0.5), DomainError);
}

TEST_CASE("normalized period values") {
  // 30-digit reference evaluations of the same definition.
  CHECK(normalized_period(2.0) == doctest::Approx(3.45050716815578).epsilon(1e-13));
  CHECK(normalized_period(5.0) == doctest::Approx(3.40133574184668).epsilon(1e-13));
  CHECK(normalized_period(10.0) == doctest::Approx(3.38805942858154).epsilon(1e-13));
}

TEST_CASE("decoupled operator annihilates the normalized period") {
  const auto ode = decoupled_operator();
  for (double j : {2.0, 5.0, 10.0}) {
    const double r3 = numerics::ode_residual(ode, normalized_period, j, 0.0, 3);
    CHECK(r3 < 1e-5);
    // More Richardson levels do not make it worse.
    const double r1 = numerics::ode_residual(ode, normalized_period, j, 0.0, 1);
    CHECK(r3 <= r1 * 1.01);
  }
  // The unnormalized period is not a solution.
  for (double j : {2.0, 5.0}) {
    CHECK(numerics::ode_residual(ode, real_period, j) > 1e-3);
  }
}
