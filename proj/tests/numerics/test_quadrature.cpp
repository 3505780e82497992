#include <doctest.h>

#include <cmath>

#include <boost/math/constants/constants.hpp>

#include "k3reg/numerics/quadrature.hpp"

using namespace k3reg;
using namespace k3reg::numerics;

TEST_CASE("endpoint singularities") {
  SingularityRegistry reg;
  auto r1 = integrate_1d<double>([](double x) { return 1 / std::sqrt(x); }, 0.0, 1.0, reg, 1e-12);
  CHECK(r1.converged);
  CHECK(r1.value == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(r1.evals > 0);

  auto r2 = integrate_1d<double>([](double x) { return std::log(x); }, 0.0, 1.0, reg, 1e-12);
  CHECK(r2.value == doctest::Approx(-1.0).epsilon(1e-12));

  auto r3 = integrate_1d<double>(
      [](double x, double xc) {
        // xc keeps 1 - x accurate next to the right end.
        const double one_minus = xc > 0 ? xc : 1 - x;
        return 1 / std::sqrt(x * one_minus);
      },
      0.0, 1.0, reg, 1e-12);
  CHECK(r3.value == doctest::Approx(boost::math::constants::pi<double>()).epsilon(1e-12));
  CHECK(r3.err_abs <= 1e-12 * 4);
}

TEST_CASE("interior registry points split the interval") {
  SingularityRegistry reg;
  reg.add(0.3, SingularityKind::SqrtEndpoint);
  // Next to the cut the endpoint complement carries the distance exactly.
  auto f = [](double x, double xc) {
    const double d = std::abs(x - 0.3) < 0.1 ? std::abs(xc) : std::abs(x - 0.3);
    return 1 / std::sqrt(d);
  };
  auto r = integrate_1d<double>(f, 0.0, 1.0, reg, 1e-12);
  const double exact = 2 * std::sqrt(0.3) + 2 * std::sqrt(0.7);
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(exact).epsilon(1e-12));
  CHECK(reg.interior_points(0.0, 1.0).size() == 1);
  CHECK(reg.interior_points(0.3, 1.0).empty());
}

TEST_CASE("reversed and infinite intervals") {
  SingularityRegistry reg;
  auto f = [](double x) { return std::exp(-x); };
  auto r = integrate_1d<double>(f, 1.0, 0.0, reg, 1e-12);
  CHECK(r.value == doctest::Approx(-(1 - std::exp(-1.0))).epsilon(1e-12));
  auto g = [](double x) { return 1 / (1 + x * x); };
  auto ri = integrate_1d<double>(g, 0.0, std::numeric_limits<double>::infinity(), reg, 1e-12);
  CHECK(ri.value == doctest::Approx(boost::math::constants::half_pi<double>()).epsilon(1e-12));
}

TEST_CASE("extended precision path") {
  SingularityRegistry reg;
  auto r = integrate_1d<Quad>([](Quad x) { return 1 / sqrt(x); }, Quad(0), Quad(1), reg, Quad(1e-28));
  CHECK(abs(r.value - 2) < Quad(1e-27));
}

TEST_CASE("non-convergence is reported, not hidden") {
  SingularityRegistry reg;
  // 1/x is not integrable on (0, 1].
  auto r = integrate_1d<double>([](double x) { return 1 / x; }, 0.0, 1.0, reg, 1e-12);
  CHECK_FALSE(r.converged);
}
