#include <doctest.h>

#include <random>

#include "k3reg/kummer/fiber.hpp"
#include "k3reg/regulator/density.hpp"

using namespace k3reg;
using namespace k3reg::regulator;

namespace {

Complex rnd(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  return {u(rng), u(rng)};
}

double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("general density specializes to the diagonal one") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    const Complex a = rnd(rng, -2.0, 2.0);
    const Complex g = rnd(rng, -2.0, 2.0);
    CHECK(rel(density_general(g, KummerModuli::diagonal(a)), density_diagonal(g, a)) < 1e-12);
  }
  const Complex g(0.0, 2.0);
  CHECK(rel(density_general(g, KummerModuli(0.5, 0.5)), density_diagonal(g, 0.5)) < 1e-12);
}

TEST_CASE("closed form at alpha = 1") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 50; ++i) {
    const Complex g = rnd(rng, -2.0, 2.0);
    const Complex g2 = g * g;
    const double D = std::norm(g2 - 1.0) * std::abs(g2 + 1.0);
    const Complex F = density_diagonal(g, 1.0);
    CHECK(rel(F, -8.0 * g / D) < 1e-12);
    // coefficient of dx ^ dy
    const double r = std::abs(g), th = std::arg(g);
    const Complex dxdy = 16.0 * r * Complex(-std::sin(th), std::cos(th)) / D;
    CHECK(rel(Complex(0.0, -2.0) * F, dxdy) < 1e-12);
    CHECK(real_part_density(F) == doctest::Approx(-16.0 * r * std::sin(th) / D).epsilon(1e-12));
  }
}

TEST_CASE("real and imaginary part conversion") {
  CHECK(real_part_density(Complex(0.0, 1.0)) == 2.0);
  CHECK(real_part_density(Complex(3.7, 0.0)) == 0.0);
  CHECK(imag_part_density(Complex(1.0, 0.0)) == -2.0);
}

TEST_CASE("density modulus matches the pullback oracle") {
  std::mt19937_64 rng(3);
  int tested = 0;
  double worst = 0.0;
  while (tested < 200) {
    const Complex a = rnd(rng, -2.0, 2.0), b = rnd(rng, -2.0, 2.0);
    const Complex g = rnd(rng, -2.0, 2.0);
    const KummerModuli m(a, b);
    Complex o;
    try {
      o = pullback_oracle(g, m);
    } catch (const SingularPointError&) {
      continue;
    }
    const Complex F = density_general(g, m);
    worst = std::max(worst, std::abs(std::abs(F) - std::abs(o)) / std::abs(o));
    ++tested;
  }
  CHECK(worst < 1e-8);
}

TEST_CASE("oracle square roots satisfy the quartic") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 100; ++i) {
    const KummerModuli m(rnd(rng, -2.0, 2.0), rnd(rng, -2.0, 2.0));
    const auto r = oracle_roots(rnd(rng, -2.0, 2.0), m);
    const Complex lhs = r.u * r.u * r.v * r.v;
    const Complex rhs = r.z * r.z * r.x * r.x * r.y * r.y;
    CHECK(rel(lhs, rhs) < 1e-10);
  }
}

TEST_CASE("oracle at a fixed point") {
  const KummerModuli m(0.3, 0.6);
  const Complex o = pullback_oracle(Complex(1.0, 1.0), m);
  CHECK(std::isfinite(o.real()));
  CHECK(std::isfinite(o.imag()));
  CHECK(std::abs(o) > 0.0);
  CHECK(std::abs(std::abs(o) - std::abs(density_general(Complex(1.0, 1.0), m))) < 1e-8 * std::abs(o));
}

TEST_CASE("density decays like |gamma|^-5") {
  const KummerModuli m(Complex(0.3, 0.1), 0.6);
  const Complex dir = std::polar(1.0, 0.7);
  // log-log slope by least squares over 1e2 .. 1e4
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const int n = 9;
  for (int i = 0; i < n; ++i) {
    const double r = std::pow(10.0, 2.0 + 2.0 * i / (n - 1));
    const double x = std::log(r), y = std::log(std::abs(density_general(r * dir, m)));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  CHECK(slope == doctest::Approx(-5.0).epsilon(1e-3));
}

TEST_CASE("registry lists fourteen poles and two logarithmic points") {
  const KummerModuli m(0.3, 0.6);
  const auto reg = density_registry(m);
  REQUIRE(reg.size() == 14);
  int logs = 0;
  for (const auto& e : reg.entries()) {
    if (e.kind == numerics::SingularityKind::Logarithmic) {
      ++logs;
      CHECK(std::abs(e.location.value * e.location.value - m.delta()) < 1e-12);
    }
    // every entry makes a denominator factor vanish
    CHECK_THROWS_AS(density_general(e.location.value, m), SingularPointError);
  }
  CHECK(logs == 2);
}

TEST_CASE("poles sit where the fiber meets the exceptional curves") {
  // gamma^2 = delta maps to (1,1), alpha to (1,0), 1/beta to (0,1).
  const KummerModuli m(0.3, 0.6);
  const auto sq = pole_squares(m);
  auto xy = [&](Complex g2) { return kummer::conic_param(kummer::residual_xi(std::sqrt(g2), m), m); };
  auto p = xy(sq[2]);
  CHECK(std::abs(p.x - 1.0) < 1e-12);
  CHECK(std::abs(p.y - 1.0) < 1e-12);
  p = xy(sq[0]);
  CHECK(std::abs(p.x - 1.0) < 1e-12);
  CHECK(std::abs(p.y) < 1e-12);
  p = xy(sq[1]);
  CHECK(std::abs(p.x) < 1e-12);
  CHECK(std::abs(p.y - 1.0) < 1e-12);
  CHECK(xy(sq[5]).at_infinity);
  CHECK(xy(sq[6]).at_infinity);
}

TEST_CASE("log ratio is accurate near both of its zero set and its poles") {
  const Complex s(0.0, 1.0);
  for (Complex g : {Complex(0.3, 1e-9), Complex(-2.0, 0.5), Complex(1e-12, -1.0 + 1e-12), Complex(5.0, 5.0)}) {
    const double direct = std::log(std::abs(g + s) / std::abs(g - s));
    CHECK(log_abs_ratio(g, s) == doctest::Approx(direct).epsilon(1e-9));
  }
  CHECK(log_abs_ratio(Complex(0.7, 0.0), s) == 0.0);
}
