#include <doctest.h>

#include <random>

#include "k3reg/kummer/census.hpp"

using namespace k3reg;
using namespace k3reg::kummer;

namespace {

std::vector<std::pair<double, std::string>> finite_entries(const FiberCensus& c) {
  std::vector<std::pair<double, std::string>> out;
  for (const auto& e : c.entries) {
    if (e.mu.is_finite()) out.emplace_back(e.mu.value.real(), e.kodaira);
  }
  return out;
}

}  // namespace

TEST_CASE("generic census is six I2 fibers plus I6* at infinity") {
  const auto c = singular_fibers(KummerModuli(1.0 / 3, 0.2));
  const auto f = finite_entries(c);
  REQUIRE(f.size() == 6);
  const double expected[] = {1, 3, 5, 8, 15, 16};
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(f[i].first == doctest::Approx(expected[i]).epsilon(1e-12));
    CHECK(f[i].second == "I2");
  }
  CHECK(c.entries.back().mu.infinite);
  CHECK(c.entries.back().kodaira == "I6*");
  CHECK(c.finite_count() == 6);
}

TEST_CASE("census at alpha = beta = 1/2") {
  const auto f = finite_entries(singular_fibers(KummerModuli(0.5, 0.5)));
  REQUIRE(f.size() == 4);
  CHECK(f[0].first == doctest::Approx(1));
  CHECK(f[0].second == "I2");
  CHECK(f[1].first == doctest::Approx(2));
  CHECK(f[1].second == "I4");
  CHECK(f[2].first == doctest::Approx(4));
  CHECK(f[2].second == "I4");
  CHECK(f[3].first == doctest::Approx(5));
  CHECK(f[3].second == "I2");
}

TEST_CASE("generic diagonal census has an I4 at 1/alpha") {
  const double a = 0.37;
  const auto c = singular_fibers(KummerModuli::diagonal(a));
  bool found = false;
  for (const auto& e : c.entries) {
    if (e.mu.is_finite() && std::abs(e.mu.value - 1.0 / a) < 1e-12) {
      found = true;
      CHECK(e.kodaira == "I4");
    }
  }
  CHECK(found);
  CHECK(c.finite_count() == 6);
}

TEST_CASE("census always counts six finite values") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int i = 0; i < 100; ++i) {
    const KummerModuli m(Complex(u(rng), u(rng)), Complex(u(rng), u(rng)));
    CHECK(singular_fibers(m).finite_count() == 6);
  }
}

TEST_CASE("branch points") {
  const KummerModuli m(0.3, 0.7);
  const Complex a = m.alpha(), b = m.beta();
  auto p1 = branch_points(1.0, m);
  CHECK(std::abs(p1[0].x - 1.0) < 1e-15);
  CHECK(std::abs(p1[0].y - 1.0) < 1e-15);
  CHECK(std::abs(p1[2].x - 1.0) < 1e-15);
  CHECK(std::abs(p1[2].y - 1.0) < 1e-15);
  auto pa = branch_points(1.0 / a, m);
  CHECK(std::abs(pa[1].x - a) < 1e-15);
  CHECK(std::abs(pa[1].y - 1.0) < 1e-15);
  auto p0 = branch_points(0.0, m);
  CHECK(std::abs(p0[0].y - (b + 1.0)) < 1e-15);
  CHECK(std::abs(p0[1].x - a) < 1e-15);
  CHECK(std::abs(p0[1].y - (b + 1.0)) < 1e-15);
  CHECK(std::abs(p0[2].x - (a + 1.0)) < 1e-15);
  CHECK(std::abs(p0[3].x - (a + 1.0)) < 1e-15);
  CHECK(std::abs(p0[3].y - b) < 1e-15);
}

TEST_CASE("branch points lie on their conic") {
  const KummerModuli m(Complex(0.3, 0.2), 0.8);
  const Complex a = m.alpha(), b = m.beta();
  for (Complex mu : {Complex(0.5), Complex(2.0, 1.0), Complex(-3.0)}) {
    for (const auto& p : branch_points(mu, m)) {
      const Complex R = -p.x * p.x / a - p.y * p.y / b + (a + 1.0) / a * p.x + (b + 1.0) / b * p.y - 1.0;
      CHECK(std::abs(R - mu * p.x * p.y) < 1e-12);
    }
  }
}

TEST_CASE("special-point table reproduces all eight rows") {
  for (auto [a, b] : {std::pair<Complex, Complex>{0.3, 0.6}, {0.5, 0.5}, {Complex(0.4, 0.1), 0.7},
                      {2.5, Complex(-0.3, 0.8)}}) {
    const auto rows = special_point_table(KummerModuli(a, b));
    REQUIRE(rows.size() == 8);
    for (const auto& r : rows) {
      INFO(r.label);
      CHECK(r.max_error < 1e-12);
    }
    CHECK(rows.back().xy_computed.size() == 2);
    CHECK(rows.back().xy_computed[0].at_infinity);
    CHECK(rows.back().xy_computed[1].at_infinity);
  }
}
