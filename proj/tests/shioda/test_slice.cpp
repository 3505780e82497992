#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "k3reg/kummer/census.hpp"
#include "k3reg/kummer/moduli.hpp"
#include "k3reg/numerics/modular.hpp"
#include "k3reg/shioda/slice.hpp"

using namespace k3reg;
using namespace k3reg::shioda;

TEST_CASE("roots of Q_theta") {
  const auto r1 = q_roots(1.0);
  CHECK(r1.real);
  CHECK(r1.r_minus == -1.0);
  CHECK(r1.r_plus == -1.0);

  const auto r2 = q_roots(2.0);
  CHECK(ThetaSlice{}.P(2.0) == 26.0);
  CHECK(r2.r_plus == doctest::Approx(-26.0 + std::sqrt(675.0)).epsilon(1e-12));
  CHECK(std::abs(r2.r_minus * r2.r_plus - 1.0) < 1e-14);
  CHECK(r2.r_minus < r2.r_plus);
  CHECK(r2.r_plus < 0.0);

  const double big = 1e4;
  const auto rb = q_roots(big);
  CHECK(rb.r_plus < 0.0);
  CHECK(rb.r_plus == doctest::Approx(-1.0 / (2.0 * ThetaSlice{}.P(big))).epsilon(1e-12));

  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(0.0, 6.0);
  for (int i = 0; i < 100; ++i) {
    const double th = 1.0 + std::exp(u(rng)) - 1.0 + 1e-9;
    const auto r = q_roots(th);
    CHECK(std::abs(r.r_minus * r.r_plus - 1.0) < 1e-13);
    CHECK(std::abs(ThetaSlice{}.Q(th, r.r_plus)) <= 1e-12 * (1 + std::abs(ThetaSlice{}.P(th))));
  }
  CHECK_FALSE(q_roots(0.7).real);
}

TEST_CASE("general slice uses the plain discriminant") {
  const ThetaSlice s{2.0, 0.5};
  const auto r = q_roots(3.0, s);
  REQUIRE(r.real);
  CHECK(std::abs(s.Q(3.0, r.r_minus)) < 1e-10 * s.P(3.0) * std::abs(r.r_minus));
  CHECK(r.r_minus * r.r_plus == doctest::Approx(1.0));
  const auto neg = q_roots(-3.0, s);
  CHECK(neg.r_minus > 0.0);
  CHECK(neg.r_minus <= neg.r_plus);
}

TEST_CASE("singular fibers of the theta pencil") {
  const auto st = singular_thetas();
  REQUIRE(st.size() == 4);
  const std::vector<std::pair<double, int>> expected{{-1.0, 1}, {-0.5, 2}, {0.5, 2}, {1.0, 1}};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(st[i].first == expected[i].first);
    CHECK(st[i].second == expected[i].second);
  }
}

TEST_CASE("theta to mu") {
  CHECK(theta_to_mu(1.0) == 1.0);
  CHECK(theta_to_mu(-1.0) == 5.0);
  CHECK(theta_to_mu(0.5) == 2.0);
  CHECK(theta_to_mu(-0.5) == 4.0);
  // Affine: three points determine it.
  CHECK(theta_to_mu(0.0) == 3.0);
  CHECK(theta_to_mu(2.0) - theta_to_mu(1.0) == theta_to_mu(1.0) - theta_to_mu(0.0));

  const auto census = kummer::singular_fibers(kummer::KummerModuli::diagonal(0.5));
  std::multiset<std::pair<double, int>> image, finite;
  for (const auto& [th, m] : singular_thetas()) image.insert({theta_to_mu(th), m});
  for (const auto& e : census.entries) {
    if (e.mu.is_finite()) finite.insert({e.mu.value.real(), e.multiplicity});
  }
  CHECK(image == finite);
}

TEST_CASE("Legendre J") {
  CHECK(legendre_J(0.5) == doctest::Approx(numerics::j_function(1.0) / 1728.0).epsilon(1e-12));
  for (double l : {0.1, 0.3, 0.45, 0.77}) {
    CHECK(legendre_J(l) == doctest::Approx(legendre_J(1.0 - l)).epsilon(1e-13));
  }
}

TEST_CASE("J consistency") {
  const auto r = j_consistency(0.5, 0.5, 1.0, 0.0);
  CHECK(r.J_alpha == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(r.sum_residual) < 1e-12);
  CHECK(std::abs(r.product_residual) < 1e-12);

  const auto [a3, b2] = ab_from_legendre(0.3, 0.6);
  REQUIRE(b2 >= 0.0);
  const auto g = j_consistency(0.3, 0.6, std::cbrt(a3), std::sqrt(b2));
  CHECK(std::abs(g.sum_residual) < 1e-12 * a3);
  CHECK(std::abs(g.product_residual) < 1e-12 * a3);
  CHECK(std::abs(j_consistency(0.3, 0.6, 1.0, 0.0).product_residual) > 1e-3);
}
