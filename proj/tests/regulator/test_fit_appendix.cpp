#include <doctest.h>

#include <cmath>

#include "k3reg/numerics/cubature.hpp"
#include "k3reg/regulator/appendix.hpp"
#include "k3reg/regulator/fit.hpp"

using namespace k3reg;
using namespace k3reg::regulator;

TEST_CASE("log fit recovers an exact model") {
  std::vector<double> a, v;
  for (int k = 2; k <= 5; ++k) {
    a.push_back(2.0 + std::pow(10.0, -k));
    v.push_back(3.0 * std::log(std::pow(10.0, -k)) + 1.0);
  }
  const auto f = asymptotic_fit(a, v, 2.0);
  CHECK(f.A == doctest::Approx(3.0).epsilon(1e-10));
  CHECK(f.B == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(f.residual_rel < 1e-10);
  CHECK(f.stable);
  CHECK_THROWS_AS(asymptotic_fit({1.0, 2.0}, {1.0, 2.0}, 0.0), DomainError);
}

TEST_CASE("log fit flags an unstable model") {
  std::vector<double> a{1e-2, 1e-3, 1e-4}, v{1.0, 5.0, 5.5};
  CHECK_FALSE(asymptotic_fit(a, v, 0.0).stable);
}

TEST_CASE("appendix bound at the two reference parameters") {
  for (auto [eps, chi] : {std::pair{0.1, 0.02}, std::pair{0.05, 0.01}}) {
    const auto r = appendix_bound_check(eps, chi);
    CHECK(r.converged);
    CHECK(r.total_ok);
    CHECK(r.pieces_ok);
    CHECK(r.total > 0.0);
    CHECK(r.outside > 0.0);
  }
}

TEST_CASE("appendix total scales with eps") {
  const auto a = appendix_bound_check(0.1, 0.02);
  const auto b = appendix_bound_check(0.05, 0.01);
  const auto c = appendix_bound_check(0.025, 0.005);
  CHECK(b.total / 0.05 <= 1.1 * a.total / 0.1);
  CHECK(c.total / 0.025 <= 1.1 * b.total / 0.05);
}

TEST_CASE("appendix parameter ordering is enforced") {
  CHECK_THROWS_AS(appendix_bound_check(0.1, 0.05), DomainError);
  CHECK_THROWS_AS(appendix_bound_check(0.6, 0.01), DomainError);
  CHECK_THROWS_AS(appendix_bound_check(0.1, 0.0), DomainError);
}

TEST_CASE("synthetic logarithmic divergence is recovered") {
  // Scaling z = chi w turns the integral of 1 / (|z - chi||z + chi|) over a
  // fixed square into 2 pi log(1/chi) + const + O(chi^2).
  const double R = 0.5;
  std::vector<double> chi{1e-4, 1e-5, 1e-6}, v;
  numerics::CubatureOptions o;
  o.rel_tol = 1e-11;
  for (double c : chi) {
    numerics::SingularityRegistry reg;
    reg.add(c, numerics::SingularityKind::InverseModulus);
    reg.add(-c, numerics::SingularityKind::InverseModulus);
    const auto r = numerics::integrate_2d(
        [c](Complex z) { return Complex(1.0 / (std::abs(z - c) * std::abs(z + c)), 0.0); },
        numerics::Rectangle{-R, R, -R, R}, reg, o);
    CHECK(r.converged);
    v.push_back(r.value.real());
  }
  const auto f = fit_log_divergence(chi, v);
  CHECK(f.C == doctest::Approx(2.0 * M_PI).epsilon(1e-6));
  CHECK(f.stable);
}

TEST_CASE("estat2 diverges logarithmically") {
  const auto f = estat2_divergence({1e-2, 1e-3, 1e-4});
  CHECK(f.C != 0.0);
  CHECK(std::abs(f.C) > 1.0);
  CHECK(f.stable);
}

TEST_CASE("estat2 magnitude shrinks with the radius") {
  const double chi = 1e-3;
  const auto full = estat2_value(chi, 0.5);
  const auto half = estat2_value(chi, 0.25);
  CHECK(full.converged);
  CHECK(std::abs(half.value) < std::abs(full.value));
}
