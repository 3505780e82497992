#include <doctest.h>

#include <cmath>

#include "k3reg/numerics/modular.hpp"
#include "k3reg/picardfuchs/isogeny.hpp"
#include "k3reg/picardfuchs/normal_form.hpp"
#include "k3reg/picardfuchs/tensor.hpp"

using namespace k3reg;
using namespace k3reg::picardfuchs;

TEST_CASE("product of factor solutions solves the quartic") {
  const auto rep = tensor_product_check();
  CHECK(rep.grid.size() == 50);
  CHECK(rep.grid.front() == doctest::Approx(0.1));
  CHECK(rep.grid.back() == doctest::Approx(0.5));
  CHECK(rep.max_residual < 1e-6);
}

TEST_CASE("tensor check negative control") {
  TensorOptions o;
  o.second_from_first_operator = true;
  CHECK(tensor_product_check(o).max_residual > 1e-3);
}

TEST_CASE("tensor residual is scale invariant") {
  const auto base = tensor_product_check();
  TensorOptions o;
  o.scale1 = 3.0;
  o.scale2 = -0.25;
  const auto scaled = tensor_product_check(o);
  for (std::size_t i = 0; i < base.residuals.size(); ++i) {
    CHECK(std::abs(scaled.residuals[i] - base.residuals[i]) < 1e-9);
  }
}

TEST_CASE("tensor check rejects singular intervals") {
  TensorOptions o;
  o.s0 = -0.2;
  CHECK_THROWS_AS(tensor_product_check(o), DomainError);
}

TEST_CASE("two-isogeny matches with one consistent scaling") {
  const auto grid = two_isogeny_grid({1.1, 1.3, 1.5, 1.7, 2.0});
  CHECK(grid.consistent_scale == 1728.0);
  for (const auto& p : grid.points) {
    CHECK(p.scales[1].matched);
    CHECK(p.scales[1].sigma_residual < 1e-6);
    CHECK_FALSE(p.scales[0].matched);
  }
}

TEST_CASE("perturbed j(2 tau) breaks the match") {
  IsogenyOptions o;
  o.j2_perturbation = 1.01;
  for (double y : {1.1, 1.5, 2.0}) {
    const auto rep = two_isogeny_check(y, o);
    for (const auto& s : rep.scales) CHECK(s.sigma_residual > 1e-3);
  }
}

TEST_CASE("j pair of the matched point is the isogenous pair") {
  const auto rep = two_isogeny_check(1.5);
  const auto& s = rep.scales[1];
  REQUIRE(s.matched);
  const auto p = modular_parametrization(BigRational(s.best_t));
  const auto jp = j_pair_from_point(p);
  REQUIRE_FALSE(jp.double_root);
  const double a = std::min(jp.j1.real(), jp.j2.real());
  const double b = std::max(jp.j1.real(), jp.j2.real());
  CHECK(a == doctest::Approx(numerics::j_function(1.5) / 1728.0).epsilon(1e-6));
  CHECK(b == doctest::Approx(numerics::j_function(3.0) / 1728.0).epsilon(1e-6));
}
