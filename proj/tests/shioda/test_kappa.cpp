#include <doctest.h>

#include <cmath>

#include "k3reg/shioda/kappa.hpp"

using namespace k3reg;
using namespace k3reg::shioda;

namespace {
// 60-digit reference quadrature of the same iterated integrals.
constexpr double kNum = 2.5317065374973145119734660;
constexpr double kDen = 13.750371636040745654980192;
const Quad kKappaRef("0.184119135432057965739035988494709");
}  // namespace

TEST_CASE("inner integrands are positive") {
  const double th = 1.5;
  const auto r = q_roots(th);
  for (double t : {0.1, 0.5, 0.9}) {
    const double w = r.r_plus * (1 - t);
    CHECK(-w * ThetaSlice{}.Q(th, w) > 0.0);
    const double v = r.r_minus + t * (r.r_plus - r.r_minus);
    CHECK(v * ThetaSlice{}.Q(th, v) > 0.0);
  }
}

TEST_CASE("inner integrals: AGM against quadrature") {
  for (double th : {1.001, 1.5, 2.0, 10.0, 100.0}) {
    const double n = inner_numerator<double>(th, th - 1.0);
    const double d = inner_denominator<double>(th, th - 1.0);
    CHECK(std::abs(n - inner_numerator_quadrature(th)) / n < 1e-10);
    CHECK(std::abs(d - inner_denominator_quadrature(th)) / d < 1e-10);
    CHECK(std::abs(d - inner_denominator_folded(th)) / d < 1e-10);
  }
  CHECK_THROWS_AS(inner_numerator<double>(1.0, 0.0), DomainError);
}

TEST_CASE("tail decay of the inner integrals") {
  // Numerator ~ theta^{-3/2}; denominator ~ log(theta) theta^{-3/2}.
  const double a = 1e3, b = 1e4;
  const double sn = std::log(inner_numerator<double>(b, b - 1) / inner_numerator<double>(a, a - 1)) /
                    std::log(b / a);
  const double sd = std::log(inner_denominator<double>(b, b - 1) /
                             inner_denominator<double>(a, a - 1)) /
                    std::log(b / a);
  CHECK(sn == doctest::Approx(-1.5).epsilon(1e-5));
  CHECK(sd > -1.5);
  CHECK(sd < -1.3);
}

TEST_CASE("kappa: two tail strategies agree") {
  KappaOptions a;
  KappaOptions b;
  b.strategy = TailStrategy::Extrapolation;
  const auto ra = kappa(a);
  const auto rb = kappa(b);
  CHECK(ra.converged);
  CHECK(rb.converged);
  CHECK(ra.kappa > 0.0);
  CHECK(std::abs(ra.kappa - rb.kappa) / ra.kappa < 1e-6);
  CHECK(ra.numerator == doctest::Approx(kNum).epsilon(1e-14));
  CHECK(ra.denominator == doctest::Approx(kDen).epsilon(1e-14));
  CHECK(ra.kappa == doctest::Approx(ra.numerator / ra.denominator).epsilon(1e-15));
  CHECK(std::abs(ra.kappa - static_cast<double>(kKappaRef)) < 1e-15);
}

TEST_CASE("kappa in extended precision") {
  KappaOptions o;
  o.precision = Precision::Extended;
  o.rel_tol = 1e-28;
  const auto r = kappa(o);
  CHECK(r.converged);
  CHECK(abs(r.kappa_q - kKappaRef) < Quad(1e-28));

  const auto low = kappa();
  const auto rep = kappa_cf_report(low, r, 40);
  CHECK(rep.stable_terms >= 10);
  const std::vector<long long> head{0, 5, 2, 3, 7, 3, 2, 8, 7, 9};
  REQUIRE(rep.terms_high.size() >= head.size());
  CHECK(std::vector<long long>(rep.terms_high.begin(), rep.terms_high.begin() + 10) == head);
  CHECK_FALSE(rep.disclaimer.empty());
}

TEST_CASE("continued fraction stability on synthetic inputs") {
  const auto rat = cf_stability(355.0 / 113.0, 1e-15, Quad(355) / 113, Quad(1e-30), 20);
  CHECK(rat.terms_high == std::vector<long long>{3, 7, 16});
  CHECK(rat.stable_terms == 3);

  using std::sqrt;
  const auto r2 = cf_stability(std::sqrt(2.0), 1e-15, sqrt(Quad(2)), Quad(1e-32), 30);
  REQUIRE(r2.terms_high.size() >= 20);
  CHECK(r2.terms_high[0] == 1);
  for (std::size_t i = 1; i < r2.terms_high.size(); ++i) CHECK(r2.terms_high[i] == 2);
  CHECK(r2.stable_terms >= 15);
}
