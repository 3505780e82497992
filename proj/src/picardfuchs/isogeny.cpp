#include "k3reg/picardfuchs/isogeny.hpp"

#include <cmath>
#include <limits>

#include "k3reg/numerics/modular.hpp"
#include "k3reg/numerics/polynomial.hpp"
#include "k3reg/picardfuchs/normal_form.hpp"

namespace k3reg::picardfuchs {

using numerics::IntPolynomial;

namespace {

constexpr long long kD = 4096LL * 729LL;

struct Family {
  IntPolynomial a3;
  // a^3 - b^2 as an exact polynomial; its double evaluation avoids the
  // cancellation between two large cubes.
  IntPolynomial a3_minus_b2;
};

const Family& family() {
  static const Family f = [] {
    const IntPolynomial a = IntPolynomial::linear_root(-16) * IntPolynomial::linear_root(-256);
    const IntPolynomial b = IntPolynomial::linear_root(512) * IntPolynomial::linear_root(8) *
                            IntPolynomial::linear_root(-64);
    return Family{a.pow(3), a.pow(3) - b.pow(2)};
  }();
  return f;
}

double sigma_of_t(double t) {
  return 1.0 + family().a3_minus_b2.evaluate(t) / (static_cast<double>(kD) * t * t * t);
}

std::vector<double> solve_pi(double pi) {
  const auto& a3 = family().a3;
  std::vector<double> c;
  for (const auto& v : a3.coeffs()) c.push_back(static_cast<double>(v));
  c[3] -= pi * static_cast<double>(kD);
  std::vector<double> out;
  for (const Complex& z : numerics::polynomial_roots(c)) {
    if (std::abs(z.imag()) > 1e-6 * std::abs(z) || z.real() == 0.0) continue;
    long double t = z.real();
    for (int it = 0; it < 6; ++it) {
      long double p = 0, dp = 0;
      for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k) {
        dp = dp * t + p;
        p = p * t + c[static_cast<std::size_t>(k)];
      }
      if (dp == 0) break;
      t -= p / dp;
    }
    out.push_back(static_cast<double>(t));
  }
  return out;
}

}  // namespace

IsogenyReport two_isogeny_check(double y, const IsogenyOptions& opts) {
  IsogenyReport rep;
  rep.y = y;
  const double j1 = numerics::j_function(y);
  const double j2 = numerics::j_function(2.0 * y) * opts.j2_perturbation;
  for (double scale : {1.0, 1728.0}) {
    IsogenyScaleReport s;
    s.scale = scale;
    s.J1 = j1 / scale;
    s.J2 = j2 / scale;
    const double target = s.J1 + s.J2;
    s.t_candidates = solve_pi(s.J1 * s.J2);
    s.sigma_residual = std::numeric_limits<double>::infinity();
    for (double t : s.t_candidates) {
      const double r = std::abs(sigma_of_t(t) - target) / std::abs(target);
      if (r < s.sigma_residual) {
        s.sigma_residual = r;
        s.best_t = t;
      }
    }
    s.matched = s.sigma_residual < opts.tol;
    rep.scales.push_back(s);
  }
  return rep;
}

IsogenyGridReport two_isogeny_grid(const std::vector<double>& ys, const IsogenyOptions& opts) {
  IsogenyGridReport grid;
  for (double y : ys) grid.points.push_back(two_isogeny_check(y, opts));
  for (std::size_t k = 0; k < 2; ++k) {
    bool all = !grid.points.empty();
    for (const auto& p : grid.points) all = all && p.scales[k].matched;
    if (all) {
      grid.consistent_scale = grid.points.front().scales[k].scale;
      break;
    }
  }
  return grid;
}

}  // namespace k3reg::picardfuchs
