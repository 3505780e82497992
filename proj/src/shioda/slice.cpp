#include "k3reg/shioda/slice.hpp"

#include <algorithm>

#include "k3reg/numerics/modular.hpp"
#include "k3reg/numerics/polynomial.hpp"

namespace k3reg::shioda {

std::vector<std::pair<double, int>> singular_thetas(const ThetaSlice& s) {
  std::vector<std::pair<double, int>> out;
  // Double roots of P^2 - 1 sit at the critical points of P.
  if (s.a > 0) {
    for (double c : {-std::sqrt(s.a) / 2.0, std::sqrt(s.a) / 2.0}) {
      const double v = s.P(c);
      if (v == 1.0 || v == -1.0) out.emplace_back(c, 2);
    }
  }
  for (double sign : {1.0, -1.0}) {
    // P(theta) - sign = 0
    const auto roots = numerics::polynomial_roots({-s.b - sign, -3.0 * s.a, 0.0, 4.0});
    for (const Complex& z : roots) {
      if (std::abs(z.imag()) > 1e-6) continue;
      double t = z.real();
      for (int it = 0; it < 8; ++it) {
        const double dp = 12.0 * t * t - 3.0 * s.a;
        if (dp == 0.0) break;
        t -= (s.P(t) - sign) / dp;
      }
      const bool dup = std::any_of(out.begin(), out.end(), [&](const auto& e) {
        return std::abs(e.first - t) < 1e-6;
      });
      if (!dup) out.emplace_back(t, 1);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

double legendre_J(double lambda) { return numerics::legendre_j(lambda) / 1728.0; }

JConsistency j_consistency(double alpha, double beta, double a, double b) {
  JConsistency r;
  r.J_alpha = legendre_J(alpha);
  r.J_beta = legendre_J(beta);
  r.sum_residual = r.J_alpha + r.J_beta - (a * a * a - b * b + 1.0);
  r.product_residual = r.J_alpha * r.J_beta - a * a * a;
  return r;
}

std::pair<double, double> ab_from_legendre(double alpha, double beta) {
  const double Ja = legendre_J(alpha), Jb = legendre_J(beta);
  const double a3 = Ja * Jb;
  return {a3, a3 + 1.0 - (Ja + Jb)};
}

}  // namespace k3reg::shioda
