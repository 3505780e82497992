#include "k3reg/picardfuchs/tensor.hpp"

#include <algorithm>

#include "k3reg/numerics/ode.hpp"
#include "k3reg/picardfuchs/operators.hpp"

namespace k3reg::picardfuchs {

TensorReport tensor_product_check(const TensorOptions& opts) {
  if (opts.grid_points < 2) {
    throw DomainError("tensor_product_check: need at least two grid points");
  }
  const RationalODE quartic = quartic_ode();
  auto [f1, f2] = factor_odes();
  if (opts.second_from_first_operator) f2 = f1;
  for (const auto& ode : {quartic, f1}) {
    for (double p : ode.poles()) {
      if (p >= opts.s0 && p <= opts.s1) {
        throw DomainError("tensor_product_check: interval contains a singular point");
      }
    }
  }

  const std::vector<double> y1{opts.scale1 * opts.init1[0], opts.scale1 * opts.init1[1]};
  const std::vector<double> y2{opts.scale2 * opts.init2[0], opts.scale2 * opts.init2[1]};
  const auto sol1 = numerics::solve_ivp(f1, opts.s0, y1, opts.s1, {}, opts.grid_points);
  const auto sol2 = numerics::solve_ivp(f2, opts.s0, y2, opts.s1, {}, opts.grid_points);

  TensorReport rep;
  rep.grid = sol1.times();
  for (std::size_t i = 0; i < rep.grid.size(); ++i) {
    const double s = rep.grid[i];
    const auto u = numerics::extend_jet(f1, s, sol1.states()[i], 4);
    const auto v = numerics::extend_jet(f2, s, sol2.states()[i], 4);
    // Leibniz rule for (u v)^(k).
    static constexpr int binom[5][5] = {
        {1}, {1, 1}, {1, 2, 1}, {1, 3, 3, 1}, {1, 4, 6, 4, 1}};
    std::vector<double> w(5, 0.0);
    for (int k = 0; k <= 4; ++k) {
      for (int m = 0; m <= k; ++m) w[k] += binom[k][m] * u[m] * v[k - m];
    }
    const double r = numerics::ode_residual_from_derivatives(quartic, s, w);
    rep.residuals.push_back(r);
    rep.max_residual = std::max(rep.max_residual, r);
  }
  return rep;
}

}  // namespace k3reg::picardfuchs
