#include "k3reg/regulator/fit.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "k3reg/numerics/types.hpp"

namespace k3reg::regulator {

LogFit asymptotic_fit(const std::vector<double>& alpha, const std::vector<double>& value, double c) {
  const auto n = static_cast<Eigen::Index>(alpha.size());
  if (alpha.size() != value.size() || n < 3) {
    throw DomainError("asymptotic_fit: need at least three matching samples");
  }
  Eigen::MatrixXd M(n, 2);
  Eigen::VectorXd y(n);
  std::vector<double> lx(alpha.size());
  for (Eigen::Index i = 0; i < n; ++i) {
    const double d = std::abs(alpha[static_cast<std::size_t>(i)] - c);
    if (d == 0.0) {
      throw DomainError("asymptotic_fit: sample at the center");
    }
    lx[static_cast<std::size_t>(i)] = std::log(d);
    M(i, 0) = lx[static_cast<std::size_t>(i)];
    M(i, 1) = 1.0;
    y(i) = value[static_cast<std::size_t>(i)];
  }
  const Eigen::Vector2d sol = M.colPivHouseholderQr().solve(y);
  LogFit fit;
  fit.A = sol(0);
  fit.B = sol(1);
  const Eigen::VectorXd res = y - M * sol;
  double worst = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    fit.residuals.push_back(res(i));
    worst = std::max(worst, std::abs(res(i)));
  }
  fit.residual_rel = fit.A != 0.0 ? worst / std::abs(fit.A) : INFINITY;
  bool agree = fit.A != 0.0;
  for (std::size_t i = 1; i < lx.size(); ++i) {
    const double s = (value[i] - value[i - 1]) / (lx[i] - lx[i - 1]);
    fit.pair_slopes.push_back(s);
    agree = agree && std::abs(s - fit.A) <= 0.15 * std::abs(fit.A);
  }
  fit.stable = agree;
  return fit;
}

}  // namespace k3reg::regulator
