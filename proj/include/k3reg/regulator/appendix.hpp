#pragma once

#include <cstddef>
#include <vector>

#include "k3reg/numerics/types.hpp"

namespace k3reg::regulator {

/// Absolute value of the local model integrand near gamma = 1 as alpha -> 1
/// (chi = alpha - 1, gamma^2 = zeta + 1), with |log|zeta-coordinate||
/// replaced by its bound |zeta|.
double appendix_integrand(Complex zeta, double chi);

struct AppendixReport {
  double eps = 0.0;
  double chi = 0.0;
  /// Integrals with respect to dx dy.
  double total = 0.0;
  double outside = 0.0;
  double disk_plus_chi = 0.0;
  double disk_minus_chi = 0.0;
  double disk_plus_i = 0.0;
  double disk_minus_i = 0.0;
  double err_abs = 0.0;
  std::size_t evals = 0;
  bool converged = false;
  /// total <= 1000 pi eps
  bool total_ok = false;
  /// outside <= 650 pi eps, real-axis disks <= 2 (40/3) pi eps each,
  /// imaginary-axis disks <= (250/3) pi eps each.
  bool pieces_ok = false;
};

/// Requires 0 < chi < eps/3 <= 1/6.
AppendixReport appendix_bound_check(double eps, double chi, double rel_tol = 1e-6);

/// Local model near gamma^2 = -1 as alpha -> 2 (chi = alpha - 2).
double estat2_integrand(Complex zeta, double chi);
struct Estat2Value {
  double value = 0.0;
  double err_abs = 0.0;
  std::size_t evals = 0;
  bool converged = false;
};
Estat2Value estat2_value(double chi, double radius = 0.5, double rel_tol = 1e-7);

struct DivergenceFit {
  std::vector<double> chi;
  std::vector<double> value;
  /// value ~ C log(1/chi) + D
  double C = 0.0;
  double D = 0.0;
  /// Slopes between consecutive chi.
  std::vector<double> pair_slopes;
  /// All pair slopes within 15% of C and C != 0.
  bool stable = false;
};

DivergenceFit fit_log_divergence(const std::vector<double>& chi, const std::vector<double>& value);
DivergenceFit estat2_divergence(const std::vector<double>& chi, double rel_tol = 1e-7);

}  // namespace k3reg::regulator
