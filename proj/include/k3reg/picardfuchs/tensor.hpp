#pragma once

#include <array>
#include <vector>

namespace k3reg::picardfuchs {

struct TensorOptions {
  double s0 = 0.1;
  double s1 = 0.5;
  int grid_points = 50;
  std::array<double, 2> init1{1.0, 0.3};
  std::array<double, 2> init2{0.7, -0.2};
  double scale1 = 1.0;
  double scale2 = 1.0;
  /// Negative control: the second factor is solved with the first factor's
  /// operator, so it is not a solution of its own equation.
  bool second_from_first_operator = false;
};

struct TensorReport {
  std::vector<double> grid;
  std::vector<double> residuals;
  double max_residual = 0.0;
};

/// Solves both second-order factors as initial value problems, forms the
/// product and evaluates the normalized quartic residual on a uniform grid.
TensorReport tensor_product_check(const TensorOptions& opts = {});

}  // namespace k3reg::picardfuchs
