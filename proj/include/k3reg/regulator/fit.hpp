#pragma once

#include <vector>

namespace k3reg::regulator {

/// Least-squares fit value ~ A log|alpha - c| + B.
struct LogFit {
  double A = 0.0;
  double B = 0.0;
  std::vector<double> residuals;
  /// max |residual| / |A|
  double residual_rel = 0.0;
  /// Slopes between consecutive samples.
  std::vector<double> pair_slopes;
  /// Residual magnitudes shrink toward c and the pair slopes agree with A
  /// within 15%.
  bool stable = false;
};

/// Samples are ordered as they approach c. Needs at least three.
LogFit asymptotic_fit(const std::vector<double>& alpha, const std::vector<double>& value, double c);

}  // namespace k3reg::regulator
