#pragma once

#include <vector>

namespace k3reg::picardfuchs {

struct IsogenyScaleReport {
  double scale;  ///< J = j / scale
  double J1;
  double J2;
  /// Real roots t of (t+16)^3 (t+256)^3 = pi 2^12 3^6 t^3, pi = J1 J2.
  std::vector<double> t_candidates;
  double best_t = 0.0;
  /// min over candidates of |sigma(t) - (J1 + J2)| / |J1 + J2|.
  double sigma_residual = 0.0;
  bool matched = false;
};

struct IsogenyReport {
  double y;  ///< tau = i y
  std::vector<IsogenyScaleReport> scales;
};

struct IsogenyOptions {
  double tol = 1e-6;
  /// Multiplies j(2 tau) before matching; 1 means no perturbation.
  double j2_perturbation = 1.0;
};

/// Tries J = j/1 and J = j/1728 at tau = i y and 2 tau.
IsogenyReport two_isogeny_check(double y, const IsogenyOptions& opts = {});

struct IsogenyGridReport {
  std::vector<IsogenyReport> points;
  /// Scale that matched at every point, or 0 if none did.
  double consistent_scale = 0.0;
};

IsogenyGridReport two_isogeny_grid(const std::vector<double>& ys, const IsogenyOptions& opts = {});

}  // namespace k3reg::picardfuchs
