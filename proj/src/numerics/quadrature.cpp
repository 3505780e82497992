#include "k3reg/numerics/quadrature.hpp"

#include <algorithm>

namespace k3reg::numerics {

std::vector<double> SingularityRegistry::interior_points(double a, double b) const {
  std::vector<double> pts;
  for (const auto& e : entries_) {
    if (!e.location.is_finite() || e.location.value.imag() != 0.0) {
      continue;
    }
    const double x = e.location.value.real();
    if (x > a && x < b) {
      pts.push_back(x);
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

}  // namespace k3reg::numerics
