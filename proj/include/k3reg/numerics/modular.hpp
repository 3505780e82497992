#pragma once

#include <cstddef>

namespace k3reg::numerics {

struct JValue {
  double j;
  /// Number of q-series terms used for E4 and for the product of Delta.
  std::size_t terms;
  /// Bound on the neglected tail, relative to j.
  double tail_bound;
};

/// Klein j at tau = i*y from E4^3/Delta, truncated once the tail bound drops
/// below 1e-12 (relative). Requires y >= 1.
JValue j_function_detail(double y);

/// Same with a fixed number of terms (no tail check).
double j_function_truncated(double y, std::size_t terms);

double j_function(double y);

/// j of the Legendre curve y^2 = x(x-1)(x-lambda).
double legendre_j(double lambda);

}  // namespace k3reg::numerics
