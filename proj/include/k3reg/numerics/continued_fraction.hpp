#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "k3reg/numerics/polynomial.hpp"
#include "k3reg/numerics/types.hpp"

namespace k3reg::numerics {

enum class CfStop {
  /// The requested number of terms was produced.
  TermLimit,
  /// The uncertainty interval straddles an integer: further terms are noise.
  PrecisionExhausted,
  /// The remainder vanished within the uncertainty: x is (numerically) rational.
  Terminated,
};

struct ContinuedFraction {
  std::vector<long long> terms;
  /// Number of leading terms shared by every number in [x - delta, x + delta].
  std::size_t trustworthy = 0;
  CfStop stop = CfStop::TermLimit;
};

/// Continued-fraction expansion of x > 0, carried out on the interval
/// [x - delta, x + delta]. delta <= 0 selects a few ulps of x.
template <class Real>
ContinuedFraction continued_fraction(Real x, std::size_t n_terms, Real delta = 0) {
  using std::abs;
  using std::floor;
  using std::round;
  if (!(x > 0)) {
    throw DomainError("continued_fraction: x must be positive");
  }
  const Real eps = std::numeric_limits<Real>::epsilon();
  if (delta <= 0) {
    delta = 4 * eps * x;
  }
  Real lo = x - delta;
  Real hi = x + delta;
  ContinuedFraction cf;
  while (cf.terms.size() < n_terms) {
    const Real mid = (lo + hi) / 2;
    const Real n = round(mid);
    const bool holds_integer = lo <= n && n <= hi;
    if (holds_integer) {
      // A narrow interval around an integer means a zero remainder.
      if (hi - lo < Real(1e-3) && n >= 1) {
        cf.terms.push_back(static_cast<long long>(n));
        cf.stop = CfStop::Terminated;
      } else {
        cf.stop = CfStop::PrecisionExhausted;
      }
      break;
    }
    const Real a = floor(lo);
    if (a > Real(std::numeric_limits<long long>::max() / 2)) {
      cf.stop = CfStop::PrecisionExhausted;
      break;
    }
    cf.terms.push_back(static_cast<long long>(a));
    const Real new_lo = 1 / (hi - a);
    const Real new_hi = 1 / (lo - a);
    // Outward rounding allowance for the division.
    lo = new_lo * (1 - 4 * eps);
    hi = new_hi * (1 + 4 * eps);
  }
  cf.trustworthy = cf.terms.size();
  return cf;
}

/// Last convergent p/q of the expansion.
std::pair<BigInt, BigInt> convergent(const std::vector<long long>& terms);

/// p/q as a double.
double convergent_value(const std::vector<long long>& terms);

/// Length of the common prefix of two expansions.
std::size_t common_prefix(const std::vector<long long>& a, const std::vector<long long>& b);

}  // namespace k3reg::numerics
