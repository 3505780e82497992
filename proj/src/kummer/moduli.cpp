#include "k3reg/kummer/moduli.hpp"

#include <algorithm>
#include <cmath>

namespace k3reg::kummer {

bool nearly_equal(Complex a, Complex b, double rel) {
  return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

KummerModuli::KummerModuli(Complex alpha, Complex beta, int sqrt_delta_sign)
    : alpha_(alpha), beta_(beta), sign_(sqrt_delta_sign >= 0 ? 1 : -1) {
  auto finite = [](Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); };
  if (!finite(alpha) || !finite(beta)) {
    throw DomainError("Kummer moduli must be finite");
  }
  for (Complex p : {alpha, beta}) {
    if (nearly_equal(p, 0.0) || nearly_equal(p, 1.0)) {
      throw DomainError("Kummer moduli must avoid 0 and 1");
    }
  }
}

bool KummerModuli::cycle_valid() const {
  const Complex ab = alpha_ * beta_;
  // 1 = 1/alpha, 1/beta are excluded by construction; (ab+1)/ab never equals 1.
  return !nearly_equal(ab, 1.0) && !nearly_equal(alpha_ + beta_, ab);
}

Complex KummerModuli::delta() const {
  const Complex den = beta_ - alpha_ * beta_;
  if (std::abs(den) == 0.0) {
    throw DegenerateParameterError("delta: beta (1 - alpha) vanishes");
  }
  return (alpha_ * beta_ - alpha_) / den;
}

Complex KummerModuli::sqrt_delta() const { return static_cast<double>(sign_) * std::sqrt(delta()); }

}  // namespace k3reg::kummer
