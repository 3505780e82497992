#pragma once

#include "k3reg/numerics/types.hpp"

namespace k3reg::kummer {

/// Parameter pair (alpha, beta) of the Kummer family together with a fixed
/// branch of sqrt(delta). The token is +1 for the principal root and -1 for
/// its negative; every formula that needs sqrt(delta) reads it from here.
class KummerModuli {
 public:
  /// Throws DomainError unless alpha, beta are finite and avoid 0 and 1.
  KummerModuli(Complex alpha, Complex beta, int sqrt_delta_sign = +1);

  static KummerModuli diagonal(Complex alpha) { return KummerModuli(alpha, alpha); }

  Complex alpha() const { return alpha_; }
  Complex beta() const { return beta_; }
  int sqrt_delta_sign() const { return sign_; }
  bool is_diagonal() const { return alpha_ == beta_; }

  /// True when the I1-supported cycle exists: none of the degenerate
  /// fiber values collides with mu = 1.
  bool cycle_valid() const;

  /// (alpha beta - alpha) / (beta - alpha beta)
  Complex delta() const;
  Complex sqrt_delta() const;

  /// alpha xi^2 + alpha beta xi + beta
  Complex Delta(Complex xi) const { return alpha_ * xi * xi + alpha_ * beta_ * xi + beta_; }

 private:
  Complex alpha_;
  Complex beta_;
  int sign_;
};

/// Relative closeness used for parameter coincidences.
bool nearly_equal(Complex a, Complex b, double rel = 1e-12);

}  // namespace k3reg::kummer
