#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "k3reg/numerics/types.hpp"
#include "k3reg/shioda/slice.hpp"

namespace k3reg::shioda {

/// Inner integrals at fixed theta > 1 on the standard slice:
///   numerator   int_{r+}^{0}  dw / sqrt(-w Q(w))
///   denominator int_{r-}^{r+} dw / sqrt( w Q(w))
/// Both are complete elliptic integrals and are evaluated by AGM.
/// theta_minus_one carries theta - 1 without rounding.
template <class Real>
Real inner_numerator(Real theta, Real theta_minus_one);
template <class Real>
Real inner_denominator(Real theta, Real theta_minus_one);

/// The same inner integrals by direct 1D quadrature (double precision).
double inner_numerator_quadrature(double theta, double rel_tol = 1e-13);
double inner_denominator_quadrature(double theta, double rel_tol = 1e-13);
/// Denominator integral folded by w -> 1/w: twice the part over (-1, r+).
double inner_denominator_folded(double theta, double rel_tol = 1e-13);

enum class TailStrategy {
  /// theta = 1/s onto s in (0, 1].
  Substitution,
  /// Truncate at several T and extrapolate the known tail expansion.
  Extrapolation,
};

struct KappaOptions {
  double rel_tol = 1e-13;
  Precision precision = Precision::Double;
  TailStrategy strategy = TailStrategy::Substitution;
  std::vector<double> truncations{50, 100, 200, 400, 800};
};

struct KappaResult {
  double numerator = 0;
  double denominator = 0;
  double kappa = 0;
  double numerator_err = 0;
  double denominator_err = 0;
  double kappa_err = 0;
  /// Full working-precision values (equal to the doubles in double mode).
  Quad numerator_q = 0;
  Quad denominator_q = 0;
  Quad kappa_q = 0;
  Precision precision = Precision::Double;
  TailStrategy strategy = TailStrategy::Substitution;
  std::size_t evals = 0;
  bool converged = false;
  /// Trustworthy continued-fraction terms of kappa at this precision.
  std::vector<long long> cf_terms;
};

KappaResult kappa(const KappaOptions& opts = {});

struct CfReport {
  std::vector<long long> terms_low;
  std::vector<long long> terms_high;
  /// Leading terms shared by both expansions.
  std::size_t stable_terms = 0;
  std::string disclaimer;
};

/// Continued-fraction comparison of a value known at two precisions,
/// each with its own absolute uncertainty.
CfReport cf_stability(double x_low, double delta_low, Quad x_high, Quad delta_high,
                      std::size_t terms);

/// Expansion of kappa at double and extended precision.
CfReport kappa_cf_report(const KappaResult& low, const KappaResult& high, std::size_t terms);

}  // namespace k3reg::shioda
