#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "k3reg/numerics/quadrature.hpp"
#include "k3reg/numerics/types.hpp"

namespace k3reg::numerics {

/// Density with respect to the Lebesgue measure dx dy of the plane. Real
/// densities convert implicitly.
using PlaneDensity = std::function<Complex(Complex)>;

struct Rectangle {
  double x0, x1, y0, y1;
};

/// Disk sector {c + r e^{i t} : r < radius, theta0 <= t <= theta1}.
struct Disk {
  Complex center{};
  double radius = 1.0;
  double theta0 = -3.14159265358979323846;
  double theta1 = 3.14159265358979323846;
};

using Region = std::variant<Rectangle, Disk>;

struct CubatureOptions {
  double rel_tol = 1e-8;
  double abs_tol = 0.0;
  /// Judge the error against the integral of |f| instead of |integral f|.
  /// Needed when the integrand cancels (odd densities, vanishing parts).
  bool l1_relative = false;
  std::size_t max_evals = 60'000'000;
};

struct CubatureResult {
  Complex value{};
  double err_abs = 0.0;
  double l1 = 0.0;
  std::size_t evals = 0;
  std::size_t cells = 0;
  bool converged = false;

  QuadratureResult<Complex> as_complex() const { return {value, err_abs, evals, converged}; }
  QuadratureResult<double> as_real() const { return {value.real(), err_abs, evals, converged}; }
};

/// One piece of a multi-region integral: a region, its density, and the
/// singular points that lie in or on it.
struct Piece {
  Region region;
  PlaneDensity density;
  SingularityRegistry registry;
};

/// Integrates all pieces under a single global error target, refining the
/// worst cells first. Results are independent of thread scheduling.
CubatureResult integrate_pieces(const std::vector<Piece>& pieces, const CubatureOptions& opts);

CubatureResult integrate_2d(const PlaneDensity& f, const Region& region,
                            const SingularityRegistry& registry, const CubatureOptions& opts);

/// A density on the Riemann sphere. `near` is the dx dy density in the chart
/// gamma; `far`, if given, is the density in the chart w = 1/gamma. When
/// absent it is derived as near(1/w)/|w|^4.
struct SphereDensity {
  PlaneDensity near;
  PlaneDensity far;
};

enum class SphereSector {
  Whole,
  /// Im gamma > 0, i.e. Im w < 0 in the far chart.
  UpperHalf,
};

/// Sum of the two unit-disk chart integrals of the density.
CubatureResult integrate_sphere(const SphereDensity& density, const SingularityRegistry& registry,
                                const CubatureOptions& opts,
                                SphereSector sector = SphereSector::Whole);

}  // namespace k3reg::numerics
