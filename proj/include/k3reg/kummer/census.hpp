#pragma once

#include <array>
#include <string>
#include <vector>

#include "k3reg/kummer/fiber.hpp"
#include "k3reg/kummer/moduli.hpp"

namespace k3reg::kummer {

struct CensusEntry {
  SpherePoint mu;
  /// Number of coinciding degenerate values (1 for an I2, 2 for an I4, ...).
  int multiplicity = 1;
  /// "I2", "I4", ... or "I6*" at infinity.
  std::string kodaira;
};

struct FiberCensus {
  std::vector<CensusEntry> entries;
  /// Finite singular values counted with multiplicity; 6 for valid moduli.
  int finite_count() const;
};

/// The six finite degenerate fiber values in a fixed order:
/// 1, 1/alpha, 1/beta, 1/(alpha beta), (alpha beta + 1)/(alpha beta), (alpha + beta)/(alpha beta).
std::array<Complex, 6> degenerate_mu(const KummerModuli& m);

/// Merges values within 1e-9 relative and types them; mu = inf is I6*.
FiberCensus singular_fibers(const KummerModuli& m);

/// The four branch points of the fiber over mu as a double cover of its conic.
std::array<PlanePoint, 4> branch_points(Complex mu, const KummerModuli& m);

/// One row of the special-point table on the normalized I1 fiber.
struct SpecialRow {
  std::string label;
  /// gamma^2 value(s) for the row; two for the row at (inf, inf).
  std::vector<SpherePoint> gamma_squared;
  /// Expected closed forms.
  std::vector<SpherePoint> xi_expected;
  PlanePoint xy_expected;
  /// Values recomputed through gamma -> xi -> (x, y).
  std::vector<SpherePoint> xi_computed;
  std::vector<PlanePoint> xy_computed;
  /// Largest relative deviation between expected and computed values.
  double max_error = 0.0;
};

std::vector<SpecialRow> special_point_table(const KummerModuli& m);

}  // namespace k3reg::kummer
