#include "k3reg/kummer/census.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace k3reg::kummer {

namespace {

constexpr double kMergeTol = 1e-9;

double point_error(const SpherePoint& a, const SpherePoint& b) {
  if (a.infinite || b.infinite) {
    return a.infinite == b.infinite ? 0.0 : std::numeric_limits<double>::infinity();
  }
  return std::abs(a.value - b.value) / std::max(1.0, std::abs(b.value));
}

double point_error(const PlanePoint& a, const PlanePoint& b) {
  if (a.at_infinity || b.at_infinity) {
    return a.at_infinity == b.at_infinity ? 0.0 : std::numeric_limits<double>::infinity();
  }
  return std::max(point_error(SpherePoint::finite(a.x), SpherePoint::finite(b.x)),
                  point_error(SpherePoint::finite(a.y), SpherePoint::finite(b.y)));
}

}  // namespace

int FiberCensus::finite_count() const {
  int n = 0;
  for (const auto& e : entries) {
    if (e.mu.is_finite()) n += e.multiplicity;
  }
  return n;
}

std::array<Complex, 6> degenerate_mu(const KummerModuli& m) {
  const Complex a = m.alpha(), b = m.beta(), ab = a * b;
  return {1.0, 1.0 / a, 1.0 / b, 1.0 / ab, (ab + 1.0) / ab, (a + b) / ab};
}

FiberCensus singular_fibers(const KummerModuli& m) {
  FiberCensus c;
  for (Complex mu : degenerate_mu(m)) {
    auto it = std::find_if(c.entries.begin(), c.entries.end(), [&](const CensusEntry& e) {
      return nearly_equal(e.mu.value, mu, kMergeTol);
    });
    if (it != c.entries.end()) {
      ++it->multiplicity;
    } else {
      c.entries.push_back({SpherePoint::finite(mu), 1, ""});
    }
  }
  // Ascending by real part, then imaginary part, for stable output.
  std::sort(c.entries.begin(), c.entries.end(), [](const CensusEntry& l, const CensusEntry& r) {
    if (l.mu.value.real() != r.mu.value.real()) return l.mu.value.real() < r.mu.value.real();
    return l.mu.value.imag() < r.mu.value.imag();
  });
  for (auto& e : c.entries) {
    e.kodaira = "I" + std::to_string(2 * e.multiplicity);
  }
  c.entries.push_back({SpherePoint::at_infinity(), 1, "I6*"});
  return c;
}

std::array<PlanePoint, 4> branch_points(Complex mu, const KummerModuli& m) {
  const Complex a = m.alpha(), b = m.beta();
  return {PlanePoint{1.0, (1.0 - mu) * b + 1.0, false},
          PlanePoint{a, (1.0 - mu * a) * b + 1.0, false},
          PlanePoint{(1.0 - mu) * a + 1.0, 1.0, false},
          PlanePoint{(1.0 - mu * b) * a + 1.0, b, false}};
}

std::vector<SpecialRow> special_point_table(const KummerModuli& m) {
  const Complex a = m.alpha(), b = m.beta();
  auto fin = SpherePoint::finite;
  const SpherePoint inf = SpherePoint::at_infinity();

  std::vector<SpecialRow> rows;
  auto row = [&](std::string label, std::vector<SpherePoint> g2, SpherePoint xi, PlanePoint xy) {
    SpecialRow r;
    r.label = std::move(label);
    r.gamma_squared = std::move(g2);
    r.xi_expected.assign(r.gamma_squared.size(), xi);
    r.xy_expected = xy;
    rows.push_back(std::move(r));
  };
  row("0", {fin(0.0)}, fin(-1.0 / a), {a * (1.0 - b) + 1.0, b, false});
  row("inf", {inf}, fin(-b), {a, b * (1.0 - a) + 1.0, false});
  row("delta", {fin(m.delta())}, fin(-b / a), {1.0, 1.0, false});
  row("1/beta", {fin(1.0 / b)}, fin(0.0), {0.0, 1.0, false});
  row("alpha", {fin(a)}, inf, {1.0, 0.0, false});
  row("1+alpha-alpha*beta", {fin(1.0 + a - a * b)}, fin(1.0 - b), {0.0, b, false});
  row("1/(1+beta-alpha*beta)", {fin(1.0 / (1.0 + b - a * b))}, fin(1.0 / (1.0 - a)), {a, 0.0, false});

  // Roots of Delta(xi); their gamma^2 preimages are the remaining row.
  {
    SpecialRow r;
    r.label = "roots of Delta";
    const Complex disc = std::sqrt(a * a * b * b - 4.0 * a * b);
    for (Complex root : {(-a * b + disc) / (2.0 * a), (-a * b - disc) / (2.0 * a)}) {
      r.xi_expected.push_back(fin(root));
      r.gamma_squared.push_back(gamma_squared_from_xi(fin(root), m));
    }
    r.xy_expected = {{}, {}, true};
    rows.push_back(std::move(r));
  }

  for (auto& r : rows) {
    for (std::size_t i = 0; i < r.gamma_squared.size(); ++i) {
      const SpherePoint& g2 = r.gamma_squared[i];
      const SpherePoint gamma = g2.infinite ? inf : fin(std::sqrt(g2.value));
      const SpherePoint xi = residual_xi(gamma, m);
      const PlanePoint xy = conic_param(xi, m);
      r.xi_computed.push_back(xi);
      r.xy_computed.push_back(xy);
      r.max_error = std::max({r.max_error, point_error(xi, r.xi_expected[i]), point_error(xy, r.xy_expected)});
    }
  }
  return rows;
}

}  // namespace k3reg::kummer
