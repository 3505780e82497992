#include "k3reg/numerics/cubature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <exception>
#include <numeric>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace k3reg::numerics {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kNodes = 15;
constexpr int kMaxDepth = 60;
constexpr int kDeepCell = 40;

// K15 nodes and weights on [0, 1] with the embedded G7 weights (zero off the
// Gauss nodes).
struct Rule {
  std::array<double, kNodes> t{};
  std::array<double, kNodes> wk{};
  std::array<double, kNodes> wg{};
};

const Rule& rule() {
  static const Rule r = [] {
    Rule out;
    const auto& ka = boost::math::quadrature::gauss_kronrod<double, 15>::abscissa();
    const auto& kw = boost::math::quadrature::gauss_kronrod<double, 15>::weights();
    const auto& gw = boost::math::quadrature::gauss<double, 7>::weights();
    // Boost stores the non-negative half: ka[0] = 0, ka[1..7] increasing.
    // Gauss nodes sit at even positions of the Kronrod list.
    for (int i = 0; i < 8; ++i) {
      const double g = (i % 2 == 0) ? gw[i / 2] : 0.0;
      out.t[7 + i] = 0.5 * (1.0 + ka[i]);
      out.wk[7 + i] = 0.5 * kw[i];
      out.wg[7 + i] = 0.5 * g;
      out.t[7 - i] = 0.5 * (1.0 - ka[i]);
      out.wk[7 - i] = 0.5 * kw[i];
      out.wg[7 - i] = 0.5 * g;
    }
    return out;
  }();
  return r;
}

struct Vec2 {
  double x, y;
};

Vec2 mid(Vec2 a, Vec2 b) { return {0.5 * (a.x + b.x), 0.5 * (a.y + b.y)}; }

double cross(Vec2 a, Vec2 b, Vec2 c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

struct SingularParam {
  Vec2 p;
  bool log_kind;
};

// Maps the parameter plane of one piece to the physical plane.
struct Chart {
  const Piece* piece = nullptr;
  bool polar = false;
  Complex center{};
  double radius = 1.0;
  int radial_power = 1;
  Rectangle domain{};
  std::vector<SingularParam> singular;

  Complex map(Vec2 p, double& jac) const {
    if (!polar) {
      jac = 1.0;
      return {p.x, p.y};
    }
    const double u = p.x;
    double r;
    double drdu;
    if (radial_power == 1) {
      r = radius * u;
      drdu = radius;
    } else {
      const double uk1 = std::pow(u, radial_power - 1);
      r = radius * uk1 * u;
      drdu = radius * radial_power * uk1;
    }
    jac = r * drdu;
    return center + std::polar(r, p.y);
  }
};

enum class Shape { Rect, Tri };

struct Cell {
  int chart = 0;
  Shape shape = Shape::Rect;
  // Rect: p0 = lower-left, p1 = upper-right. Tri: vertices, p0 possibly singular.
  Vec2 p0{}, p1{}, p2{};
  bool graded = false;
  int depth = 0;
  Complex value{};
  double err = 0.0;
  double l1 = 0.0;
};

void evaluate(Cell& c, const Chart& chart) {
  const Rule& R = rule();
  const PlaneDensity& f = chart.piece->density;
  Complex k{};
  Complex g{};
  double l1 = 0.0;
  bool finite = true;
  for (int i = 0; i < kNodes; ++i) {
    for (int j = 0; j < kNodes; ++j) {
      Vec2 p;
      double jac_cell;
      if (c.shape == Shape::Rect) {
        const double dx = c.p1.x - c.p0.x;
        const double dy = c.p1.y - c.p0.y;
        p = {c.p0.x + R.t[i] * dx, c.p0.y + R.t[j] * dy};
        jac_cell = dx * dy;
      } else {
        double u = R.t[i];
        double du = 1.0;
        if (c.graded) {
          du = 3.0 * u * u;
          u = u * u * u;
        }
        const double v = R.t[j];
        const Vec2 e1{c.p1.x - c.p0.x, c.p1.y - c.p0.y};
        const Vec2 e2{c.p2.x - c.p1.x, c.p2.y - c.p1.y};
        p = {c.p0.x + u * e1.x + u * v * e2.x, c.p0.y + u * e1.y + u * v * e2.y};
        jac_cell = u * du * std::abs(e1.x * e2.y - e1.y * e2.x);
      }
      double jac_map;
      const Complex z = chart.map(p, jac_map);
      const Complex val = f(z) * (jac_cell * jac_map);
      if (!std::isfinite(val.real()) || !std::isfinite(val.imag())) {
        finite = false;
        continue;
      }
      const double wk = R.wk[i] * R.wk[j];
      k += wk * val;
      l1 += wk * std::abs(val);
      const double wg = R.wg[i] * R.wg[j];
      if (wg != 0.0) {
        g += wg * val;
      }
    }
  }
  c.l1 = l1;
  if (!finite) {
    // A node landed within rounding distance of a singular vertex. Shallow
    // cells must be refined; deep ones are kept with the whole magnitude as
    // their error.
    c.value = k;
    c.err = c.depth < kDeepCell ? std::numeric_limits<double>::infinity() : 2.0 * l1;
    return;
  }
  c.value = k;
  // Raw Kronrod-Gauss difference, floored at accumulated roundoff.
  c.err = std::max(std::abs(k - g), 50.0 * std::numeric_limits<double>::epsilon() * l1);
  }

void split(const Cell& c, std::vector<Cell>& out) {
  Cell child = c;
  child.depth = c.depth + 1;
  if (c.shape == Shape::Rect) {
    const Vec2 m = mid(c.p0, c.p1);
    const std::array<std::array<Vec2, 2>, 4> boxes{{{c.p0, m},
                                                    {Vec2{m.x, c.p0.y}, Vec2{c.p1.x, m.y}},
                                                    {Vec2{c.p0.x, m.y}, Vec2{m.x, c.p1.y}},
                                                    {m, c.p1}}};
    for (const auto& b : boxes) {
      child.p0 = b[0];
      child.p1 = b[1];
      out.push_back(child);
    }
    return;
  }
  const Vec2 m01 = mid(c.p0, c.p1);
  const Vec2 m12 = mid(c.p1, c.p2);
  const Vec2 m02 = mid(c.p0, c.p2);
  // The corner child keeps vertex 0 (and its grading); the rest are regular.
  child.p0 = c.p0;
  child.p1 = m01;
  child.p2 = m02;
  out.push_back(child);
  child.graded = false;
  child.p0 = m01;
  child.p1 = c.p1;
  child.p2 = m12;
  out.push_back(child);
  child.p0 = m02;
  child.p1 = m12;
  child.p2 = c.p2;
  out.push_back(child);
  child.p0 = m12;
  child.p1 = m02;
  child.p2 = m01;
  out.push_back(child);
}

bool in_closed(const Rectangle& r, Vec2 p, double tx, double ty) {
  return p.x >= r.x0 - tx && p.x <= r.x1 + tx && p.y >= r.y0 - ty && p.y <= r.y1 + ty;
}

// Quadtree over the parameter rectangle until every leaf sees at most one
// singular point nearby; leaves are then triangulated around that point.
void build_leaves(const Chart& chart, int chart_index, const Rectangle& r, int depth,
                  std::vector<Cell>& out) {
  const double w = r.x1 - r.x0;
  const double h = r.y1 - r.y0;
  const double tx = 1e-13 * (chart.domain.x1 - chart.domain.x0);
  const double ty = 1e-13 * (chart.domain.y1 - chart.domain.y0);
  int near_count = 0;
  const SingularParam* inside = nullptr;
  for (const auto& s : chart.singular) {
    if (in_closed(r, s.p, 0.25 * w, 0.25 * h)) {
      ++near_count;
    }
    if (in_closed(r, s.p, tx, ty)) {
      inside = &s;
    }
  }
  if (near_count >= 2 && depth < 48) {
    const double xm = 0.5 * (r.x0 + r.x1);
    const double ym = 0.5 * (r.y0 + r.y1);
    build_leaves(chart, chart_index, {r.x0, xm, r.y0, ym}, depth + 1, out);
    build_leaves(chart, chart_index, {xm, r.x1, r.y0, ym}, depth + 1, out);
    build_leaves(chart, chart_index, {r.x0, xm, ym, r.y1}, depth + 1, out);
    build_leaves(chart, chart_index, {xm, r.x1, ym, r.y1}, depth + 1, out);
    return;
  }
  Cell c;
  c.chart = chart_index;
  if (inside == nullptr) {
    c.shape = Shape::Rect;
    c.p0 = {r.x0, r.y0};
    c.p1 = {r.x1, r.y1};
    out.push_back(c);
    return;
  }
  const std::array<Vec2, 4> corners{Vec2{r.x0, r.y0}, Vec2{r.x1, r.y0}, Vec2{r.x1, r.y1},
                                    Vec2{r.x0, r.y1}};
  const Vec2 p{std::clamp(inside->p.x, r.x0, r.x1), std::clamp(inside->p.y, r.y0, r.y1)};
  c.shape = Shape::Tri;
  c.graded = inside->log_kind;
  for (int e = 0; e < 4; ++e) {
    const Vec2 a = corners[e];
    const Vec2 b = corners[(e + 1) % 4];
    if (std::abs(cross(p, a, b)) <= 1e-12 * w * h) {
      continue;
    }
    c.p0 = p;
    c.p1 = a;
    c.p2 = b;
    out.push_back(c);
  }
}

void add_singular(Chart& chart, Vec2 p, bool log_kind) {
  const double sx = 1e-14 * (chart.domain.x1 - chart.domain.x0);
  const double sy = 1e-14 * (chart.domain.y1 - chart.domain.y0);
  for (auto& s : chart.singular) {
    if (std::abs(s.p.x - p.x) <= sx && std::abs(s.p.y - p.y) <= sy) {
      s.log_kind = s.log_kind || log_kind;
      return;
    }
  }
  chart.singular.push_back({p, log_kind});
}

Chart make_chart(const Piece& piece) {
  Chart chart;
  chart.piece = &piece;
  if (const auto* rect = std::get_if<Rectangle>(&piece.region)) {
    chart.domain = *rect;
    const double tol = 1e-12 * std::max(rect->x1 - rect->x0, rect->y1 - rect->y0);
    for (const auto& e : piece.registry.entries()) {
      if (!e.location.is_finite()) {
        continue;
      }
      const Vec2 p{e.location.value.real(), e.location.value.imag()};
      if (in_closed(*rect, p, tol, tol)) {
        add_singular(chart, {std::clamp(p.x, rect->x0, rect->x1), std::clamp(p.y, rect->y0, rect->y1)},
                     e.kind == SingularityKind::Logarithmic);
      }
    }
    return chart;
  }
  const Disk& d = std::get<Disk>(piece.region);
  chart.polar = true;
  chart.center = d.center;
  chart.radius = d.radius;
  chart.domain = {0.0, 1.0, d.theta0, d.theta1};
  const bool full_turn = (d.theta1 - d.theta0) >= 2.0 * kPi - 1e-12;
  bool center_log = false;
  bool center_hit = false;
  std::vector<std::pair<double, double>> polar_points;  // (r/R, theta)
  std::vector<bool> kinds;
  for (const auto& e : piece.registry.entries()) {
    if (!e.location.is_finite()) {
      continue;
    }
    const Complex rel = e.location.value - d.center;
    const double rr = std::abs(rel) / d.radius;
    const bool log_kind = e.kind == SingularityKind::Logarithmic;
    if (rr <= 1e-13) {
      center_hit = true;
      center_log = center_log || log_kind;
      continue;
    }
    if (rr > 1.0 + 1e-12) {
      continue;
    }
    double th = std::arg(rel);
    const double ttol = 1e-12;
    for (double shift : {0.0, 2.0 * kPi, -2.0 * kPi}) {
      const double t = th + shift;
      if (t >= d.theta0 - ttol && t <= d.theta1 + ttol) {
        polar_points.emplace_back(std::min(rr, 1.0), std::clamp(t, d.theta0, d.theta1));
        kinds.push_back(log_kind);
        if (!full_turn) {
          break;
        }
      }
    }
  }
  // A logarithmic singularity at the center is flattened by radial grading.
  chart.radial_power = (center_hit && center_log) ? 3 : 1;
  for (std::size_t i = 0; i < polar_points.size(); ++i) {
    const double u = chart.radial_power == 1 ? polar_points[i].first
                                             : std::cbrt(polar_points[i].first);
    add_singular(chart, {u, polar_points[i].second}, kinds[i]);
  }
  return chart;
}

struct Neumaier {
  double sum = 0.0;
  double comp = 0.0;
  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }
  double result() const { return sum + comp; }
};

void evaluate_all(std::vector<Cell>& cells, std::size_t begin, const std::vector<Chart>& charts) {
  std::exception_ptr failure;
  const long n = static_cast<long>(cells.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (long i = static_cast<long>(begin); i < n; ++i) {
    try {
      evaluate(cells[i], charts[cells[i].chart]);
    } catch (...) {
#pragma omp critical
      failure = std::current_exception();
    }
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
}

}  // namespace

CubatureResult integrate_pieces(const std::vector<Piece>& pieces, const CubatureOptions& opts) {
  std::vector<Chart> charts;
  charts.reserve(pieces.size());
  for (const auto& p : pieces) {
    charts.push_back(make_chart(p));
  }

  std::vector<Cell> cells;
  for (std::size_t ci = 0; ci < charts.size(); ++ci) {
    const Rectangle& dom = charts[ci].domain;
    int nx = 1;
    int ny = 1;
    if (charts[ci].polar) {
      nx = 2;
      ny = std::max(2, static_cast<int>(std::ceil(8.0 * (dom.y1 - dom.y0) / (2.0 * kPi) - 1e-9)));
    }
    for (int iy = 0; iy < ny; ++iy) {
      for (int ix = 0; ix < nx; ++ix) {
        const Rectangle block{dom.x0 + (dom.x1 - dom.x0) * ix / nx,
                              dom.x0 + (dom.x1 - dom.x0) * (ix + 1) / nx,
                              dom.y0 + (dom.y1 - dom.y0) * iy / ny,
                              dom.y0 + (dom.y1 - dom.y0) * (iy + 1) / ny};
        build_leaves(charts[ci], static_cast<int>(ci), block, 0, cells);
      }
    }
  }

  const std::size_t per_cell = static_cast<std::size_t>(kNodes) * kNodes;
  CubatureResult res;
  evaluate_all(cells, 0, charts);
  res.evals = cells.size() * per_cell;

  std::vector<std::size_t> order;
  std::vector<Cell> next;
  while (true) {
    Neumaier re, im, err, l1;
    for (const auto& c : cells) {
      re.add(c.value.real());
      im.add(c.value.imag());
      err.add(c.err);
      l1.add(c.l1);
    }
    res.value = {re.result(), im.result()};
    res.err_abs = std::isfinite(err.sum) ? err.result() : std::numeric_limits<double>::infinity();
    res.l1 = l1.result();
    res.cells = cells.size();
    const double scale = opts.l1_relative ? res.l1 : std::abs(res.value);
    const double target = std::max(opts.abs_tol, opts.rel_tol * scale);
    if (res.err_abs <= target) {
      res.converged = true;
      break;
    }
    if (res.evals >= opts.max_evals) {
      break;
    }

    order.resize(cells.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return cells[a].err > cells[b].err; });
    // Refine the worst cells until they carry half of the excess error.
    const double budget_cells =
        static_cast<double>(opts.max_evals - res.evals) / static_cast<double>(4 * per_cell);
    std::vector<char> chosen(cells.size(), 0);
    double picked = 0.0;
    std::size_t n_chosen = 0;
    for (std::size_t idx : order) {
      if (picked >= 0.5 * res.err_abs || static_cast<double>(n_chosen) >= budget_cells) {
        break;
      }
      if (cells[idx].depth >= kMaxDepth) {
        continue;
      }
      chosen[idx] = 1;
      picked += cells[idx].err;
      ++n_chosen;
    }
    if (n_chosen == 0) {
      break;
    }
    next.clear();
    next.reserve(cells.size() + 3 * n_chosen);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (!chosen[i]) {
        next.push_back(cells[i]);
      }
    }
    const std::size_t first_new = next.size();
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (chosen[i]) {
        split(cells[i], next);
      }
    }
    evaluate_all(next, first_new, charts);
    res.evals += (next.size() - first_new) * per_cell;
    cells.swap(next);
  }
  return res;
}

CubatureResult integrate_2d(const PlaneDensity& f, const Region& region,
                            const SingularityRegistry& registry, const CubatureOptions& opts) {
  return integrate_pieces({Piece{region, f, registry}}, opts);
}

CubatureResult integrate_sphere(const SphereDensity& density, const SingularityRegistry& registry,
                                const CubatureOptions& opts, SphereSector sector) {
  SingularityRegistry near_reg;
  SingularityRegistry far_reg;
  for (const auto& e : registry.entries()) {
    if (!e.location.is_finite()) {
      far_reg.add(Complex{}, e.kind);
      continue;
    }
    const Complex z = e.location.value;
    const double m = std::abs(z);
    if (m <= 1.0 + 1e-12) {
      near_reg.add(z, e.kind);
    }
    if (m >= 1.0 - 1e-12) {
      far_reg.add(1.0 / z, e.kind);
    }
  }
  PlaneDensity far = density.far;
  if (!far) {
    PlaneDensity near = density.near;
    far = [near](Complex w) {
      const double m2 = std::norm(w);
      return near(1.0 / w) / (m2 * m2);
    };
  }
  Disk near_disk;
  Disk far_disk;
  if (sector == SphereSector::UpperHalf) {
    near_disk.theta0 = 0.0;
    near_disk.theta1 = kPi;
    far_disk.theta0 = -kPi;
    far_disk.theta1 = 0.0;
  }
  return integrate_pieces({Piece{near_disk, density.near, near_reg}, Piece{far_disk, far, far_reg}},
                          opts);
}

}  // namespace k3reg::numerics
