#include "k3reg/numerics/ode.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/numeric/odeint.hpp>

namespace k3reg::numerics {

namespace {

// Falling factorial (j+k)!/j!.
double falling(int j, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r *= static_cast<double>(j + i);
  return r;
}

std::vector<double> raw_stencil(const std::function<double(double)>& f, double x0, double h,
                                int max_order) {
  const double fm2 = f(x0 - 2 * h);
  const double fm1 = f(x0 - h);
  const double f0 = f(x0);
  const double fp1 = f(x0 + h);
  const double fp2 = f(x0 + 2 * h);
  std::vector<double> d(static_cast<std::size_t>(max_order) + 1, 0.0);
  d[0] = f0;
  if (max_order >= 1) d[1] = (-fp2 + 8 * fp1 - 8 * fm1 + fm2) / (12 * h);
  if (max_order >= 2) d[2] = (-fp2 + 16 * fp1 - 30 * f0 + 16 * fm1 - fm2) / (12 * h * h);
  if (max_order >= 3) d[3] = (fp2 - 2 * fp1 + 2 * fm1 - fm2) / (2 * h * h * h);
  if (max_order >= 4) d[4] = (fp2 - 4 * fp1 + 6 * f0 - 4 * fm1 + fm2) / (h * h * h * h);
  return d;
}

struct LinearSystem {
  const RationalODE* ode;
  void operator()(const std::vector<double>& y, std::vector<double>& dy, double x) const {
    const int n = ode->order();
    const auto c = ode->coefficients_at(x);
    double acc = 0.0;
    for (int k = 0; k < n; ++k) {
      dy[static_cast<std::size_t>(k)] = (k + 1 < n) ? y[static_cast<std::size_t>(k) + 1] : 0.0;
      acc += c[static_cast<std::size_t>(k)] * y[static_cast<std::size_t>(k)];
    }
    dy[static_cast<std::size_t>(n) - 1] = -acc / c[static_cast<std::size_t>(n)];
  }
};

using State = std::vector<double>;
using Stepper = boost::numeric::odeint::runge_kutta_fehlberg78<State>;

void check_interval(const RationalODE& ode, double a, double b) {
  const double lo = std::min(a, b);
  const double hi = std::max(a, b);
  for (double p : ode.poles()) {
    if (p >= lo && p <= hi) {
      throw DomainError("solve_ivp: interval crosses a coefficient pole of " + ode.name);
    }
  }
}

}  // namespace

std::vector<double> stencil_derivatives(const std::function<double(double)>& f, double x0, double h,
                                        int max_order, int levels) {
  if (max_order > 4) {
    throw DomainError("stencil_derivatives: at most fourth derivatives");
  }
  levels = std::max(1, levels);
  std::vector<std::vector<double>> rows;
  for (int l = 0; l < levels; ++l) {
    rows.push_back(raw_stencil(f, x0, h / std::pow(2.0, l), max_order));
  }
  std::vector<double> out(static_cast<std::size_t>(max_order) + 1);
  out[0] = rows[0][0];
  for (int k = 1; k <= max_order; ++k) {
    // Leading error h^4 for the first two derivatives, h^2 for the others.
    const int p0 = (k <= 2) ? 4 : 2;
    std::vector<double> col(static_cast<std::size_t>(levels));
    for (int l = 0; l < levels; ++l) col[static_cast<std::size_t>(l)] = rows[static_cast<std::size_t>(l)][static_cast<std::size_t>(k)];
    for (int m = 1; m < levels; ++m) {
      const double fac = std::pow(2.0, p0 + 2 * (m - 1));
      for (int l = levels - 1; l >= m; --l) {
        col[static_cast<std::size_t>(l)] =
            (fac * col[static_cast<std::size_t>(l)] - col[static_cast<std::size_t>(l) - 1]) / (fac - 1.0);
      }
    }
    out[static_cast<std::size_t>(k)] = col[static_cast<std::size_t>(levels) - 1];
  }
  return out;
}

double ode_residual_from_derivatives(const RationalODE& ode, double x0,
                                     const std::vector<double>& derivs) {
  const auto c = ode.coefficients_at(x0);
  double sum = 0.0;
  double scale = 0.0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    const double term = c[k] * derivs[k];
    sum += term;
    scale += std::abs(term);
  }
  if (scale == 0.0) {
    return 0.0;
  }
  return std::abs(sum) / scale;
}

double ode_residual(const RationalODE& ode, const std::function<double(double)>& f, double x0,
                    double h, int levels) {
  const int n = ode.order();
  if (h <= 0.0) {
    h = ((n <= 2) ? 0.02 : 0.05) * std::max(1.0, std::abs(x0));
  }
  const double dist = ode.pole_distance(x0);
  if (dist <= 1e-12 * std::max(1.0, std::abs(x0))) {
    throw DomainError("ode_residual: x0 is a coefficient pole");
  }
  // Keep the widest stencil well inside the pole-free neighbourhood.
  h = std::min(h, dist / 3.0);
  const auto d = stencil_derivatives(f, x0, h, n, levels);
  return ode_residual_from_derivatives(ode, x0, d);
}

std::vector<double> extend_jet(const RationalODE& ode, double x, const std::vector<double>& initial,
                               int max_order) {
  const int n = ode.order();
  if (static_cast<int>(initial.size()) < n) {
    throw DomainError("extend_jet: need f^(0..n-1)");
  }
  const int extra = std::max(0, max_order - n + 1);
  std::vector<std::vector<double>> c;
  for (const auto& rf : ode.coeffs) c.push_back(rf.series(x, extra));
  std::vector<double> T(static_cast<std::size_t>(std::max(max_order, n - 1)) + 1, 0.0);
  double fact = 1.0;
  for (int i = 0; i < n; ++i) {
    if (i > 0) fact *= i;
    T[static_cast<std::size_t>(i)] = initial[static_cast<std::size_t>(i)] / fact;
  }
  for (int m = 0; m + n <= max_order; ++m) {
    double acc = 0.0;
    for (int k = 0; k <= n; ++k) {
      for (int i = 0; i <= m; ++i) {
        if (k == n && i == 0) continue;
        const int j = m - i;
        acc += c[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] *
               T[static_cast<std::size_t>(j + k)] * falling(j, k);
      }
    }
    T[static_cast<std::size_t>(m + n)] =
        -acc / (c[static_cast<std::size_t>(n)][0] * falling(m, n));
  }
  std::vector<double> out(static_cast<std::size_t>(max_order) + 1);
  fact = 1.0;
  for (int i = 0; i <= max_order; ++i) {
    if (i > 0) fact *= i;
    out[static_cast<std::size_t>(i)] = T[static_cast<std::size_t>(i)] * fact;
  }
  return out;
}

IvpSolution::IvpSolution(const RationalODE& ode, double x0, std::vector<double> y0, double x1,
                         const IvpOptions& opts, int samples)
    : ode_(ode), opts_(opts), a_(x0), b_(x1) {
  if (static_cast<int>(y0.size()) != ode.order()) {
    throw DomainError("solve_ivp: initial state size must equal the ODE order");
  }
  check_interval(ode_, x0, x1);
  samples = std::max(2, samples);
  std::vector<double> times(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    times[static_cast<std::size_t>(i)] = x0 + (x1 - x0) * i / (samples - 1);
  }
  times.back() = x1;
  namespace odeint = boost::numeric::odeint;
  auto stepper = odeint::make_controlled(opts.abs_tol, opts.rel_tol, Stepper());
  State y = std::move(y0);
  odeint::integrate_times(stepper, LinearSystem{&ode_}, y, times.begin(), times.end(),
                          (x1 - x0) / (4.0 * samples), [this](const State& st, double t) {
                            t_.push_back(t);
                            y_.push_back(st);
                          });
}

std::vector<double> IvpSolution::state(double x) const {
  const double lo = std::min(a_, b_);
  const double hi = std::max(a_, b_);
  if (x < lo - 1e-12 * std::max(1.0, std::abs(lo)) || x > hi + 1e-12 * std::max(1.0, std::abs(hi))) {
    throw DomainError("IvpSolution::state: x outside the solved interval");
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < t_.size(); ++i) {
    if (std::abs(t_[i] - x) < std::abs(t_[best] - x)) best = i;
  }
  State y = y_[best];
  if (t_[best] == x) {
    return y;
  }
  namespace odeint = boost::numeric::odeint;
  auto stepper = odeint::make_controlled(opts_.abs_tol, opts_.rel_tol, Stepper());
  const double span = x - t_[best];
  odeint::integrate_adaptive(stepper, LinearSystem{&ode_}, y, t_[best], x, span / 8.0);
  return y;
}

IvpSolution solve_ivp(const RationalODE& ode, double x0, const std::vector<double>& y0, double x1,
                      const IvpOptions& opts, int samples) {
  return IvpSolution(ode, x0, y0, x1, opts, samples);
}

}  // namespace k3reg::numerics
