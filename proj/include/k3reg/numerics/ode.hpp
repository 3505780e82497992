#pragma once

#include <functional>
#include <vector>

#include "k3reg/numerics/polynomial.hpp"

namespace k3reg::numerics {

struct ResidualOptions {
  /// Base step relative to max(1, |x0|); 0 picks a default for the ODE order.
  double h_rel = 0.0;
  /// Richardson levels (h, h/2, h/4 for 3).
  int levels = 3;
};

/// Central-difference derivatives f^(0..4)(x0) from a 5-point stencil,
/// Richardson-extrapolated over `levels` halvings of h.
std::vector<double> stencil_derivatives(const std::function<double(double)>& f, double x0, double h,
                                        int max_order, int levels);

/// Normalized residual |sum c_k f^(k)| / sum |c_k f^(k)| at x0.
double ode_residual(const RationalODE& ode, const std::function<double(double)>& f, double x0,
                    double h = 0.0, int levels = 3);

/// Same, from exact derivative values f^(0..n).
double ode_residual_from_derivatives(const RationalODE& ode, double x0,
                                     const std::vector<double>& derivs);

/// Given f^(0..n-1)(x) for a solution of `ode`, returns f^(0..max_order)(x)
/// by expanding the ODE in a Taylor series about x.
std::vector<double> extend_jet(const RationalODE& ode, double x, const std::vector<double>& initial,
                               int max_order);

struct IvpOptions {
  double rel_tol = 1e-13;
  double abs_tol = 1e-15;
};

/// Solution of an initial value problem; state = (f, f', ..., f^(n-1)).
class IvpSolution {
 public:
  IvpSolution(const RationalODE& ode, double x0, std::vector<double> y0, double x1,
              const IvpOptions& opts, int samples);

  const std::vector<double>& times() const { return t_; }
  const std::vector<std::vector<double>>& states() const { return y_; }

  /// State at any x in the solved interval, integrated from the nearest sample.
  std::vector<double> state(double x) const;
  double value(double x) const { return state(x)[0]; }

  const RationalODE& ode() const { return ode_; }

 private:
  RationalODE ode_;
  IvpOptions opts_;
  double a_, b_;
  std::vector<double> t_;
  std::vector<std::vector<double>> y_;
};

/// Adaptive Runge-Kutta-Fehlberg 7(8) integration from x0 to x1 with
/// `samples` equally spaced output points (including both ends).
IvpSolution solve_ivp(const RationalODE& ode, double x0, const std::vector<double>& y0, double x1,
                      const IvpOptions& opts = {}, int samples = 65);

}  // namespace k3reg::numerics
