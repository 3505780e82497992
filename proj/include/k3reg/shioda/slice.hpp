#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "k3reg/numerics/types.hpp"

namespace k3reg::shioda {

/// Parameters of the rank-20 slice; P(theta) = 4 theta^3 - 3a theta - b and
/// Q_theta(w) = w^2 + 2 P(theta) w + 1.
struct ThetaSlice {
  double a = 1.0;
  double b = 0.0;

  template <class Real>
  Real P(Real theta) const {
    return 4 * theta * theta * theta - 3 * Real(a) * theta - Real(b);
  }
  template <class Real>
  Real Q(Real theta, Real w) const {
    return w * w + 2 * P(theta) * w + 1;
  }
  bool is_standard() const { return a == 1.0 && b == 0.0; }
};

template <class Real>
struct QRoots {
  Real r_minus{};
  Real r_plus{};
  /// sqrt(P^2 - 1), half the gap between the roots.
  Real d{};
  bool real = true;
};

/// Roots of Q_theta ordered r_minus <= r_plus; r_minus r_plus = 1. For the
/// standard slice P^2 - 1 = (theta^2 - 1)(4 theta^2 - 1)^2 is used, with
/// theta - 1 passed separately when known more accurately than theta.
template <class Real>
QRoots<Real> q_roots(Real theta, const ThetaSlice& s, Real theta_minus_one) {
  using std::abs;
  using std::sqrt;
  QRoots<Real> r;
  const Real P = s.P(theta);
  Real disc;
  if (s.is_standard()) {
    const Real f = (2 * theta + 1) * (2 * theta - 1);
    disc = theta_minus_one * (theta + 1) * f * f;
  } else {
    disc = (P - 1) * (P + 1);
  }
  if (disc < 0) {
    r.real = false;
    r.r_minus = r.r_plus = -P;
    r.d = sqrt(-disc);
    return r;
  }
  r.d = sqrt(disc);
  if (P >= 0) {
    r.r_minus = -P - r.d;
    r.r_plus = 1 / r.r_minus;
  } else {
    r.r_plus = -P + r.d;
    r.r_minus = 1 / r.r_plus;
  }
  return r;
}

template <class Real>
QRoots<Real> q_roots(Real theta, const ThetaSlice& s = {}) {
  return q_roots<Real>(theta, s, theta - 1);
}

/// Real theta with P(theta)^2 = 1, with multiplicity (1 or 2).
std::vector<std::pair<double, int>> singular_thetas(const ThetaSlice& s = {});

/// mu = q theta + p.
inline double theta_to_mu(double theta, double p = 3.0, double q = -2.0) { return q * theta + p; }

struct JConsistency {
  double J_alpha;
  double J_beta;
  /// J_alpha + J_beta - (a^3 - b^2 + 1)
  double sum_residual;
  /// J_alpha J_beta - a^3
  double product_residual;
};

/// J(E_lambda) = j_Legendre(lambda) / 1728.
double legendre_J(double lambda);

JConsistency j_consistency(double alpha, double beta, double a, double b);

/// (a^3, b^2) determined by the two relations.
std::pair<double, double> ab_from_legendre(double alpha, double beta);

}  // namespace k3reg::shioda
