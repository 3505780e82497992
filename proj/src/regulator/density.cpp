#include "k3reg/regulator/density.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "k3reg/kummer/fiber.hpp"

namespace k3reg::regulator {

namespace {

constexpr double kPi = 3.14159265358979323846;

// |value| of a denominator factor, refusing values inside rounding noise of
// the terms it was formed from.
double factor(Complex value, double scale, const char* what) {
  const double m = std::abs(value);
  if (!(m > 16.0 * std::numeric_limits<double>::epsilon() * scale)) {
    throw SingularPointError(what);
  }
  return m;
}

// Cauchy integral for f'(z0) on a circle of radius h with n trapezoid nodes.
template <class F>
Complex contour_derivative(F&& f, Complex z0, double h, int n) {
  Complex acc{};
  for (int k = 0; k < n; ++k) {
    const Complex w = std::polar(1.0, 2.0 * kPi * k / n);
    acc += f(z0 + h * w) / w;
  }
  return acc / (static_cast<double>(n) * h);
}

}  // namespace

Complex density_general(Complex g, const KummerModuli& m) {
  const Complex a = m.alpha(), b = m.beta();
  const Complex d = m.delta();
  const Complex g2 = g * g, g4 = g2 * g2;
  const Complex a2 = a * a, b2 = b * b;
  const Complex n1 = (a * b2 - b2 - b) * g4 + 2.0 * b * g2 + (a2 * b2 - a2 * b + a - 2.0 * a * b);
  const Complex n2 = (a2 * b2 - a * b2 + b - 2.0 * a * b) * g4 + 2.0 * a * g2 + (a2 * b - a2 - a);
  const char* msg = "density_general: evaluation at a pole";
  const double ag2 = std::abs(g2);
  const Complex c = 1.0 + a - a * b, e = 1.0 + b - a * b, B = a2 * b2 - 3.0 * a * b;
  const double den = factor(g2 - a, ag2 + std::abs(a), msg) * factor(1.0 - b * g2, 1.0 + std::abs(b) * ag2, msg) *
                     factor(g2 - d, ag2 + std::abs(d), msg) * factor(g2 - c, ag2 + std::abs(c), msg) *
                     factor(e * g2 - 1.0, std::abs(e) * ag2 + 1.0, msg) *
                     factor(b * g4 + B * g2 + a, std::abs(b) * ag2 * ag2 + std::abs(B) * ag2 + std::abs(a), msg);
  const double pre = -4.0 * std::abs(a * b - 1.0) / (std::abs(b) * std::abs(1.0 - a));
  return pre * n1 * g * std::conj(n2) / den;
}

Complex density_diagonal(Complex g, Complex a) {
  const Complex g2 = g * g, g4 = g2 * g2;
  const Complex a2 = a * a, a3 = a2 * a;
  const Complex p = a2 - a - 1.0;
  const Complex q = a3 - a2 - 2.0 * a + 1.0;
  const Complex c = 1.0 + a - a2;
  const char* msg = "density_diagonal: evaluation at a pole";
  const double ag2 = std::abs(g2);
  const Complex B = a3 - 3.0 * a;
  const double den = factor(g2 - a, ag2 + std::abs(a), msg) * factor(1.0 - a * g2, 1.0 + std::abs(a) * ag2, msg) *
                     factor(g2 + 1.0, ag2 + 1.0, msg) * factor(g2 - c, ag2 + std::abs(c), msg) *
                     factor(c * g2 - 1.0, std::abs(c) * ag2 + 1.0, msg) *
                     factor(g4 + B * g2 + 1.0, ag2 * ag2 + std::abs(B) * ag2 + 1.0, msg);
  return -4.0 * std::abs(a + 1.0) * (p * g4 + 2.0 * g2 + q) * g * std::conj(q * g4 + 2.0 * g2 + p) / den;
}

std::vector<Complex> pole_squares(const KummerModuli& m) {
  const Complex a = m.alpha(), b = m.beta();
  std::vector<Complex> out{a, 1.0 / b, m.delta(), 1.0 + a - a * b, 1.0 / (1.0 + b - a * b)};
  // beta X^2 + B X + alpha with B = alpha^2 beta^2 - 3 alpha beta
  const Complex B = a * a * b * b - 3.0 * a * b;
  const Complex disc = std::sqrt(B * B - 4.0 * a * b);
  // Stable pair: the larger root from the sign-matched formula, the other by Vieta.
  const Complex big = (-B - (std::real(std::conj(B) * disc) >= 0 ? disc : -disc)) / (2.0 * b);
  out.push_back(big);
  out.push_back(a / (b * big));
  return out;
}

numerics::SingularityRegistry density_registry(const KummerModuli& m) {
  using numerics::SingularityKind;
  numerics::SingularityRegistry reg;
  const auto sq = pole_squares(m);
  for (std::size_t i = 0; i < sq.size(); ++i) {
    const Complex r = std::sqrt(sq[i]);
    // Index 2 is gamma^2 = delta, where the logarithm is singular as well.
    const SingularityKind kind = i == 2 ? SingularityKind::Logarithmic : SingularityKind::InverseModulus;
    reg.add(r, kind);
    reg.add(-r, kind);
  }
  return reg;
}

double log_abs_ratio(Complex g, Complex s) {
  // |g+s|^2 = |g-s|^2 + 4 Re(g conj(s)); the log1p form is exact near the
  // zero set, the direct form near the two logarithmic points.
  const double dm = std::norm(g - s);
  const double t = 4.0 * std::real(g * std::conj(s)) / dm;
  if (std::abs(t) < 0.5) {
    return 0.5 * std::log1p(t);
  }
  return std::log(std::abs(g + s)) - std::log(std::abs(g - s));
}

OracleRoots oracle_roots(Complex g, const KummerModuli& m) {
  const auto p = kummer::fiber_point(g, m);
  if (p.at_infinity || p.xi.infinite) {
    throw SingularPointError("pullback_oracle: fiber point at infinity");
  }
  const Complex a = m.alpha();
  OracleRoots r{p.x, p.y, p.z, std::sqrt(p.x * (p.x - 1.0) * (p.x - a)), {}};
  if (std::abs(r.u) == 0.0) {
    throw SingularPointError("pullback_oracle: branch point of u");
  }
  r.v = r.z * r.x * r.y / r.u;
  return r;
}

Complex pullback_oracle(Complex g, const KummerModuli& m) {
  const auto roots = oracle_roots(g, m);
  if (std::abs(roots.v) == 0.0) {
    throw SingularPointError("pullback_oracle: branch point of v");
  }
  // Contour radius: a third of the distance to the nearest pole of x, y.
  double dist = std::numeric_limits<double>::infinity();
  for (const auto& e : density_registry(m).entries()) {
    dist = std::min(dist, std::abs(g - e.location.value));
  }
  if (dist < 1e-8 * std::max(1.0, std::abs(g))) {
    throw SingularPointError("pullback_oracle: too close to a pole");
  }
  const double h = std::min(dist, std::max(1.0, std::abs(g))) / 3.0;
  auto xf = [&](Complex t) { return kummer::fiber_point(t, m).x; };
  auto yf = [&](Complex t) { return kummer::fiber_point(t, m).y; };
  const Complex dx = contour_derivative(xf, g, h, 48);
  const Complex dy = contour_derivative(yf, g, h, 48);
  return dx / roots.u * std::conj(dy / roots.v);
}

}  // namespace k3reg::regulator
