#include "k3reg/numerics/modular.hpp"

#include <cmath>

#include "k3reg/numerics/types.hpp"

namespace k3reg::numerics {

namespace {

constexpr double kTwoPi = 6.283185307179586476925;

double sigma3(std::size_t n) {
  double s = 0.0;
  for (std::size_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      const double a = static_cast<double>(d);
      s += a * a * a;
      const std::size_t e = n / d;
      if (e != d) {
        const double b = static_cast<double>(e);
        s += b * b * b;
      }
    }
  }
  return s;
}

// Relative tail bound after N terms: sigma3(n) <= zeta(3) n^3 bounds the
// Eisenstein tail, sum_{n>N} q^n/(1-q^n) bounds the log of the product tail.
double tail_bound(double q, std::size_t N) {
  const double n1 = static_cast<double>(N + 1);
  const double qn1 = std::pow(q, n1);
  const double e4_tail = 240.0 * 1.2021 * n1 * n1 * n1 * qn1 * 6.0 / std::pow(1.0 - q, 4);
  const double prod_tail = 24.0 * qn1 / ((1.0 - q) * (1.0 - q));
  return 3.0 * e4_tail + prod_tail;
}

double evaluate(double q, std::size_t N) {
  double e4 = 1.0;
  double log_prod = 0.0;
  double qn = 1.0;
  for (std::size_t n = 1; n <= N; ++n) {
    qn *= q;
    e4 += 240.0 * sigma3(n) * qn;
    log_prod += std::log1p(-qn);
  }
  // Delta = q * prod (1 - q^n)^24
  const double delta = q * std::exp(24.0 * log_prod);
  return e4 * e4 * e4 / delta;
}

}  // namespace

JValue j_function_detail(double y) {
  if (!(y >= 1.0)) {
    throw DomainError("j_function: Im tau must be at least 1 for the truncation bound");
  }
  const double q = std::exp(-kTwoPi * y);
  std::size_t N = 1;
  while (tail_bound(q, N) >= 1e-12 && N < 200) {
    ++N;
  }
  const double bound = tail_bound(q, N);
  if (bound >= 1e-12) {
    throw DomainError("j_function: truncation bound not reached");
  }
  return {evaluate(q, N), N, bound};
}

double j_function_truncated(double y, std::size_t terms) {
  if (!(y > 0.0)) {
    throw DomainError("j_function: Im tau must be positive");
  }
  return evaluate(std::exp(-kTwoPi * y), terms);
}

double j_function(double y) { return j_function_detail(y).j; }

double legendre_j(double lambda) {
  const double den = lambda * lambda * (lambda - 1.0) * (lambda - 1.0);
  if (den == 0.0) {
    throw DegenerateParameterError("legendre_j: lambda must avoid 0 and 1");
  }
  const double s = lambda * lambda - lambda + 1.0;
  return 256.0 * s * s * s / den;
}

}  // namespace k3reg::numerics
