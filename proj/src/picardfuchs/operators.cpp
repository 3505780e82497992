#include "k3reg/picardfuchs/operators.hpp"

namespace k3reg::picardfuchs {

using numerics::IntPolynomial;
using numerics::RationalFunction;

namespace {

const IntPolynomial kX = IntPolynomial::monomial(1);
IntPolynomial c(long long v) { return IntPolynomial::constant(v); }
IntPolynomial lin(long long root) { return IntPolynomial::linear_root(root); }

RationalFunction ratio(IntPolynomial num, IntPolynomial den) { return {std::move(num), std::move(den)}; }
RationalFunction poly(IntPolynomial num) { return {std::move(num), c(1)}; }

}  // namespace

RationalODE decoupled_operator() {
  RationalODE ode;
  ode.name = "decoupled";
  ode.variable = "j";
  // 72 j (2 (j-1) j f'' + (2j-1) f') - 5 f
  ode.coeffs = {
      poly(c(-5)),
      poly(c(72) * kX * IntPolynomial({-1, 2})),
      poly(c(144) * kX * kX * lin(1)),
  };
  return ode;
}

RationalODE cubic_ode() {
  RationalODE ode;
  ode.name = "cubic_Yt";
  ode.variable = "t";
  const IntPolynomial t64 = lin(-64);
  ode.coeffs = {
      ratio(c(1), c(8) * kX * kX * t64),
      ratio(IntPolynomial({256, 13}), c(4) * kX * kX * t64),
      ratio(c(3) * IntPolynomial({128, 3}), c(2) * kX * t64),
      poly(c(1)),
  };
  return ode;
}

RationalODE quartic_ode() {
  RationalODE ode;
  ode.name = "quartic_sigma1";
  ode.variable = "s";
  const IntPolynomial sm = lin(1);
  const IntPolynomial sp = lin(-1);
  const IntPolynomial s2 = kX * kX;
  ode.coeffs = {
      ratio(c(385) * sm * sm, c(20736) * s2 * s2 * sp * sp),
      ratio(IntPolynomial({-118, -239, 167}), c(36) * s2 * sm * sp * sp),
      ratio(IntPolynomial({-167, -1175, -553, 1031}), c(72) * s2 * sm * sp * sp),
      ratio(c(2) * IntPolynomial({-2, -3, 4}), kX * sm * sp),
      poly(c(1)),
  };
  return ode;
}

std::pair<RationalODE, RationalODE> factor_odes() {
  const IntPolynomial sp = lin(-1);
  RationalODE f1;
  f1.name = "factor1";
  f1.variable = "s";
  f1.coeffs = {
      ratio(c(5), c(144) * kX * sp),
      ratio(IntPolynomial({1, 3}), c(2) * kX * sp),
      poly(c(1)),
  };
  RationalODE f2 = f1;
  f2.name = "factor2";
  f2.coeffs[0] = ratio(c(5), c(144) * kX * kX * sp);
  return {f1, f2};
}

PFSuite pf_suite() {
  auto [f1, f2] = factor_odes();
  return {decoupled_operator(), cubic_ode(), quartic_ode(), std::move(f1), std::move(f2)};
}

}  // namespace k3reg::picardfuchs
