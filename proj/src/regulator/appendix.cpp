#include "k3reg/regulator/appendix.hpp"

#include <cmath>

#include "k3reg/numerics/cubature.hpp"
#include "k3reg/regulator/fit.hpp"

namespace k3reg::regulator {

namespace {

using numerics::CubatureOptions;
using numerics::Disk;
using numerics::SingularityKind;
using numerics::SingularityRegistry;

constexpr double kPi = 3.14159265358979323846;
const double kSqrt3 = std::sqrt(3.0);

SingularityRegistry appendix_registry(double chi) {
  SingularityRegistry reg;
  const double c2 = chi * chi;
  for (double p : {chi + c2, chi - c2, -(chi + c2), -(chi - c2)}) {
    reg.add(p, SingularityKind::InverseModulus);
  }
  reg.add(Complex(0.0, kSqrt3 * chi), SingularityKind::InverseModulus);
  reg.add(Complex(0.0, -kSqrt3 * chi), SingularityKind::InverseModulus);
  return reg;
}

}  // namespace

double appendix_integrand(Complex z, double chi) {
  const double c2 = chi * chi;
  const double num = std::abs(z - 3.0 * chi) * std::abs(z + 3.0 * chi) * std::abs(z + chi) *
                     std::abs(z - chi) * std::abs(z);
  const double den = std::abs(z - (chi + c2)) * std::abs(z - (chi - c2)) * std::abs(z + (chi + c2)) *
                     std::abs(z + (chi - c2)) * std::abs(z - Complex(0.0, kSqrt3 * chi)) *
                     std::abs(z + Complex(0.0, kSqrt3 * chi));
  return num / den;
}

AppendixReport appendix_bound_check(double eps, double chi, double rel_tol) {
  if (!(chi > 0.0) || !(chi < eps / 3.0) || !(eps / 3.0 <= 1.0 / 6.0)) {
    throw DomainError("appendix_bound_check: need 0 < chi < eps/3 <= 1/6");
  }
  const auto reg = appendix_registry(chi);
  CubatureOptions co;
  co.rel_tol = rel_tol;
  auto f = [chi](Complex z) { return Complex(appendix_integrand(z, chi), 0.0); };

  AppendixReport rep;
  rep.eps = eps;
  rep.chi = chi;
  rep.converged = true;
  auto run = [&](Disk d) {
    const auto r = numerics::integrate_2d(f, d, reg, co);
    rep.err_abs += r.err_abs;
    rep.evals += r.evals;
    rep.converged = rep.converged && r.converged;
    return r.value.real();
  };
  rep.total = run(Disk{0.0, eps});
  rep.disk_plus_chi = run(Disk{chi, chi / 2});
  rep.disk_minus_chi = run(Disk{-chi, chi / 2});
  rep.disk_plus_i = run(Disk{Complex(0.0, kSqrt3 * chi), chi / 2});
  rep.disk_minus_i = run(Disk{Complex(0.0, -kSqrt3 * chi), chi / 2});
  rep.outside = rep.total - rep.disk_plus_chi - rep.disk_minus_chi - rep.disk_plus_i - rep.disk_minus_i;

  rep.total_ok = rep.total <= 1000.0 * kPi * eps;
  rep.pieces_ok = rep.outside <= 650.0 * kPi * eps && rep.disk_plus_chi <= 80.0 / 3.0 * kPi * eps &&
                  rep.disk_minus_chi <= 80.0 / 3.0 * kPi * eps && rep.disk_plus_i <= 250.0 / 3.0 * kPi * eps &&
                  rep.disk_minus_i <= 250.0 / 3.0 * kPi * eps;
  return rep;
}

double estat2_integrand(Complex z, double chi) {
  const double r = std::sqrt(chi);
  const double a = std::norm(z + Complex(0.0, 3.0 * r)) * std::norm(z - Complex(0.0, 3.0 * r));
  const double den = std::abs(z) * std::abs(z + 3.0 * chi) * std::abs(z - 3.0 * chi) * std::abs(z - 3.0 * r) *
                     std::abs(z + 3.0 * r);
  return a * std::log(std::abs(z)) / den;
}

Estat2Value estat2_value(double chi, double radius, double rel_tol) {
  if (!(chi > 0.0) || !(radius > 0.0)) {
    throw DomainError("estat2_value: chi and radius must be positive");
  }
  SingularityRegistry reg;
  reg.add(0.0, SingularityKind::Logarithmic);
  const double r = std::sqrt(chi);
  for (double p : {3.0 * chi, -3.0 * chi, 3.0 * r, -3.0 * r}) {
    reg.add(p, SingularityKind::InverseModulus);
  }
  CubatureOptions co;
  co.rel_tol = rel_tol;
  const auto res = numerics::integrate_2d([chi](Complex z) { return Complex(estat2_integrand(z, chi), 0.0); },
                                          Disk{0.0, radius}, reg, co);
  return {res.value.real(), res.err_abs, res.evals, res.converged};
}

DivergenceFit fit_log_divergence(const std::vector<double>& chi, const std::vector<double>& value) {
  const LogFit lf = asymptotic_fit(chi, value, 0.0);
  DivergenceFit out;
  out.chi = chi;
  out.value = value;
  out.C = -lf.A;
  out.D = lf.B;
  bool ok = out.C != 0.0;
  for (double s : lf.pair_slopes) {
    out.pair_slopes.push_back(-s);
    ok = ok && std::abs(-s - out.C) <= 0.15 * std::abs(out.C);
  }
  out.stable = ok;
  return out;
}

DivergenceFit estat2_divergence(const std::vector<double>& chi, double rel_tol) {
  std::vector<double> v;
  for (double c : chi) {
    v.push_back(estat2_value(c, 0.5, rel_tol).value);
  }
  return fit_log_divergence(chi, v);
}

}  // namespace k3reg::regulator
