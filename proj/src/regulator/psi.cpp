#include "k3reg/regulator/psi.hpp"

#include <cmath>
#include <limits>

#include "k3reg/regulator/lattice.hpp"

namespace k3reg::regulator {

namespace {

using numerics::CubatureOptions;
using numerics::SingularityKind;
using numerics::SingularityRegistry;
using numerics::SphereDensity;

const Complex kI{0.0, 1.0};
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// log|zeta| (-2i F): real part integrates to psi, imaginary part to eta.
template <class Density>
Complex pairing_integrand(Complex g, Complex s, Density&& F) {
  try {
    return log_abs_ratio(g, s) * (Complex(0.0, -2.0) * F(g));
  } catch (const SingularPointError&) {
    // Only reachable exactly at a pole; the cell is refined away.
    return {kNaN, kNaN};
  }
}

}  // namespace

PairingResult pairing(const KummerModuli& m, const PsiOptions& opts) {
  const Complex s = m.sqrt_delta();
  SphereDensity dens;
  dens.near = [m, s](Complex g) {
    return pairing_integrand(g, s, [&](Complex t) { return density_general(t, m); });
  };
  CubatureOptions co;
  co.rel_tol = opts.rel_tol;
  co.max_evals = opts.max_evals;
  // psi vanishes at isolated alpha (alpha = 1/2 among them), so the target
  // is taken against the integral of the absolute integrand.
  co.l1_relative = true;
  const auto r = numerics::integrate_sphere(dens, density_registry(m), co);
  PairingResult out;
  out.re_part = r;
  out.re_part.value = r.value.real();
  out.im_part = r;
  out.im_part.value = r.value.imag();
  return out;
}

PsiResult psi(double alpha, const PsiOptions& opts) {
  for (double bad : {0.0, 1.0, -1.0, 2.0}) {
    if (std::abs(alpha - bad) <= 1e-12) {
      throw DomainError("psi: alpha must avoid 0, 1, -1, 2");
    }
  }
  if (!std::isfinite(alpha)) {
    throw DomainError("psi: alpha must be finite");
  }
  const auto m = KummerModuli::diagonal(alpha);
  SphereDensity dens;
  if (opts.use_general) {
    dens.near = [m](Complex g) {
      return pairing_integrand(g, kI, [&](Complex t) { return density_general(t, m); });
    };
  } else {
    dens.near = [alpha](Complex g) {
      return pairing_integrand(g, kI, [&](Complex t) { return density_diagonal(t, alpha); });
    };
  }
  CubatureOptions co;
  co.rel_tol = opts.rel_tol;
  co.max_evals = opts.max_evals;
  // psi vanishes at isolated alpha (alpha = 1/2 among them), so the target
  // is taken against the integral of the absolute integrand.
  co.l1_relative = true;
  const auto r = numerics::integrate_sphere(dens, density_registry(m), co);

  PsiResult out;
  out.alpha = alpha;
  out.psi = r.value.real();
  out.eta = r.value.imag();
  out.err_abs = r.err_abs;
  out.eta_err_abs = r.err_abs;
  out.evals = r.evals;
  out.converged = r.converged;
  out.psi_normalized = out.psi / lattice_area(alpha);
  for (double bad : {0.0, 1.0, -1.0, 2.0}) {
    out.near_excluded = out.near_excluded || std::abs(alpha - bad) < 1e-3;
  }
  return out;
}

double limit_density(Complex g) {
  const Complex g2 = g * g;
  const double a = std::norm(g2 - 1.0);
  const double den = a * std::abs(g2 + 1.0);
  if (den == 0.0) {
    return kNaN;
  }
  return log_abs_ratio(g, kI) * g.imag() / den;
}

LimitResult psi_at_one(double rel_tol, numerics::SphereSector sector) {
  SingularityRegistry reg;
  reg.add(1.0, SingularityKind::InverseModulus);
  reg.add(-1.0, SingularityKind::InverseModulus);
  reg.add(kI, SingularityKind::Logarithmic);
  reg.add(-kI, SingularityKind::Logarithmic);
  SphereDensity dens;
  dens.near = [](Complex g) { return Complex(limit_density(g), 0.0); };
  CubatureOptions co;
  co.rel_tol = rel_tol;
  const auto r = numerics::integrate_sphere(dens, reg, co, sector);
  return {r.value.real(), r.err_abs, r.evals, r.converged};
}

}  // namespace k3reg::regulator
