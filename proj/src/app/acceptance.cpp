#include "k3reg/app/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <set>

#include <fmt/format.h>

#include "k3reg/kummer/census.hpp"
#include "k3reg/kummer/fiber.hpp"
#include "k3reg/numerics/ode.hpp"
#include "k3reg/picardfuchs/isogeny.hpp"
#include "k3reg/picardfuchs/operators.hpp"
#include "k3reg/picardfuchs/period.hpp"
#include "k3reg/picardfuchs/tensor.hpp"
#include "k3reg/regulator/appendix.hpp"
#include "k3reg/regulator/density.hpp"
#include "k3reg/regulator/fit.hpp"
#include "k3reg/regulator/psi.hpp"
#include "k3reg/shioda/kappa.hpp"
#include "k3reg/shioda/slice.hpp"

namespace k3reg::app {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool passed;
  std::string detail;
};

Outcome kummer_identities(std::uint64_t seed) {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::normal_distribution<double> n(0.0, 1.0);
  double worst_i1 = 0.0, worst_q = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const kummer::KummerModuli m(Complex(u(rng), u(rng)), Complex(u(rng), u(rng)));
    const auto p = kummer::fiber_point(Complex(n(rng), n(rng)), m);
    worst_i1 = std::max(worst_i1, kummer::i1_residual(p, m));
    worst_q = std::max(worst_q, kummer::quartic_residual(p, m));
  }
  const double t = since(t0);
  return {worst_i1 < 1e-10 && worst_q < 1e-10 && t < 5.0,
          fmt::format("max i1 residual {:.2e}, max quartic residual {:.2e}, {:.2f} s", worst_i1,
                      worst_q, t)};
}

Outcome special_table() {
  double worst = 0.0;
  std::size_t rows = 0;
  for (auto [a, b] : {std::pair<Complex, Complex>{0.5, 0.5}, {0.3, 0.6}, {Complex(0.4, 0.1), 0.7}}) {
    const auto table = kummer::special_point_table(kummer::KummerModuli(a, b));
    rows = table.size();
    for (const auto& r : table) worst = std::max(worst, r.max_error);
    if (rows != 8) break;
  }
  return {rows == 8 && worst < 1e-12,
          fmt::format("{} rows, max deviation {:.2e} over three moduli", rows, worst)};
}

Outcome census_and_theta() {
  const auto census = kummer::singular_fibers(kummer::KummerModuli::diagonal(0.5));
  std::multiset<std::pair<double, std::string>> got;
  std::multiset<std::pair<double, int>> census_mult;
  for (const auto& e : census.entries) {
    if (!e.mu.is_finite()) continue;
    const double mu = e.mu.value.real();
    const double rounded = std::round(mu);
    if (std::abs(mu - rounded) > 1e-12 || std::abs(e.mu.value.imag()) > 1e-12) {
      return {false, fmt::format("census value {} is not an integer", mu)};
    }
    got.insert({rounded, e.kodaira});
    census_mult.insert({rounded, e.multiplicity});
  }
  const std::multiset<std::pair<double, std::string>> want{
      {1, "I2"}, {2, "I4"}, {4, "I4"}, {5, "I2"}};
  std::multiset<std::pair<double, int>> image;
  for (const auto& [th, m] : shioda::singular_thetas()) image.insert({shioda::theta_to_mu(th), m});
  const bool exact_map = shioda::theta_to_mu(1.0) == 1.0 && shioda::theta_to_mu(-1.0) == 5.0 &&
                         shioda::theta_to_mu(0.5) == 2.0 && shioda::theta_to_mu(-0.5) == 4.0;
  return {got == want && image == census_mult && exact_map,
          fmt::format("census {{1 I2, 2 I4, 4 I4, 5 I2}} {}, theta image {}",
                      got == want ? "matches" : "differs",
                      image == census_mult && exact_map ? "matches" : "differs")};
}

Outcome oracle(std::uint64_t seed) {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  int tested = 0, skipped = 0;
  double worst = 0.0;
  while (tested < 200) {
    const kummer::KummerModuli m(Complex(u(rng), u(rng)), Complex(u(rng), u(rng)));
    const Complex g(u(rng), u(rng));
    Complex o;
    try {
      o = regulator::pullback_oracle(g, m);
    } catch (const SingularPointError&) {
      ++skipped;
      continue;
    }
    const Complex F = regulator::density_general(g, m);
    worst = std::max(worst, std::abs(std::abs(F) - std::abs(o)) / std::abs(o));
    ++tested;
  }
  const double t = since(t0);
  return {worst < 1e-8 && t < 10.0,
          fmt::format("200 points ({} near-singular draws skipped), max rel error {:.2e}, {:.2f} s",
                      skipped, worst, t)};
}

Outcome eta_vanishing() {
  bool ok = true;
  std::string d;
  for (double a : {0.3, 0.6, 0.8}) {
    const auto r = regulator::psi(a);
    const bool pass = r.converged && std::abs(r.eta) <= std::max(1e-4, 1e-3 * std::abs(r.psi));
    ok = ok && pass;
    d += fmt::format("{}eta({})={:.1e}", d.empty() ? "" : ", ", a, r.eta);
  }
  return {ok, d};
}

Outcome limit_at_one() {
  const auto t0 = Clock::now();
  const double tol = 1e-5;
  const auto whole = regulator::psi_at_one(tol);
  const auto half = regulator::psi_at_one(tol, numerics::SphereSector::UpperHalf);
  const double limit = -16.0 * whole.value;
  const double sym = std::abs(whole.value - 2.0 * half.value) / whole.value;
  regulator::PsiOptions po;
  po.rel_tol = tol;
  double prev = std::numeric_limits<double>::infinity();
  bool trend = true;
  double last = 0.0;
  for (double a : {0.9, 0.95, 0.99}) {
    const auto r = regulator::psi(a, po);
    const double gap = std::abs(r.psi - limit);
    trend = trend && r.converged && gap < prev;
    prev = gap;
    last = r.psi;
  }
  const double rel_gap = prev / std::abs(limit);
  const double t = since(t0);
  return {whole.value > 0 && sym < 1e-6 && trend && rel_gap < 0.05 && t < 300.0,
          fmt::format("I(1)={:.10f}, sphere/2xUHP dev {:.1e}, psi(0.99)={:.4f} vs {:.4f} "
                      "({:.2f}%), {:.2f} s",
                      whole.value, sym, last, limit, 100.0 * rel_gap, t)};
}

Outcome appendix() {
  bool ok = true;
  std::string d;
  for (auto [eps, chi] : {std::pair{0.1, 0.02}, std::pair{0.05, 0.01}}) {
    const auto r = regulator::appendix_bound_check(eps, chi);
    ok = ok && r.converged && r.total_ok;
    d += fmt::format("total/(pi eps)={:.3f} at ({}, {}); ", r.total / (M_PI * eps), eps, chi);
  }
  const auto f = regulator::estat2_divergence({1e-2, 1e-3, 1e-4});
  ok = ok && f.stable && f.C != 0.0;
  d += fmt::format("estat2 C={:.3f} slopes {:.3f}, {:.3f}", f.C, f.pair_slopes.at(0),
                   f.pair_slopes.at(1));
  return {ok, d};
}

Outcome asymptotics() {
  auto normalized = [](double a) {
    const auto r = regulator::psi(a);
    return r.psi_normalized;
  };
  auto fit_at = [&](double c, double sign) {
    std::vector<double> a, v;
    for (int k = 2; k <= 4; ++k) {
      a.push_back(c + sign * std::pow(10.0, -k));
      v.push_back(normalized(a.back()));
    }
    return regulator::asymptotic_fit(a, v, c);
  };
  const auto f2 = fit_at(2.0, 1.0);
  const auto fm1 = fit_at(-1.0, 1.0);
  const bool fits = f2.A != 0.0 && f2.residual_rel < 0.1 && fm1.A != 0.0 && fm1.residual_rel < 0.1;
  const double n1 = normalized(0.1), n2 = normalized(0.05), n3 = normalized(0.02);
  const bool monotone = n1 > n2 && n2 > n3 && n3 > 0.0;
  return {fits && monotone,
          fmt::format("fit at 2: A={:.4f} res {:.1e}; fit at -1: A={:.4f} res {:.1e}; "
                      "normalized psi at 0.1, 0.05, 0.02 = {:.5f}, {:.5f}, {:.5f} ({})",
                      f2.A, f2.residual_rel, fm1.A, fm1.residual_rel, n1, n2, n3,
                      monotone ? "monotone" : "not monotone")};
}

Outcome picard_fuchs() {
  const auto ode = picardfuchs::decoupled_operator();
  double worst = 0.0, control = std::numeric_limits<double>::infinity();
  for (double j : {2.0, 5.0, 10.0}) {
    worst = std::max(worst, numerics::ode_residual(ode, picardfuchs::normalized_period, j));
    control = std::min(control, numerics::ode_residual(ode, picardfuchs::real_period, j));
  }
  const auto tensor = picardfuchs::tensor_product_check();
  picardfuchs::TensorOptions bad;
  bad.second_from_first_operator = true;
  const auto tensor_bad = picardfuchs::tensor_product_check(bad);
  return {worst < 1e-5 && tensor.max_residual < 1e-6 && control > 1e-3 &&
              tensor_bad.max_residual > 1e-3,
          fmt::format("decoupled residual {:.1e} (control {:.1e}), tensor residual {:.1e} "
                      "(control {:.1e})",
                      worst, control, tensor.max_residual, tensor_bad.max_residual)};
}

Outcome isogeny() {
  const std::vector<double> ys{1.1, 1.3, 1.5, 1.7, 2.0};
  const auto grid = picardfuchs::two_isogeny_grid(ys);
  double worst = 0.0;
  for (const auto& p : grid.points) {
    for (const auto& s : p.scales) {
      if (s.scale == grid.consistent_scale) worst = std::max(worst, s.sigma_residual);
    }
  }
  picardfuchs::IsogenyOptions o;
  o.j2_perturbation = 1.01;
  double control = std::numeric_limits<double>::infinity();
  for (const auto& p : picardfuchs::two_isogeny_grid(ys, o).points) {
    for (const auto& s : p.scales) control = std::min(control, s.sigma_residual);
  }
  return {grid.consistent_scale != 0.0 && worst < 1e-6 && control > 1e-3,
          fmt::format("scale j/{} matches at all five points (max residual {:.1e}); "
                      "perturbed control min residual {:.1e}",
                      grid.consistent_scale, worst, control)};
}

Outcome kappa_check() {
  const auto t0 = Clock::now();
  shioda::KappaOptions a;
  shioda::KappaOptions b;
  b.strategy = shioda::TailStrategy::Extrapolation;
  const auto ra = shioda::kappa(a);
  const auto rb = shioda::kappa(b);
  shioda::KappaOptions e;
  e.precision = Precision::Extended;
  e.rel_tol = 1e-28;
  const auto re = shioda::kappa(e);
  const auto cf = shioda::kappa_cf_report(ra, re, 40);
  const double agree = std::abs(ra.kappa - rb.kappa) / ra.kappa;
  const auto jc = shioda::j_consistency(0.5, 0.5, 1.0, 0.0);
  const double jres = std::max(std::abs(jc.sum_residual), std::abs(jc.product_residual));
  const double t = since(t0);
  return {ra.converged && rb.converged && agree < 1e-6 && ra.kappa > 0 && cf.stable_terms >= 10 &&
              jres < 1e-12 && t < 300.0,
          fmt::format("kappa={:.15f}, strategies agree to {:.1e}, {} stable cf terms, "
                      "J residual {:.1e}, {:.2f} s",
                      ra.kappa, agree, cf.stable_terms, jres, t)};
}

const char* title(int id) {
  static const char* titles[] = {
      "",
      "Kummer identity suite",
      "special-point table",
      "fiber census and theta map",
      "pullback oracle",
      "eta vanishing",
      "limit at alpha = 1",
      "appendix bounds and estat2 divergence",
      "asymptotics and normalized psi",
      "Picard-Fuchs residuals",
      "two-isogeny",
      "kappa",
      "full verification run",
  };
  return titles[id];
}

}  // namespace

CriterionResult run_criterion(int id, const AcceptanceOptions& opts) {
  CriterionResult r;
  r.id = id;
  if (id < 1 || id > 11) {
    throw DomainError(fmt::format("run_criterion: no criterion {}", id));
  }
  r.title = title(id);
  const auto t0 = Clock::now();
  Outcome o{false, ""};
  try {
    switch (id) {
      case 1: o = kummer_identities(opts.seed); break;
      case 2: o = special_table(); break;
      case 3: o = census_and_theta(); break;
      case 4: o = oracle(opts.seed); break;
      case 5: o = eta_vanishing(); break;
      case 6: o = limit_at_one(); break;
      case 7: o = appendix(); break;
      case 8: o = asymptotics(); break;
      case 9: o = picard_fuchs(); break;
      case 10: o = isogeny(); break;
      case 11: o = kappa_check(); break;
    }
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  r.passed = o.passed;
  r.detail = o.detail;
  r.seconds = since(t0);
  return r;
}

AcceptanceReport run_acceptance(const std::vector<int>& ids, const AcceptanceOptions& opts) {
  std::set<int> wanted(ids.begin(), ids.end());
  for (int id : wanted) {
    if (id < 1 || id > kCriteriaCount) {
      throw DomainError(fmt::format("run_acceptance: no criterion {}", id));
    }
  }
  const bool aggregate = wanted.count(12) > 0;
  if (aggregate) {
    for (int i = 1; i <= 11; ++i) wanted.insert(i);
  }
  AcceptanceReport rep;
  const auto t0 = Clock::now();
  for (int id : wanted) {
    if (id == 12) continue;
    rep.results.push_back(run_criterion(id, opts));
  }
  rep.seconds = since(t0);
  if (aggregate) {
    CriterionResult r;
    r.id = 12;
    r.title = title(12);
    r.seconds = rep.seconds;
    std::string failing;
    for (const auto& c : rep.results) {
      if (!c.passed) failing += (failing.empty() ? "" : ",") + std::to_string(c.id);
    }
    r.passed = failing.empty() && rep.seconds < 900.0;
    r.detail = fmt::format("criteria 1-11 in {:.1f} s, exit code {}{}", rep.seconds,
                           r.passed ? 0 : 1, failing.empty() ? "" : " (failing: " + failing + ")");
    rep.results.push_back(r);
  }
  rep.all_passed = std::all_of(rep.results.begin(), rep.results.end(),
                               [](const CriterionResult& c) { return c.passed; });
  return rep;
}

std::string format_result_line(const CriterionResult& r) {
  return fmt::format("criterion {:>2} {} {:<40} {:8.2f} s  {}", r.id, r.passed ? "PASS" : "FAIL",
                     r.title, r.seconds, r.detail);
}

}  // namespace k3reg::app
