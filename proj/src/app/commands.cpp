#include "k3reg/app/commands.hpp"

#include <cmath>
#include <functional>
#include <map>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "k3reg/app/acceptance.hpp"
#include "k3reg/app/emit.hpp"
#include "k3reg/kummer/census.hpp"
#include "k3reg/numerics/ode.hpp"
#include "k3reg/picardfuchs/isogeny.hpp"
#include "k3reg/picardfuchs/operators.hpp"
#include "k3reg/picardfuchs/period.hpp"
#include "k3reg/picardfuchs/tensor.hpp"
#include "k3reg/regulator/appendix.hpp"
#include "k3reg/regulator/lattice.hpp"
#include "k3reg/regulator/psi.hpp"
#include "k3reg/shioda/kappa.hpp"

namespace k3reg::app {

using nlohmann::json;

namespace {

/// Thrown for semantically invalid arguments that CLI11 cannot detect.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string fmt_point(const SpherePoint& p) {
  if (p.infinite) return "inf";
  return p.value.imag() == 0.0 ? format_number(p.value.real())
                               : fmt::format("{}{:+.17g}i", format_number(p.value.real()),
                                             p.value.imag());
}

std::string fmt_plane(const kummer::PlanePoint& p) {
  if (p.at_infinity) return "(inf, inf)";
  auto c = [](Complex z) {
    return z.imag() == 0.0 ? format_number(z.real())
                           : fmt::format("{}{:+.17g}i", format_number(z.real()), z.imag());
  };
  return "(" + c(p.x) + ", " + c(p.y) + ")";
}

std::vector<double> psi_row(const regulator::PsiResult& r) {
  return {r.alpha, r.psi, r.eta, r.psi_normalized, r.err_abs, static_cast<double>(r.evals)};
}

void emit(const RunConfig& cfg, const json& j, const std::string& text, std::ostream& out) {
  if (cfg.format == Format::Json) {
    emit_json(j, cfg.output, out);
  } else {
    write_output(text, cfg.output, out);
  }
}

// ---------------------------------------------------------------- psi

int cmd_psi(const RunConfig& cfg, double alpha, bool normalized, bool general, std::ostream& out) {
  regulator::PsiOptions o;
  o.rel_tol = cfg.rel_tol;
  o.use_general = general;
  const auto r = regulator::psi(alpha, o);
  Table t{psi_schema(), {psi_row(r)}};
  if (cfg.format == Format::Csv) {
    emit_csv(t, cfg.output, out);
  } else if (cfg.format == Format::Json) {
    json j = to_json(t);
    j["converged"] = r.converged;
    j["near_excluded"] = r.near_excluded;
    emit_json(j, cfg.output, out);
  } else {
    validate(t);
    std::string s = fmt::format("alpha          {}\npsi            {}\neta            {}\n"
                                "err_abs        {}\nevals          {}\nconverged      {}\n",
                                format_number(r.alpha), format_number(r.psi), format_number(r.eta),
                                format_number(r.err_abs), r.evals, r.converged);
    if (normalized) {
      s += fmt::format("lattice_area   {}\npsi_normalized {}\n",
                       format_number(regulator::lattice_area(alpha)),
                       format_number(r.psi_normalized));
    }
    if (r.near_excluded) s += "note: alpha is within 1e-3 of an excluded value\n";
    write_output(s, cfg.output, out);
  }
  return r.converged ? exit_code::kOk : exit_code::kCheckFailed;
}

int cmd_psi_scan(RunConfig cfg, double from, double to, int steps, const std::string& csv,
                 const std::string& json_path, std::ostream& out) {
  if (steps < 1) throw UsageError("--steps must be at least 1");
  if (!csv.empty()) {
    cfg.format = Format::Csv;
    cfg.output = csv;
  } else if (!json_path.empty()) {
    cfg.format = Format::Json;
    cfg.output = json_path;
  }
  regulator::PsiOptions o;
  o.rel_tol = cfg.rel_tol;
  Table t{psi_schema(), {}};
  bool all_converged = true;
  for (int i = 0; i < steps; ++i) {
    const double a = steps == 1 ? from : from + (to - from) * i / (steps - 1);
    const auto r = regulator::psi(a, o);
    all_converged = all_converged && r.converged;
    t.rows.push_back(psi_row(r));
  }
  if (cfg.format == Format::Json) {
    emit_json(to_json(t), cfg.output, out);
  } else {
    // Text and CSV share the schema; text goes to stdout unless redirected.
    emit_csv(t, cfg.output, out);
  }
  return all_converged ? exit_code::kOk : exit_code::kCheckFailed;
}

int cmd_eta(const RunConfig& cfg, double alpha, std::ostream& out) {
  regulator::PsiOptions o;
  o.rel_tol = cfg.rel_tol;
  const auto r = regulator::psi(alpha, o);
  const double bound = std::max(1e-4, 1e-3 * std::abs(r.psi));
  const bool ok = r.converged && std::abs(r.eta) <= bound;
  json j{{"alpha", r.alpha}, {"eta", r.eta}, {"eta_err_abs", r.eta_err_abs}, {"psi", r.psi},
         {"bound", bound}, {"pass", ok}};
  emit(cfg, j,
       fmt::format("alpha {}\neta   {} (err {})\npsi   {}\n|eta| <= {}: {}\n",
                   format_number(alpha), format_number(r.eta), format_number(r.eta_err_abs),
                   format_number(r.psi), format_number(bound), ok ? "yes" : "NO"),
       out);
  return ok ? exit_code::kOk : exit_code::kCheckFailed;
}

int cmd_limit(const RunConfig& cfg, std::ostream& out) {
  const auto whole = regulator::psi_at_one(cfg.rel_tol);
  const auto half = regulator::psi_at_one(cfg.rel_tol, numerics::SphereSector::UpperHalf);
  const double limit = -16.0 * whole.value;
  regulator::PsiOptions o;
  o.rel_tol = cfg.rel_tol;
  json rows = json::array();
  std::string text = fmt::format("I(1)            {}\nupper half      {}\n-16 I(1)        {}\n",
                                 format_number(whole.value), format_number(half.value),
                                 format_number(limit));
  double prev = std::numeric_limits<double>::infinity();
  bool trend = true;
  for (double a : {0.9, 0.95, 0.99}) {
    const auto r = regulator::psi(a, o);
    const double gap = std::abs(r.psi - limit) / std::abs(limit);
    trend = trend && gap < prev;
    prev = gap;
    rows.push_back({{"alpha", a}, {"psi", r.psi}, {"rel_gap", gap}});
    text += fmt::format("psi({:<4})       {}  gap {:.3f}%\n", a, format_number(r.psi), 100 * gap);
  }
  const double sym = std::abs(whole.value - 2.0 * half.value) / whole.value;
  const bool ok = whole.value > 0 && sym < 1e-6 && trend && prev < 0.05;
  text += fmt::format("sphere vs 2 x upper half: {:.2e}\nresult: {}\n", sym, ok ? "pass" : "FAIL");
  emit(cfg, {{"I1", whole.value}, {"upper_half", half.value}, {"limit", limit},
             {"symmetry_rel", sym}, {"approach", rows}, {"pass", ok}},
       text, out);
  return ok ? exit_code::kOk : exit_code::kCheckFailed;
}

int cmd_appendix(const RunConfig& cfg, double eps, double chi, bool estat2, std::ostream& out) {
  const auto r = regulator::appendix_bound_check(eps, chi, cfg.rel_tol);
  const double pe = M_PI * eps;
  json j{{"eps", eps},
         {"chi", chi},
         {"total", r.total},
         {"outside", r.outside},
         {"disk_plus_chi", r.disk_plus_chi},
         {"disk_minus_chi", r.disk_minus_chi},
         {"disk_plus_i", r.disk_plus_i},
         {"disk_minus_i", r.disk_minus_i},
         {"err_abs", r.err_abs},
         {"total_ok", r.total_ok},
         {"pieces_ok", r.pieces_ok}};
  std::string text = fmt::format(
      "eps {}  chi {}\n"
      "total           {:.10g}  = {:.4f} pi eps  (bound 1000)\n"
      "outside disks   {:.10g}  = {:.4f} pi eps  (bound 650)\n"
      "disk +chi       {:.10g}  = {:.4f} pi eps  (bound 40/3)\n"
      "disk -chi       {:.10g}  = {:.4f} pi eps  (bound 40/3)\n"
      "disk +i r3 chi  {:.10g}  = {:.4f} pi eps  (bound 250/3)\n"
      "disk -i r3 chi  {:.10g}  = {:.4f} pi eps  (bound 250/3)\n"
      "total bound {}, piece bounds {}\n",
      eps, chi, r.total, r.total / pe, r.outside, r.outside / pe, r.disk_plus_chi,
      r.disk_plus_chi / pe, r.disk_minus_chi, r.disk_minus_chi / pe, r.disk_plus_i,
      r.disk_plus_i / pe, r.disk_minus_i, r.disk_minus_i / pe, r.total_ok ? "holds" : "VIOLATED",
      r.pieces_ok ? "hold" : "VIOLATED");
  bool ok = r.converged && r.total_ok;
  if (estat2) {
    const auto f = regulator::estat2_divergence({1e-2, 1e-3, 1e-4});
    j["estat2"] = {{"chi", f.chi}, {"value", f.value}, {"C", f.C}, {"D", f.D},
                   {"pair_slopes", f.pair_slopes}, {"stable", f.stable}};
    text += fmt::format("estat2: C = {:.6f}, D = {:.6f}, pair slopes", f.C, f.D);
    for (double s : f.pair_slopes) text += fmt::format(" {:.6f}", s);
    text += f.stable ? " (stable)\n" : " (UNSTABLE)\n";
    ok = ok && f.stable;
  }
  emit(cfg, j, text, out);
  return ok ? exit_code::kOk : exit_code::kCheckFailed;
}

// ---------------------------------------------------------------- kummer

int cmd_kummer(const RunConfig& cfg, Complex alpha, Complex beta, bool table, bool census,
               std::ostream& out) {
  const kummer::KummerModuli m(alpha, beta);
  if (!table && !census) table = census = true;
  json j{{"alpha", {alpha.real(), alpha.imag()}}, {"beta", {beta.real(), beta.imag()}}};
  std::string text;
  bool ok = true;
  if (census) {
    const auto c = kummer::singular_fibers(m);
    json entries = json::array();
    text += "singular fibers:\n";
    for (const auto& e : c.entries) {
      text += fmt::format("  mu = {:<24} {}\n", fmt_point(e.mu), e.kodaira);
      entries.push_back({{"mu", fmt_point(e.mu)}, {"kodaira", e.kodaira},
                         {"multiplicity", e.multiplicity}});
    }
    j["census"] = entries;
  }
  if (table) {
    const auto rows = kummer::special_point_table(m);
    json jr = json::array();
    text += "special points on the mu = 1 fiber:\n";
    for (const auto& r : rows) {
      std::string g, xi;
      for (const auto& p : r.gamma_squared) g += (g.empty() ? "" : " | ") + fmt_point(p);
      for (const auto& p : r.xi_computed) xi += (xi.empty() ? "" : " | ") + fmt_point(p);
      std::string xy;
      for (const auto& p : r.xy_computed) xy += (xy.empty() ? "" : " | ") + fmt_plane(p);
      text += fmt::format("  {:<20} gamma^2 = {:<28} xi = {:<28} (x, y) = {}  err {:.1e}\n",
                          r.label, g, xi, xy, r.max_error);
      jr.push_back({{"label", r.label}, {"gamma_squared", g}, {"xi", xi}, {"xy", xy},
                    {"max_error", r.max_error}});
      ok = ok && r.max_error < 1e-12;
    }
    j["table"] = jr;
  }
  emit(cfg, j, text, out);
  return ok ? exit_code::kOk : exit_code::kCheckFailed;
}

// ---------------------------------------------------------------- pf

std::string describe(const numerics::RationalODE& ode) {
  std::string s = fmt::format("{} (order {}, variable {}):\n", ode.name, ode.order(), ode.variable);
  for (int k = ode.order(); k >= 0; --k) {
    const auto& c = ode.coeffs[static_cast<std::size_t>(k)];
    s += fmt::format("  f^({}) : ({}) / ({})\n", k, c.num.to_string(ode.variable),
                     c.den.to_string(ode.variable));
  }
  std::string poles;
  for (double p : ode.poles()) poles += (poles.empty() ? "" : ", ") + format_number(p);
  s += "  singular points: " + poles + "\n";
  return s;
}

json describe_json(const numerics::RationalODE& ode) {
  json coeffs = json::array();
  for (const auto& c : ode.coeffs) {
    coeffs.push_back({{"num", c.num.to_string(ode.variable)}, {"den", c.den.to_string(ode.variable)}});
  }
  return {{"name", ode.name}, {"variable", ode.variable}, {"order", ode.order()},
          {"coefficients_low_to_high", coeffs}, {"singular_points", ode.poles()}};
}

int cmd_pf(const RunConfig& cfg, const std::string& suite, std::ostream& out) {
  json j{{"suite", suite}};
  std::string text;
  bool ok = true;
  if (suite == "decoupled") {
    const auto ode = picardfuchs::decoupled_operator();
    text += describe(ode);
    j["operator"] = describe_json(ode);
    json rows = json::array();
    text += "  j      normalized period      residual    control (unnormalized)\n";
    for (double jv : {2.0, 5.0, 10.0}) {
      const double f = picardfuchs::normalized_period(jv);
      const double r = numerics::ode_residual(ode, picardfuchs::normalized_period, jv);
      const double c = numerics::ode_residual(ode, picardfuchs::real_period, jv);
      ok = ok && r < 1e-5 && c > 1e-3;
      text += fmt::format("  {:<6} {:<22} {:.2e}    {:.2e}\n", jv, format_number(f), r, c);
      rows.push_back({{"j", jv}, {"normalized_period", f}, {"residual", r}, {"control", c}});
    }
    j["residuals"] = rows;
  } else if (suite == "cubic") {
    const auto ode = picardfuchs::cubic_ode();
    text += describe(ode);
    j["operator"] = describe_json(ode);
  } else if (suite == "quartic") {
    const auto s = picardfuchs::pf_suite();
    for (const auto* ode : {&s.quartic_sigma1, &s.factor1, &s.factor2}) {
      text += describe(*ode);
      j["operators"].push_back(describe_json(*ode));
    }
  } else if (suite == "tensor") {
    const auto rep = picardfuchs::tensor_product_check();
    picardfuchs::TensorOptions bad;
    bad.second_from_first_operator = true;
    const auto ctl = picardfuchs::tensor_product_check(bad);
    ok = rep.max_residual < 1e-6 && ctl.max_residual > 1e-3;
    text += fmt::format(
        "tensor product on s in [0.1, 0.5], {} points\n  max residual {:.2e}\n"
        "  negative control (second factor from the wrong operator) {:.2e}\n",
        rep.grid.size(), rep.max_residual, ctl.max_residual);
    j["grid"] = rep.grid;
    j["residuals"] = rep.residuals;
    j["max_residual"] = rep.max_residual;
    j["control_max_residual"] = ctl.max_residual;
  } else if (suite == "isogeny") {
    const auto grid = picardfuchs::two_isogeny_grid({1.1, 1.3, 1.5, 1.7, 2.0});
    picardfuchs::IsogenyOptions po;
    po.j2_perturbation = 1.01;
    json pts = json::array();
    text += "  tau     scale   J1                 J2                 t                   "
            "sigma residual   perturbed\n";
    for (const auto& p : grid.points) {
      const auto pert = picardfuchs::two_isogeny_check(p.y, po);
      for (std::size_t k = 0; k < p.scales.size(); ++k) {
        const auto& s = p.scales[k];
        text += fmt::format("  {:<4}i   {:<6}  {:<18.12g} {:<18.12g} {:<19.12g} {:<16.2e} {:.2e}\n",
                            p.y, s.scale, s.J1, s.J2, s.best_t, s.sigma_residual,
                            pert.scales[k].sigma_residual);
        pts.push_back({{"y", p.y}, {"scale", s.scale}, {"J1", s.J1}, {"J2", s.J2},
                       {"t", s.best_t}, {"sigma_residual", s.sigma_residual},
                       {"perturbed_residual", pert.scales[k].sigma_residual}, {"matched", s.matched}});
        ok = ok && pert.scales[k].sigma_residual > 1e-3;
      }
    }
    ok = ok && grid.consistent_scale != 0.0;
    text += grid.consistent_scale != 0.0
                ? fmt::format("consistent scaling: J = j / {}\n", grid.consistent_scale)
                : std::string("no consistent scaling\n");
    j["points"] = pts;
    j["consistent_scale"] = grid.consistent_scale;
  } else {
    throw UsageError("unknown suite '" + suite + "'");
  }
  j["pass"] = ok;
  emit(cfg, j, text, out);
  return ok ? exit_code::kOk : exit_code::kCheckFailed;
}

// ---------------------------------------------------------------- kappa

int cmd_kappa(const RunConfig& cfg, const std::string& strategy, int cf_terms, std::ostream& out) {
  shioda::KappaOptions o;
  o.rel_tol = cfg.rel_tol;
  o.precision = cfg.precision;
  o.strategy = strategy == "extrapolation" ? shioda::TailStrategy::Extrapolation
                                           : shioda::TailStrategy::Substitution;
  const auto r = shioda::kappa(o);
  // The expansion is compared against the other precision.
  shioda::KappaOptions other = o;
  if (o.precision == Precision::Double) {
    other.precision = Precision::Extended;
    other.rel_tol = std::min(1e-28, o.rel_tol);
  } else {
    other.precision = Precision::Double;
    other.rel_tol = std::max(1e-13, o.rel_tol);
  }
  other.strategy = shioda::TailStrategy::Substitution;
  const auto r2 = shioda::kappa(other);
  const auto& lo = o.precision == Precision::Double ? r : r2;
  const auto& hi = o.precision == Precision::Double ? r2 : r;
  const auto cf = shioda::kappa_cf_report(lo, hi, static_cast<std::size_t>(cf_terms));
  const auto& terms = o.precision == Precision::Double ? cf.terms_low : cf.terms_high;
  std::string terms_s;
  for (long long t : terms) terms_s += (terms_s.empty() ? "" : ", ") + std::to_string(t);
  const int digits = o.precision == Precision::Double ? 17 : 34;
  const std::string kappa_s = r.kappa_q.str(digits);
  json j{{"numerator", r.numerator},
         {"denominator", r.denominator},
         {"kappa", r.kappa},
         {"kappa_digits", kappa_s},
         {"kappa_err", r.kappa_err},
         {"precision", o.precision == Precision::Double ? "double" : "extended"},
         {"strategy", strategy},
         {"evals", r.evals},
         {"converged", r.converged},
         {"cf_terms", terms},
         {"cf_stable_terms", cf.stable_terms},
         {"disclaimer", cf.disclaimer}};
  std::string text = fmt::format(
      "numerator   {}\ndenominator {}\nkappa       {}\nerr         {:.2e}\n"
      "cf          [{}]\nstable cf terms across precisions: {}\n{}\n",
      format_number(r.numerator), format_number(r.denominator), kappa_s, r.kappa_err, terms_s,
      cf.stable_terms, cf.disclaimer);
  emit(cfg, j, text, out);
  return r.converged && r.kappa > 0 ? exit_code::kOk : exit_code::kCheckFailed;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const RunConfig& cfg, bool all, std::vector<int> ids, std::ostream& out) {
  if (all || ids.empty()) {
    ids.clear();
    for (int i = 1; i <= kCriteriaCount; ++i) ids.push_back(i);
  }
  AcceptanceOptions o;
  o.seed = cfg.seed;
  const auto rep = run_acceptance(ids, o);
  json rows = json::array();
  std::string text;
  for (const auto& r : rep.results) {
    text += format_result_line(r) + "\n";
    rows.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed},
                    {"seconds", r.seconds}, {"detail", r.detail}});
  }
  text += fmt::format("{} in {:.1f} s\n", rep.all_passed ? "ALL PASS" : "SOME CRITERIA FAILED",
                      rep.seconds);
  emit(cfg, {{"criteria", rows}, {"all_passed", rep.all_passed}, {"seconds", rep.seconds}}, text,
       out);
  return rep.all_passed ? exit_code::kOk : exit_code::kCheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"k3lab: regulator, Picard-Fuchs and Shioda-Inose computations"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string precision = "double";
  std::string format = "text";
  auto* tol_opt = app.add_option("--rel-tol,--tol", cfg.rel_tol, "relative tolerance")
                      ->check(CLI::PositiveNumber);
  app.add_option("--precision", precision, "double or extended")
      ->check(CLI::IsMember({"double", "extended"}));
  app.add_option("--format", format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--output,-o", cfg.output, "output file (default: standard output)");
  app.add_option("--seed", cfg.seed, "seed for randomized checks");

  std::function<int()> action;

  double alpha = 0.5;
  bool normalized = false, general = false;
  auto* psi = app.add_subcommand("psi", "psi(alpha) and eta(alpha) on the diagonal family");
  psi->add_option("--alpha", alpha)->required();
  psi->add_flag("--normalized", normalized, "also print the lattice-normalized value");
  psi->add_flag("--general", general, "evaluate through the general density");
  psi->callback([&] { action = [&] { return cmd_psi(cfg, alpha, normalized, general, out); }; });

  double from = 0.05, to = 0.95;
  int steps = 19;
  std::string csv_path, json_path;
  auto* scan = app.add_subcommand("psi-scan", "psi over an equally spaced alpha grid");
  scan->add_option("--from", from);
  scan->add_option("--to", to);
  scan->add_option("--steps", steps);
  scan->add_option("--csv", csv_path, "write CSV to this file");
  scan->add_option("--json", json_path, "write JSON to this file");
  scan->callback([&] {
    action = [&] { return cmd_psi_scan(cfg, from, to, steps, csv_path, json_path, out); };
  });

  auto* eta = app.add_subcommand("eta", "eta(alpha) and the vanishing check");
  eta->add_option("--alpha", alpha)->required();
  eta->callback([&] { action = [&] { return cmd_eta(cfg, alpha, out); }; });

  auto* limit = app.add_subcommand("limit-check", "the alpha = 1 limit integral");
  limit->callback([&] { action = [&] { return cmd_limit(cfg, out); }; });

  double eps = 0.1, chi = 0.02;
  bool estat2 = false;
  auto* apx = app.add_subcommand("appendix", "local bound near gamma = 1");
  apx->add_option("--eps", eps);
  apx->add_option("--chi", chi);
  apx->add_flag("--estat2", estat2, "also fit the logarithmic divergence near alpha = 2");
  apx->callback([&] { action = [&] { return cmd_appendix(cfg, eps, chi, estat2, out); }; });

  double a_re = 0.5, a_im = 0.0, b_re = 0.5, b_im = 0.0;
  bool table = false, census = false;
  auto* kum = app.add_subcommand("kummer", "fiber census and special-point table");
  kum->add_option("--alpha", a_re);
  kum->add_option("--alpha-im", a_im);
  kum->add_option("--beta", b_re);
  kum->add_option("--beta-im", b_im);
  kum->add_flag("--table", table);
  kum->add_flag("--census", census);
  kum->callback([&] {
    action = [&] {
      return cmd_kummer(cfg, Complex(a_re, a_im), Complex(b_re, b_im), table, census, out);
    };
  });

  std::string suite;
  bool pf_json = false;
  auto* pf = app.add_subcommand("pf", "Picard-Fuchs operators and checks");
  pf->add_option("--suite", suite)
      ->required()
      ->check(CLI::IsMember({"decoupled", "cubic", "quartic", "tensor", "isogeny"}));
  pf->add_flag("--json", pf_json);
  pf->callback([&] {
    action = [&] {
      if (pf_json) cfg.format = Format::Json;
      return cmd_pf(cfg, suite, out);
    };
  });

  std::string strategy = "substitution";
  int cf_terms = 40;
  bool kappa_json = false;
  auto* kap = app.add_subcommand("kappa", "the ratio kappa on the rank-20 slice");
  kap->add_option("--strategy", strategy)->check(CLI::IsMember({"substitution", "extrapolation"}));
  kap->add_option("--cf-terms", cf_terms)->check(CLI::Range(1, 200));
  kap->add_flag("--json", kappa_json);
  kap->callback([&] {
    action = [&] {
      if (kappa_json) cfg.format = Format::Json;
      // The expansion is only meaningful near working precision.
      if (tol_opt->count() == 0) {
        cfg.rel_tol = cfg.precision == Precision::Double ? 1e-13 : 1e-28;
      }
      return cmd_kappa(cfg, strategy, cf_terms, out);
    };
  });

  bool verify_all = false;
  std::vector<int> criteria;
  auto* ver = app.add_subcommand("verify", "run acceptance criteria");
  ver->add_flag("--all", verify_all);
  ver->add_option("--criterion", criteria, "criterion number (repeatable)")
      ->check(CLI::Range(1, kCriteriaCount));
  ver->callback([&] { action = [&] { return cmd_verify(cfg, verify_all, criteria, out); }; });

  // CLI11 takes a vector of arguments in reverse order.
  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::kOk : exit_code::kUsage;
  }
  cfg.precision = precision == "extended" ? Precision::Extended : Precision::Double;
  cfg.format = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Text;
  for (const auto* sub : app.get_subcommands()) cfg.command = sub->get_name();

  try {
    return action();
  } catch (const UsageError& e) {
    fmt::print(err, "usage error: {}\n", e.what());
    return exit_code::kUsage;
  } catch (const IoError& e) {
    fmt::print(err, "i/o error: {}\n", e.what());
    return exit_code::kUsage;
  } catch (const CheckFailure& e) {
    fmt::print(err, "check failed: {}\n", e.what());
    return exit_code::kCheckFailed;
  } catch (const DomainError& e) {
    fmt::print(err, "invalid argument: {}\n", e.what());
    return exit_code::kUsage;
  }
}

}  // namespace k3reg::app
