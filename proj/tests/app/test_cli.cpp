#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "k3reg/app/acceptance.hpp"
#include "k3reg/app/commands.hpp"
#include "k3reg/app/emit.hpp"

using namespace k3reg::app;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"psi"}).code == 2);
  CHECK(run({"psi", "--alpha", "0.3", "--bogus"}).code == 2);
  CHECK(run({"pf", "--suite", "nonsense"}).code == 2);
  CHECK(run({"psi", "--alpha", "1"}).code == 2);
  CHECK(run({"--format", "xml", "psi", "--alpha", "0.3"}).code == 2);
  CHECK(run({"psi", "--alpha", "0.3", "-o", "/nonexistent-dir/x"}).code == 2);
  CHECK(run({"psi-scan", "--steps", "0"}).code == 2);
}

TEST_CASE("help exits with 0") {
  const auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("psi-scan") != std::string::npos);
}

TEST_CASE("psi-scan writes the fixed schema") {
  const std::string path = "k3reg_cli_scan.csv";
  const auto r = run({"psi-scan", "--from", "0.05", "--to", "0.95", "--steps", "19", "--csv", path});
  CHECK(r.code == 0);
  const auto t = parse_csv(slurp(path));
  std::remove(path.c_str());
  CHECK(t.columns == psi_schema());
  REQUIRE(t.rows.size() == 19);
  CHECK(t.rows.front()[0] == doctest::Approx(0.05));
  CHECK(t.rows.back()[0] == doctest::Approx(0.95));
  // psi(alpha) = -psi(1 - alpha)
  CHECK(t.rows[2][1] == doctest::Approx(-t.rows[16][1]).epsilon(1e-5));
}

TEST_CASE("psi in text, csv and json") {
  const auto text = run({"psi", "--alpha", "0.3", "--normalized"});
  CHECK(text.code == 0);
  CHECK(text.out.find("psi_normalized") != std::string::npos);
  const auto csv = run({"--format", "csv", "psi", "--alpha", "0.3"});
  CHECK(csv.code == 0);
  const auto t = parse_csv(csv.out);
  REQUIRE(t.rows.size() == 1);
  CHECK(t.rows[0][1] == doctest::Approx(15.2565).epsilon(1e-4));
  const auto js = run({"psi", "--alpha", "0.3", "--format", "json"});
  CHECK(js.code == 0);
  const auto j = nlohmann::json::parse(js.out);
  CHECK(j["rows"][0]["psi"].get<double>() == t.rows[0][1]);
}

TEST_CASE("eta, limit and appendix checks") {
  CHECK(run({"eta", "--alpha", "0.6"}).code == 0);
  const auto lim = run({"--tol", "1e-5", "limit-check"});
  CHECK(lim.code == 0);
  CHECK(lim.out.find("pass") != std::string::npos);
  const auto apx = run({"appendix", "--eps", "0.05", "--chi", "0.01", "--estat2"});
  CHECK(apx.code == 0);
  CHECK(apx.out.find("(stable)") != std::string::npos);
  CHECK(run({"appendix", "--eps", "0.1", "--chi", "0.05"}).code == 2);
}

TEST_CASE("kummer table and census") {
  const auto r = run({"kummer", "--alpha", "0.5", "--beta", "0.5", "--table", "--census"});
  CHECK(r.code == 0);
  CHECK(r.out.find("I6*") != std::string::npos);
  CHECK(r.out.find("roots of Delta") != std::string::npos);
  const auto j = nlohmann::json::parse(
      run({"kummer", "--alpha", "0.5", "--beta", "0.5", "--format", "json"}).out);
  CHECK(j["table"].size() == 8);
  CHECK(j["census"].size() == 5);
  CHECK(run({"kummer", "--alpha", "0"}).code == 2);
}

TEST_CASE("pf suites") {
  for (const char* s : {"decoupled", "cubic", "quartic", "tensor", "isogeny"}) {
    const auto r = run({"pf", "--suite", s});
    CHECK_MESSAGE(r.code == 0, s);
  }
  const auto j = nlohmann::json::parse(run({"pf", "--suite", "isogeny", "--json"}).out);
  CHECK(j["consistent_scale"].get<double>() == 1728.0);
}

TEST_CASE("kappa command") {
  const auto j = nlohmann::json::parse(run({"kappa", "--rel-tol", "1e-13", "--json"}).out);
  CHECK(j["kappa"].get<double>() == doctest::Approx(0.18411913543205797).epsilon(1e-14));
  CHECK(j["cf_stable_terms"].get<int>() >= 10);
  const auto ext = run({"--precision", "extended", "--rel-tol", "1e-28", "kappa", "--cf-terms", "40"});
  CHECK(ext.code == 0);
  CHECK(ext.out.find("0.18411913543205796573903598849") != std::string::npos);
  // Without --rel-tol the command tightens to near working precision.
  const auto dflt = run({"kappa", "--json"});
  CHECK(dflt.code == 0);
  CHECK(nlohmann::json::parse(dflt.out)["cf_stable_terms"].get<int>() >= 10);
}

TEST_CASE("verify runs selected criteria") {
  const auto r = run({"verify", "--criterion", "2", "--criterion", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("criterion  2 PASS") != std::string::npos);
  CHECK(r.out.find("criterion  3 PASS") != std::string::npos);
  // The monotonicity clause of criterion 8 fails and must be reported.
  const auto bad = run({"verify", "--criterion", "8"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("criterion  8 FAIL") != std::string::npos);
  CHECK(run({"verify", "--criterion", "13"}).code == 2);
}

TEST_CASE("criterion 12 aggregates the others") {
  const auto rep = run_acceptance({12});
  REQUIRE(rep.results.size() == 12);
  const auto& agg = rep.results.back();
  CHECK(agg.id == 12);
  bool others = true;
  for (std::size_t i = 0; i + 1 < rep.results.size(); ++i) others = others && rep.results[i].passed;
  CHECK(agg.passed == (others && rep.seconds < 900.0));
  CHECK_THROWS(run_criterion(12));
}
