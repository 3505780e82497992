#include "k3reg/app/emit.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

namespace k3reg::app {

std::string format_number(double x) { return fmt::format("{:.17g}", x); }

const std::vector<std::string>& psi_schema() {
  static const std::vector<std::string> s{"alpha", "psi", "eta", "psi_normalized", "err_abs", "evals"};
  return s;
}

void validate(const Table& t) {
  for (const auto& row : t.rows) {
    if (row.size() != t.columns.size()) {
      throw CheckFailure("table row width does not match the header");
    }
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (!std::isfinite(row[i])) {
        throw CheckFailure(fmt::format("non-finite value in column '{}'", t.columns[i]));
      }
    }
  }
}

std::string to_csv(const Table& t) {
  validate(t);
  std::string out;
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    out += (i ? "," : "") + t.columns[i];
  }
  out += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out += (i ? "," : "") + format_number(row[i]);
    }
    out += '\n';
  }
  return out;
}

nlohmann::json to_json(const Table& t) {
  validate(t);
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : t.rows) {
    nlohmann::json r = nlohmann::json::object();
    for (std::size_t i = 0; i < row.size(); ++i) r[t.columns[i]] = row[i];
    rows.push_back(std::move(r));
  }
  return {{"columns", t.columns}, {"rows", rows}};
}

Table parse_csv(const std::string& text) {
  Table t;
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) {
    throw CheckFailure("csv: missing header");
  }
  {
    std::istringstream hs(line);
    std::string cell;
    while (std::getline(hs, cell, ',')) t.columns.push_back(cell);
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string cell;
    std::vector<double> row;
    while (std::getline(ls, cell, ',')) {
      std::size_t used = 0;
      const double v = std::stod(cell, &used);
      if (used != cell.size()) throw CheckFailure("csv: malformed number '" + cell + "'");
      row.push_back(v);
    }
    t.rows.push_back(std::move(row));
  }
  validate(t);
  return t;
}

void write_output(const std::string& content, const std::string& path, std::ostream& fallback) {
  if (path.empty()) {
    fallback << content;
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) {
    throw IoError("cannot open '" + path + "' for writing");
  }
  f << content;
  f.close();
  if (!f) {
    throw IoError("write to '" + path + "' failed");
  }
}

void emit_csv(const Table& t, const std::string& path, std::ostream& fallback) {
  write_output(to_csv(t), path, fallback);
}

namespace {

bool has_nonfinite(const nlohmann::json& j) {
  if (j.is_number_float()) return !std::isfinite(j.get<double>());
  if (j.is_structured()) {
    for (const auto& v : j) {
      if (has_nonfinite(v)) return true;
    }
  }
  return false;
}

}  // namespace

void emit_json(const nlohmann::json& j, const std::string& path, std::ostream& fallback) {
  if (has_nonfinite(j)) {
    throw CheckFailure("json: non-finite value in output");
  }
  write_output(j.dump(2) + "\n", path, fallback);
}

}  // namespace k3reg::app
