#pragma once

#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace k3reg::app {

/// Output could not be written (exit code 2).
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computed result violates a check (exit code 1).
class CheckFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// 17 significant digits, enough to round-trip any double.
std::string format_number(double x);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// alpha,psi,eta,psi_normalized,err_abs,evals
const std::vector<std::string>& psi_schema();

/// Throws CheckFailure if any cell is NaN or infinite, or a row has the
/// wrong width.
void validate(const Table& t);

/// Header line always present.
std::string to_csv(const Table& t);
/// {"columns": [...], "rows": [{column: value, ...}, ...]}
nlohmann::json to_json(const Table& t);

Table parse_csv(const std::string& text);

/// Writes to `path`, or to `fallback` when path is empty.
void write_output(const std::string& content, const std::string& path, std::ostream& fallback);

void emit_csv(const Table& t, const std::string& path, std::ostream& fallback);
void emit_json(const nlohmann::json& j, const std::string& path, std::ostream& fallback);

}  // namespace k3reg::app
