#include "jointspec/cli/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace jointspec::cli {

OutputFormat parse_output(const std::string& name) {
  if (name == "text") return OutputFormat::text;
  if (name == "csv") return OutputFormat::csv;
  throw std::invalid_argument("unknown output format '" + name + "' (expected text or csv)");
}

namespace {

std::string format(const char* fmt, double x) {
  if (x == 0.0) x = 0.0;  // no "-0"
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, x);
  return buf;
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string exact_number(double x) { return format("%.17g", x); }
std::string short_number(double x) { return format("%.10g", x); }

CheckRow check_row(std::string name, double lhs, double rhs, double tol, bool pass) {
  return {std::move(name), exact_number(lhs), exact_number(rhs), exact_number(std::fabs(lhs - rhs)),
          exact_number(tol), pass ? "true" : "false"};
}

CheckRow value_row(std::string name, const std::string& value) { return {std::move(name), value, "", "", "", ""}; }

void write_csv(std::ostream& os, const std::vector<CheckRow>& rows) {
  os << "name,lhs,rhs,abs_gap,tol,pass\n";
  for (const auto& r : rows)
    os << csv_cell(r.name) << ',' << csv_cell(r.lhs) << ',' << csv_cell(r.rhs) << ',' << csv_cell(r.abs_gap) << ','
       << csv_cell(r.tol) << ',' << csv_cell(r.pass) << '\n';
}

void write_table(std::ostream& os, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (width.size() <= c) width.resize(c + 1, 0);
      width[c] = std::max(width[c], row[c].size());
    }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    os << line << '\n';
  }
}

}  // namespace jointspec::cli
