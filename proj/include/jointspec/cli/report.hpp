#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace jointspec::cli {

enum class OutputFormat { text, csv };

OutputFormat parse_output(const std::string& name);

/// One row of the CSV schema shared by every command.
struct CheckRow {
  std::string name;
  std::string lhs;
  std::string rhs;
  std::string abs_gap;
  std::string tol;
  std::string pass;
};

CheckRow check_row(std::string name, double lhs, double rhs, double tol, bool pass);
/// Row that only carries a value (no comparison).
CheckRow value_row(std::string name, const std::string& value);

void write_csv(std::ostream& os, const std::vector<CheckRow>& rows);

/// Space-aligned table; the first row is the header.
void write_table(std::ostream& os, const std::vector<std::vector<std::string>>& rows);

/// Shortest round-trip representation (%.17g) for CSV cells.
std::string exact_number(double x);
/// Compact representation (%.10g) for text reports.
std::string short_number(double x);

}  // namespace jointspec::cli
