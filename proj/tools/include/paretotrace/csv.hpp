#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pareto/tracing.hpp"

namespace pareto::cli {

/// Shortest decimal representation that parses back to the same double.
std::string format_double(double v);

/// Parses a number written by format_double (or any decimal/scientific
/// literal, "inf", "nan"). Throws InputError on trailing garbage.
double parse_double(const std::string& text);

/// Header `lambda,x_1..x_n,J0,J1,grad_norm,min_eig`.
std::vector<std::string> trace_header(Eigen::Index dimension);

void write_trace_csv(std::ostream& out, const std::vector<TraceRecord>& records);

/// A numeric CSV file with one header line.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  /// Index of a named column; throws InputError when absent.
  std::size_t column(const std::string& name) const;
  std::vector<double> values(const std::string& name) const;
};

CsvTable read_csv(std::istream& in);

/// Inverse of write_trace_csv.
std::vector<TraceRecord> records_from_table(const CsvTable& table);

}  // namespace pareto::cli
