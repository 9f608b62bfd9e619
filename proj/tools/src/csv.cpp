#include "paretotrace/csv.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "pareto/errors.hpp"

namespace pareto::cli {

std::string format_double(double v) {
  char buffer[32];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, v);
  return {buffer, result.ptr};
}

double parse_double(const std::string& text) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (first != last && *first == '+') ++first;
  const auto result = std::from_chars(first, last, v);
  if (result.ec != std::errc{} || result.ptr != last) {
    throw InputError("not a number: '" + text + "'");
  }
  return v;
}

std::vector<std::string> trace_header(Eigen::Index dimension) {
  std::vector<std::string> header{"lambda"};
  for (Eigen::Index i = 1; i <= dimension; ++i) header.push_back("x_" + std::to_string(i));
  for (const char* name : {"J0", "J1", "grad_norm", "min_eig"}) header.emplace_back(name);
  return header;
}

void write_trace_csv(std::ostream& out, const std::vector<TraceRecord>& records) {
  const Eigen::Index n = records.empty() ? 0 : records.front().x.size();
  const auto header = trace_header(n);
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
  out << '\n';
  for (const TraceRecord& r : records) {
    out << format_double(r.lambda);
    for (Eigen::Index i = 0; i < r.x.size(); ++i) out << ',' << format_double(r.x(i));
    out << ',' << format_double(r.j0) << ',' << format_double(r.j1) << ','
        << format_double(r.grad_norm) << ',' << format_double(r.min_eigenvalue) << '\n';
  }
}

std::size_t CsvTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  throw InputError("CSV has no column '" + name + "'");
}

std::vector<double> CsvTable::values(const std::string& name) const {
  const std::size_t c = column(name);
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& row : rows) out.push_back(row[c]);
  return out;
}

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

}  // namespace

CsvTable read_csv(std::istream& in) {
  CsvTable table;
  std::string line;
  if (!std::getline(in, line)) throw InputError("empty CSV");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  table.header = split(line);
  int line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto cells = split(line);
    if (cells.size() != table.header.size()) {
      throw InputError("CSV line " + std::to_string(line_number) + " has " +
                       std::to_string(cells.size()) + " fields, expected " +
                       std::to_string(table.header.size()));
    }
    std::vector<double> row;
    row.reserve(cells.size());
    for (const auto& c : cells) row.push_back(parse_double(c));
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::vector<TraceRecord> records_from_table(const CsvTable& table) {
  const std::size_t width = table.header.size();
  if (width < 5) throw InputError("not a trace CSV");
  const auto n = static_cast<Eigen::Index>(width - 5);
  if (table.header != trace_header(n)) throw InputError("not a trace CSV");
  std::vector<TraceRecord> records;
  for (const auto& row : table.rows) {
    TraceRecord r;
    r.lambda = row[0];
    r.x = Eigen::Map<const Vector>(row.data() + 1, n);
    r.j0 = row[width - 4];
    r.j1 = row[width - 3];
    r.grad_norm = row[width - 2];
    r.min_eigenvalue = row[width - 1];
    records.push_back(std::move(r));
  }
  return records;
}

}  // namespace pareto::cli
