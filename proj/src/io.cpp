#include "lagns/io.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace lagns {

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

std::vector<double> split_numbers(const std::string& line) {
  std::vector<double> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    char* end = nullptr;
    const double x = std::strtod(cell.c_str(), &end);
    if (end == cell.c_str()) throw IoError("malformed number '" + cell + "'");
    out.push_back(x);
  }
  return out;
}

std::ofstream open_for_write(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path + "'");
  return out;
}

}  // namespace

void emit_timeseries(const DiagnosticsReport& report, std::ostream& out) {
  const auto& names = DiagnosticsRow::column_names();
  for (std::size_t c = 0; c < names.size(); ++c) out << (c ? "," : "") << names[c];
  out << '\n';
  for (const auto& row : report.rows) {
    const auto values = row.values();
    for (std::size_t c = 0; c < values.size(); ++c) out << (c ? "," : "") << format_double(values[c]);
    out << '\n';
  }
}

void emit_timeseries(const DiagnosticsReport& report, const std::string& path) {
  auto out = open_for_write(path);
  emit_timeseries(report, out);
  if (!out) throw IoError("write failed for '" + path + "'");
}

std::vector<DiagnosticsRow> read_timeseries(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw IoError("timeseries is empty");
  std::vector<DiagnosticsRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto numbers = split_numbers(line);
    if (numbers.size() != DiagnosticsRow::kColumns) {
      throw IoError("timeseries row has " + std::to_string(numbers.size()) + " columns");
    }
    std::array<double, DiagnosticsRow::kColumns> values{};
    std::copy(numbers.begin(), numbers.end(), values.begin());
    rows.push_back(DiagnosticsRow::from_values(values));
  }
  return rows;
}

void emit_snapshot(const State& state, const Grid& grid, std::ostream& out) {
  out << "# t=" << format_double(state.t) << '\n';
  out << "# cells\n" << "x,v,theta\n";
  for (std::size_t i = 0; i < state.v.size(); ++i) {
    out << format_double(grid.cell_center(i)) << ',' << format_double(state.v[i]) << ','
        << format_double(state.theta[i]) << '\n';
  }
  out << "# nodes\n" << "x,u\n";
  for (std::size_t j = 0; j < state.u.size(); ++j) {
    out << format_double(grid.node(j)) << ',' << format_double(state.u[j]) << '\n';
  }
}

void emit_snapshot(const State& state, const Grid& grid, const std::string& path) {
  auto out = open_for_write(path);
  emit_snapshot(state, grid, out);
  if (!out) throw IoError("write failed for '" + path + "'");
}

Snapshot read_snapshot(std::istream& in) {
  Snapshot snap;
  enum class Section { None, Cells, Nodes } section = Section::None;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind("# t=", 0) == 0) {
      snap.t = std::strtod(line.c_str() + 4, nullptr);
    } else if (line == "# cells") {
      section = Section::Cells;
      std::getline(in, line);  // column header
    } else if (line == "# nodes") {
      section = Section::Nodes;
      std::getline(in, line);
    } else {
      const auto numbers = split_numbers(line);
      if (section == Section::Cells && numbers.size() == 3) {
        snap.x_cells.push_back(numbers[0]);
        snap.v.push_back(numbers[1]);
        snap.theta.push_back(numbers[2]);
      } else if (section == Section::Nodes && numbers.size() == 2) {
        snap.x_nodes.push_back(numbers[0]);
        snap.u.push_back(numbers[1]);
      } else {
        throw IoError("unexpected snapshot line '" + line + "'");
      }
    }
  }
  return snap;
}

}  // namespace lagns
