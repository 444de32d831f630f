#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "lagns/grid.hpp"
#include "lagns/run.hpp"

namespace lagns {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Header row then one comma-separated row per DiagnosticsRow, 17 significant digits.
void emit_timeseries(const DiagnosticsReport& report, std::ostream& out);
void emit_timeseries(const DiagnosticsReport& report, const std::string& path);
std::vector<DiagnosticsRow> read_timeseries(std::istream& in);

/// Two header-tagged sections: "# cells" with x,v,theta and "# nodes" with x,u.
void emit_snapshot(const State& state, const Grid& grid, std::ostream& out);
void emit_snapshot(const State& state, const Grid& grid, const std::string& path);

struct Snapshot {
  double t = 0.0;
  std::vector<double> x_cells, v, theta;
  std::vector<double> x_nodes, u;
};
Snapshot read_snapshot(std::istream& in);

/// "%.17g" formatting so values survive a text round trip bit-exactly.
std::string format_double(double x);

}  // namespace lagns
