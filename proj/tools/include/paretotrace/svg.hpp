#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pareto::cli {

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

/// One set of linear axes with a legend.
struct Panel {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<Series> series;
};

/// Roughly `count` evenly spaced round tick values covering [lo, hi].
std::vector<double> nice_ticks(double lo, double hi, int count = 5);

/// Self-contained SVG with the panels stacked vertically. Non-finite points
/// are skipped.
void write_svg(std::ostream& out, const std::vector<Panel>& panels, int width = 640,
               int panel_height = 400);

}  // namespace pareto::cli
