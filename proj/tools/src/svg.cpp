#include "paretotrace/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

namespace pareto::cli {
namespace {

constexpr std::array<const char*, 6> kPalette{"#1f77b4", "#d62728", "#2ca02c",
                                              "#ff7f0e", "#9467bd", "#8c564b"};
constexpr int kMarginLeft = 80;
constexpr int kMarginRight = 20;
constexpr int kMarginTop = 36;
constexpr int kMarginBottom = 50;

std::string label(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.6g", std::abs(v) < 1e-300 ? 0.0 : v);
  return buffer;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void add(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }

  void finish() {
    if (!(lo <= hi)) {
      lo = 0.0;
      hi = 1.0;
    }
    if (hi - lo <= 1e-12 * std::max(std::abs(lo), std::abs(hi))) {
      const double pad = lo == 0.0 ? 1.0 : 0.05 * std::abs(lo);
      lo -= pad;
      hi += pad;
    }
    const double pad = 0.03 * (hi - lo);
    lo -= pad;
    hi += pad;
  }
};

void write_panel(std::ostream& out, const Panel& panel, int top, int width, int height) {
  Range xr, yr;
  for (const Series& s : panel.series) {
    for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
      if (std::isfinite(s.x[i]) && std::isfinite(s.y[i])) {
        xr.add(s.x[i]);
        yr.add(s.y[i]);
      }
    }
  }
  xr.finish();
  yr.finish();

  const double left = kMarginLeft;
  const double right = width - kMarginRight;
  const double upper = top + kMarginTop;
  const double lower = top + height - kMarginBottom;
  auto px = [&](double v) { return left + (v - xr.lo) / (xr.hi - xr.lo) * (right - left); };
  auto py = [&](double v) { return lower - (v - yr.lo) / (yr.hi - yr.lo) * (lower - upper); };

  out << "<g>\n";
  out << "<text x=\"" << width / 2 << "\" y=\"" << top + 22
      << "\" text-anchor=\"middle\" font-size=\"15\">" << escape(panel.title) << "</text>\n";
  out << "<rect x=\"" << left << "\" y=\"" << upper << "\" width=\"" << right - left
      << "\" height=\"" << lower - upper << "\" fill=\"none\" stroke=\"#000\"/>\n";

  for (double t : nice_ticks(xr.lo, xr.hi)) {
    const double x = px(t);
    out << "<line x1=\"" << x << "\" y1=\"" << lower << "\" x2=\"" << x << "\" y2=\"" << lower + 5
        << "\" stroke=\"#000\"/>\n";
    out << "<text x=\"" << x << "\" y=\"" << lower + 18
        << "\" text-anchor=\"middle\" font-size=\"11\">" << label(t) << "</text>\n";
  }
  for (double t : nice_ticks(yr.lo, yr.hi)) {
    const double y = py(t);
    out << "<line x1=\"" << left - 5 << "\" y1=\"" << y << "\" x2=\"" << left << "\" y2=\"" << y
        << "\" stroke=\"#000\"/>\n";
    out << "<text x=\"" << left - 8 << "\" y=\"" << y + 4
        << "\" text-anchor=\"end\" font-size=\"11\">" << label(t) << "</text>\n";
  }
  out << "<text x=\"" << (left + right) / 2 << "\" y=\"" << lower + 38
      << "\" text-anchor=\"middle\" font-size=\"13\">" << escape(panel.x_label) << "</text>\n";
  out << "<text transform=\"translate(16," << (upper + lower) / 2
      << ") rotate(-90)\" text-anchor=\"middle\" font-size=\"13\">" << escape(panel.y_label)
      << "</text>\n";

  for (std::size_t k = 0; k < panel.series.size(); ++k) {
    const Series& s = panel.series[k];
    const char* color = kPalette[k % kPalette.size()];
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
      if (std::isfinite(s.x[i]) && std::isfinite(s.y[i])) out << px(s.x[i]) << ',' << py(s.y[i]) << ' ';
    }
    out << "\"/>\n";
    for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
      out << "<circle cx=\"" << px(s.x[i]) << "\" cy=\"" << py(s.y[i]) << "\" r=\"2.5\" fill=\""
          << color << "\"/>\n";
    }
    const double ly = upper + 14 + 16 * static_cast<double>(k);
    out << "<line x1=\"" << right - 150 << "\" y1=\"" << ly - 4 << "\" x2=\"" << right - 130
        << "\" y2=\"" << ly - 4 << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << right - 125 << "\" y=\"" << ly << "\" font-size=\"11\">"
        << escape(s.label) << "</text>\n";
  }
  out << "</g>\n";
}

}  // namespace

std::vector<double> nice_ticks(double lo, double hi, int count) {
  if (!(hi > lo) || count < 1) return {lo};
  const double raw = (hi - lo) / count;
  const double magnitude = std::pow(10.0, std::floor(std::log10(raw)));
  double step = magnitude;
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    step = m * magnitude;
    if (step >= raw) break;
  }
  std::vector<double> ticks;
  for (double k = std::ceil(lo / step); k * step <= hi + 1e-9 * step; k += 1.0) {
    ticks.push_back(k * step);
  }
  return ticks;
}

void write_svg(std::ostream& out, const std::vector<Panel>& panels, int width, int panel_height) {
  const int height = panel_height * static_cast<int>(std::max<std::size_t>(panels.size(), 1));
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\" font-family=\"sans-serif\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"#fff\"/>\n";
  for (std::size_t i = 0; i < panels.size(); ++i) {
    write_panel(out, panels[i], static_cast<int>(i) * panel_height, width, panel_height);
  }
  out << "</svg>\n";
}

}  // namespace pareto::cli
