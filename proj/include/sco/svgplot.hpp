#pragma once

#include <string>
#include <vector>

namespace sco {

struct PlotSeries {
  std::vector<double> x, y;
  std::string label;
  std::string color = "#1f77b4";
  bool line = true;
  bool markers = true;
};

// Straight line in log10-log10 space: log10 y = intercept + slope * log10 x.
struct PlotLine {
  double slope = 0.0;
  double intercept = 0.0;
  std::string label;
  std::string color = "#d62728";
};

// Self-contained log-log SVG: decade ticks, point clouds, overlay lines with
// slope annotations.
std::string loglog_svg(const std::vector<PlotSeries>& series, const std::vector<PlotLine>& lines,
                       const std::string& xlabel, const std::string& ylabel,
                       const std::string& title);

}  // namespace sco
