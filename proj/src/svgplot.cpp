#include "sco/svgplot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace sco {

namespace {

constexpr double kW = 640, kH = 480;
constexpr double kL = 70, kR = 20, kT = 40, kB = 50;  // margins

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

struct LogRange {
  double lo = 0, hi = 1;  // log10 bounds
  double to_px(double logv, double px0, double px1) const {
    if (hi <= lo) return 0.5 * (px0 + px1);
    return px0 + (logv - lo) / (hi - lo) * (px1 - px0);
  }
};

}  // namespace

std::string loglog_svg(const std::vector<PlotSeries>& series, const std::vector<PlotLine>& lines,
                       const std::string& xlabel, const std::string& ylabel,
                       const std::string& title) {
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (const auto& s : series)
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (s.x[i] <= 0 || s.y[i] <= 0) continue;
      xmin = std::min(xmin, std::log10(s.x[i]));
      xmax = std::max(xmax, std::log10(s.x[i]));
      ymin = std::min(ymin, std::log10(s.y[i]));
      ymax = std::max(ymax, std::log10(s.y[i]));
    }
  if (xmin > xmax) { xmin = 0; xmax = 1; }
  if (ymin > ymax) { ymin = 0; ymax = 1; }
  if (xmax - xmin < 1e-9) { xmin -= 0.5; xmax += 0.5; }
  if (ymax - ymin < 1e-9) { ymin -= 0.5; ymax += 0.5; }
  const LogRange xr{xmin - 0.05 * (xmax - xmin), xmax + 0.05 * (xmax - xmin)};
  const LogRange yr{ymin - 0.08 * (ymax - ymin), ymax + 0.08 * (ymax - ymin)};

  auto px = [&](double lx) { return xr.to_px(lx, kL, kW - kR); };
  auto py = [&](double ly) { return yr.to_px(ly, kH - kB, kT); };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW << "\" height=\"" << kH
     << "\" viewBox=\"0 0 " << kW << " " << kH << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << kW / 2 << "\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">" << title
     << "</text>\n";

  // axes (log scale, decade ticks)
  os << "<line x1=\"" << kL << "\" y1=\"" << kH - kB << "\" x2=\"" << kW - kR << "\" y2=\""
     << kH - kB << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << kL << "\" y1=\"" << kT << "\" x2=\"" << kL << "\" y2=\"" << kH - kB
     << "\" stroke=\"black\"/>\n";
  for (int d = static_cast<int>(std::floor(xr.lo)); d <= static_cast<int>(std::ceil(xr.hi)); ++d) {
    if (d < xr.lo || d > xr.hi) continue;
    const double x = px(d);
    os << "<line x1=\"" << x << "\" y1=\"" << kH - kB << "\" x2=\"" << x << "\" y2=\""
       << kH - kB + 5 << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << x << "\" y=\"" << kH - kB + 18
       << "\" text-anchor=\"middle\" font-size=\"10\">1e" << d << "</text>\n";
  }
  for (int d = static_cast<int>(std::floor(yr.lo)); d <= static_cast<int>(std::ceil(yr.hi)); ++d) {
    if (d < yr.lo || d > yr.hi) continue;
    const double y = py(d);
    os << "<line x1=\"" << kL - 5 << "\" y1=\"" << y << "\" x2=\"" << kL << "\" y2=\"" << y
       << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << kL - 8 << "\" y=\"" << y + 3
       << "\" text-anchor=\"end\" font-size=\"10\">1e" << d << "</text>\n";
  }
  os << "<text x=\"" << kW / 2 << "\" y=\"" << kH - 12
     << "\" text-anchor=\"middle\" font-size=\"12\">" << xlabel << " (log)</text>\n";
  os << "<text x=\"16\" y=\"" << kH / 2 << "\" font-size=\"12\" transform=\"rotate(-90 16 "
     << kH / 2 << ")\" text-anchor=\"middle\">" << ylabel << " (log)</text>\n";

  for (const auto& s : series) {
    std::ostringstream pts;
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (s.x[i] <= 0 || s.y[i] <= 0) continue;
      pts << num(px(std::log10(s.x[i]))) << ',' << num(py(std::log10(s.y[i]))) << ' ';
      if (s.markers)
        os << "<circle cx=\"" << num(px(std::log10(s.x[i]))) << "\" cy=\""
           << num(py(std::log10(s.y[i]))) << "\" r=\"2.5\" fill=\"" << s.color << "\"/>\n";
    }
    if (s.line)
      os << "<polyline points=\"" << pts.str() << "\" fill=\"none\" stroke=\"" << s.color
         << "\" stroke-width=\"1.2\"/>\n";
  }

  double legend_y = kT + 14;
  for (const auto& ln : lines) {
    const double y0 = ln.intercept + ln.slope * xr.lo;
    const double y1 = ln.intercept + ln.slope * xr.hi;
    os << "<line x1=\"" << px(xr.lo) << "\" y1=\"" << py(y0) << "\" x2=\"" << px(xr.hi)
       << "\" y2=\"" << py(y1) << "\" stroke=\"" << ln.color
       << "\" stroke-dasharray=\"6 3\" stroke-width=\"1.2\"/>\n";
    os << "<text x=\"" << kW - kR - 6 << "\" y=\"" << legend_y
       << "\" text-anchor=\"end\" font-size=\"11\" fill=\"" << ln.color << "\">" << ln.label
       << " slope=" << num(ln.slope) << "</text>\n";
    legend_y += 14;
  }
  for (const auto& s : series) {
    if (s.label.empty()) continue;
    os << "<text x=\"" << kW - kR - 6 << "\" y=\"" << legend_y
       << "\" text-anchor=\"end\" font-size=\"11\" fill=\"" << s.color << "\">" << s.label
       << "</text>\n";
    legend_y += 14;
  }

  os << "</svg>\n";
  return os.str();
}

}  // namespace sco
