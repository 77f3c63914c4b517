#include "oligodyn/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace oligodyn {

namespace {

constexpr double kWidth = 860.0;
constexpr double kHeight = 540.0;
constexpr double kLeft = 72.0;
constexpr double kRight = 830.0;
constexpr double kTop = 48.0;
constexpr double kBottom = 486.0;

std::string fmt(double v, const char* spec = "%.2f") {
  char buf[48];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char ch : text) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += ch;
    }
  }
  return out;
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void include(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void finalize() {
    if (lo > hi) {
      lo = 0.0;
      hi = 1.0;
    }
    if (lo == hi) {
      const double pad = lo == 0.0 ? 1.0 : std::abs(lo) * 0.1;
      lo -= pad;
      hi += pad;
    }
    const double pad = (hi - lo) * 0.05;
    lo -= pad;
    hi += pad;
  }
};

}  // namespace

Chart::Chart(std::string title, std::string x_label, std::string y_label)
    : title_(std::move(title)), x_label_(std::move(x_label)), y_label_(std::move(y_label)) {}

void Chart::add_line(std::string label, std::string color,
                     std::vector<std::pair<double, double>> points) {
  series_.push_back({std::move(label), std::move(color), std::move(points), false});
}

void Chart::add_scatter(std::string label, std::string color,
                        std::vector<std::pair<double, double>> points) {
  series_.push_back({std::move(label), std::move(color), std::move(points), true});
}

void Chart::add_hline(double y, std::string color) {
  hlines_.push_back({y, std::move(color)});
}

std::string Chart::render() const {
  Range xr, yr;
  for (const Series& s : series_) {
    for (const auto& [x, y] : s.points) {
      xr.include(x);
      yr.include(y);
    }
  }
  for (const auto& [y, color] : hlines_) yr.include(y);
  xr.finalize();
  yr.finalize();

  const auto px = [&](double x) {
    return kLeft + (x - xr.lo) / (xr.hi - xr.lo) * (kRight - kLeft);
  };
  const auto py = [&](double y) {
    return kBottom - (y - yr.lo) / (yr.hi - yr.lo) * (kBottom - kTop);
  };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(kWidth, "%.0f") +
         "\" height=\"" + fmt(kHeight, "%.0f") + "\" viewBox=\"0 0 " + fmt(kWidth, "%.0f") +
         " " + fmt(kHeight, "%.0f") + "\">\n";
  svg += "<rect width=\"" + fmt(kWidth, "%.0f") + "\" height=\"" + fmt(kHeight, "%.0f") +
         "\" fill=\"white\"/>\n";
  svg += "<text x=\"" + fmt(kWidth / 2) + "\" y=\"28\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"16\">" + escape(title_) + "</text>\n";

  // gridlines and tick labels, 6 per axis
  for (int k = 0; k <= 5; ++k) {
    const double fx = xr.lo + (xr.hi - xr.lo) * k / 5.0;
    const double fy = yr.lo + (yr.hi - yr.lo) * k / 5.0;
    svg += "<line x1=\"" + fmt(px(fx)) + "\" y1=\"" + fmt(kTop) + "\" x2=\"" + fmt(px(fx)) +
           "\" y2=\"" + fmt(kBottom) + "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    svg += "<line x1=\"" + fmt(kLeft) + "\" y1=\"" + fmt(py(fy)) + "\" x2=\"" + fmt(kRight) +
           "\" y2=\"" + fmt(py(fy)) + "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    svg += "<text x=\"" + fmt(px(fx)) + "\" y=\"" + fmt(kBottom + 18.0) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" +
           fmt(fx, "%.6g") + "</text>\n";
    svg += "<text x=\"" + fmt(kLeft - 8.0) + "\" y=\"" + fmt(py(fy) + 4.0) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" +
           fmt(fy, "%.6g") + "</text>\n";
  }

  for (const auto& [y, color] : hlines_) {
    svg += "<line x1=\"" + fmt(kLeft) + "\" y1=\"" + fmt(py(y)) + "\" x2=\"" + fmt(kRight) +
           "\" y2=\"" + fmt(py(y)) + "\" stroke=\"" + color +
           "\" stroke-width=\"1\" stroke-dasharray=\"6 4\"/>\n";
  }

  for (const Series& s : series_) {
    if (s.scatter) {
      for (const auto& [x, y] : s.points) {
        svg += "<circle cx=\"" + fmt(px(x)) + "\" cy=\"" + fmt(py(y)) +
               "\" r=\"1.4\" fill=\"" + s.color + "\"/>\n";
      }
    } else if (!s.points.empty()) {
      svg += "<polyline fill=\"none\" stroke=\"" + s.color +
             "\" stroke-width=\"1.4\" points=\"";
      for (std::size_t k = 0; k < s.points.size(); ++k) {
        if (k) svg += " ";
        svg += fmt(px(s.points[k].first)) + "," + fmt(py(s.points[k].second));
      }
      svg += "\"/>\n";
    }
  }

  // frame and axis labels
  svg += "<rect x=\"" + fmt(kLeft) + "\" y=\"" + fmt(kTop) + "\" width=\"" +
         fmt(kRight - kLeft) + "\" height=\"" + fmt(kBottom - kTop) +
         "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
  svg += "<text x=\"" + fmt((kLeft + kRight) / 2.0) + "\" y=\"" + fmt(kHeight - 12.0) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" +
         escape(x_label_) + "</text>\n";
  svg += "<text x=\"18\" y=\"" + fmt((kTop + kBottom) / 2.0) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
         "transform=\"rotate(-90 18 " + fmt((kTop + kBottom) / 2.0) + ")\">" +
         escape(y_label_) + "</text>\n";

  // legend, top right corner of the frame
  double ly = kTop + 16.0;
  for (const Series& s : series_) {
    if (s.label.empty()) continue;
    svg += "<line x1=\"" + fmt(kRight - 150.0) + "\" y1=\"" + fmt(ly - 4.0) + "\" x2=\"" +
           fmt(kRight - 126.0) + "\" y2=\"" + fmt(ly - 4.0) + "\" stroke=\"" + s.color +
           "\" stroke-width=\"3\"/>\n";
    svg += "<text x=\"" + fmt(kRight - 120.0) + "\" y=\"" + fmt(ly) +
           "\" font-family=\"sans-serif\" font-size=\"12\">" + escape(s.label) + "</text>\n";
    ly += 16.0;
  }

  svg += "</svg>\n";
  return svg;
}

}  // namespace oligodyn
