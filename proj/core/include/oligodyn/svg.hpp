#pragma once

#include <string>
#include <utility>
#include <vector>

namespace oligodyn {

/// Minimal deterministic SVG chart writer: fixed canvas, linear axes,
/// polyline or scatter series, optional dashed reference lines.
class Chart {
 public:
  Chart(std::string title, std::string x_label, std::string y_label);

  void add_line(std::string label, std::string color,
                std::vector<std::pair<double, double>> points);
  void add_scatter(std::string label, std::string color,
                   std::vector<std::pair<double, double>> points);
  /// Horizontal dashed reference line at the given y.
  void add_hline(double y, std::string color);

  std::string render() const;

 private:
  struct Series {
    std::string label;
    std::string color;
    std::vector<std::pair<double, double>> points;
    bool scatter = false;
  };

  std::string title_, x_label_, y_label_;
  std::vector<Series> series_;
  std::vector<std::pair<double, std::string>> hlines_;
};

}  // namespace oligodyn
