#pragma once

#include <string>
#include <vector>

namespace stechkin::harness {

struct Series {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
  bool markers = false;
};

/// A self-contained SVG line chart with linear axes and a legend.
std::string line_plot(const std::string& title, const std::string& x_label, const std::string& y_label,
                      const std::vector<Series>& series);

}  // namespace stechkin::harness
