#pragma once

#include <string>
#include <vector>

namespace azpp {

struct Series {
    std::string label;
    std::vector<double> xs;
    std::vector<double> ys;
};

// Static line chart as a standalone SVG document; one polyline per series,
// labeled axes, legend on the right. Deterministic output.
std::string line_chart_svg(const std::string& title, const std::string& x_label,
                           const std::string& y_label, const std::vector<Series>& series);

// Heatmap of values[row][col] with a diverging palette centered at zero;
// row r maps to y_values[r], col c to x_values[c].
std::string heatmap_svg(const std::string& title, const std::string& x_label,
                        const std::string& y_label, const std::vector<double>& x_values,
                        const std::vector<double>& y_values,
                        const std::vector<std::vector<double>>& values);

}  // namespace azpp
