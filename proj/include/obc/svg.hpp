#pragma once

#include <Eigen/Core>

#include <string>
#include <vector>

namespace obc {

struct SvgCurve {
    std::string label;
    std::vector<Eigen::Vector2d> points;
    std::string color;  // any CSS color; empty picks from a default palette
    std::string dash;   // stroke-dasharray value; empty draws solid
};

// Renders an 800x600 standalone plot: axes anchored at the origin, light
// gridlines, tick labels, a legend, and one polyline per curve. The
// output is a complete self-contained SVG document.
std::string render_curves_svg(const std::vector<SvgCurve>& curves, const std::string& x_label,
                              const std::string& y_label, const std::string& title);

}  // namespace obc
