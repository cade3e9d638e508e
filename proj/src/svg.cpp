#include "obc/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace obc {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 600.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 25.0;
constexpr double kTop = 50.0;
constexpr double kBottom = 60.0;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

std::string escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string tick_text(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

// Largest of {1, 2, 5} x 10^k not exceeding a practical tick count.
double nice_step(double range, int target_ticks) {
    const double raw = range / static_cast<double>(target_ticks);
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double norm = raw / mag;
    if (norm <= 1.0) return mag;
    if (norm <= 2.0) return 2.0 * mag;
    if (norm <= 5.0) return 5.0 * mag;
    return 10.0 * mag;
}

}  // namespace

std::string render_curves_svg(const std::vector<SvgCurve>& curves, const std::string& x_label,
                              const std::string& y_label, const std::string& title) {
    if (curves.empty()) throw std::invalid_argument("svg: need at least one curve");

    double xmax = 0.0, ymax = 0.0;
    for (const auto& c : curves) {
        if (c.points.empty()) throw std::invalid_argument("svg: curve without points");
        for (const auto& p : c.points) {
            xmax = std::max(xmax, p.x());
            ymax = std::max(ymax, p.y());
        }
    }
    if (xmax <= 0.0) xmax = 1.0;
    if (ymax <= 0.0) ymax = 1.0;
    xmax *= 1.04;
    ymax *= 1.04;

    const double pw = kWidth - kLeft - kRight;
    const double ph = kHeight - kTop - kBottom;
    auto px = [&](double x) { return kLeft + x / xmax * pw; };
    auto py = [&](double y) { return kHeight - kBottom - y / ymax * ph; };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" "
           "viewBox=\"0 0 800 600\">\n";
    svg += "<rect width=\"800\" height=\"600\" fill=\"white\"/>\n";
    svg += "<text x=\"" + num(kWidth / 2) + "\" y=\"28\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"17\">" + escape(title) + "</text>\n";

    // Gridlines and ticks.
    const double xstep = nice_step(xmax, 6);
    const double ystep = nice_step(ymax, 6);
    for (double x = 0.0; x <= xmax * (1.0 + 1e-12); x += xstep) {
        svg += "<line x1=\"" + num(px(x)) + "\" y1=\"" + num(py(0)) + "\" x2=\"" + num(px(x)) +
               "\" y2=\"" + num(kTop) + "\" stroke=\"#e0e0e0\" stroke-width=\"1\"/>\n";
        svg += "<line x1=\"" + num(px(x)) + "\" y1=\"" + num(py(0)) + "\" x2=\"" + num(px(x)) +
               "\" y2=\"" + num(py(0) + 5) + "\" stroke=\"black\" stroke-width=\"1\"/>\n";
        svg += "<text x=\"" + num(px(x)) + "\" y=\"" + num(py(0) + 20) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" +
               tick_text(x) + "</text>\n";
    }
    for (double y = 0.0; y <= ymax * (1.0 + 1e-12); y += ystep) {
        svg += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(py(y)) + "\" x2=\"" +
               num(kWidth - kRight) + "\" y2=\"" + num(py(y)) +
               "\" stroke=\"#e0e0e0\" stroke-width=\"1\"/>\n";
        svg += "<line x1=\"" + num(kLeft - 5) + "\" y1=\"" + num(py(y)) + "\" x2=\"" +
               num(kLeft) + "\" y2=\"" + num(py(y)) + "\" stroke=\"black\" stroke-width=\"1\"/>\n";
        svg += "<text x=\"" + num(kLeft - 9) + "\" y=\"" + num(py(y) + 4) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">" +
               tick_text(y) + "</text>\n";
    }

    // Axes.
    svg += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kTop) + "\" x2=\"" + num(kLeft) +
           "\" y2=\"" + num(py(0)) + "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    svg += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(py(0)) + "\" x2=\"" +
           num(kWidth - kRight) + "\" y2=\"" + num(py(0)) +
           "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    svg += "<text x=\"" + num(kLeft + pw / 2) + "\" y=\"" + num(kHeight - 14) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">" +
           escape(x_label) + "</text>\n";
    svg += "<text x=\"20\" y=\"" + num(kTop + ph / 2) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\" "
           "transform=\"rotate(-90 20 " + num(kTop + ph / 2) + ")\">" + escape(y_label) +
           "</text>\n";

    // Curves.
    for (std::size_t i = 0; i < curves.size(); ++i) {
        const auto& c = curves[i];
        const std::string color =
            c.color.empty() ? kPalette[i % (sizeof(kPalette) / sizeof(kPalette[0]))] : c.color;
        svg += "<polyline fill=\"none\" stroke=\"" + color + "\" stroke-width=\"1.8\"";
        if (!c.dash.empty()) svg += " stroke-dasharray=\"" + c.dash + "\"";
        svg += " points=\"";
        for (const auto& p : c.points) svg += num(px(p.x())) + "," + num(py(p.y())) + " ";
        svg += "\"/>\n";
    }

    // Legend, top right of the plot area.
    const double lx = kWidth - kRight - 240.0;
    double ly = kTop + 16.0;
    for (std::size_t i = 0; i < curves.size(); ++i) {
        const auto& c = curves[i];
        const std::string color =
            c.color.empty() ? kPalette[i % (sizeof(kPalette) / sizeof(kPalette[0]))] : c.color;
        svg += "<line x1=\"" + num(lx) + "\" y1=\"" + num(ly - 4) + "\" x2=\"" + num(lx + 30) +
               "\" y2=\"" + num(ly - 4) + "\" stroke=\"" + color + "\" stroke-width=\"1.8\"";
        if (!c.dash.empty()) svg += " stroke-dasharray=\"" + c.dash + "\"";
        svg += "/>\n";
        svg += "<text x=\"" + num(lx + 38) + "\" y=\"" + num(ly) +
               "\" font-family=\"sans-serif\" font-size=\"13\">" + escape(c.label) + "</text>\n";
        ly += 20.0;
    }

    svg += "</svg>\n";
    return svg;
}

}  // namespace obc
