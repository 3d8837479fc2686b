#pragma once

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

#include "ovalkit/geometry.hpp"

namespace ovalkit {

struct SvgStyle {
    std::string stroke = "#000000";
    double stroke_width = 2.0;
    bool dashed = false;
};

struct SvgCurve {
    Polyline polyline;
    SvgStyle style;
};

namespace detail {

inline std::string svg_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

}  // namespace detail

/// Renders polylines as one <path> element each. The joint bounding box is
/// mapped (uniform scale, y up) into a square viewport with a 5% margin.
/// Output is deterministic for fixed input.
inline std::string render_svg(const std::vector<SvgCurve>& curves, int viewport = 800) {
    double min_x = 0.0, max_x = 1.0, min_y = 0.0, max_y = 1.0;
    bool first = true;
    for (const auto& c : curves)
        for (const auto& pt : c.polyline.points) {
            if (first) {
                min_x = max_x = pt.x;
                min_y = max_y = pt.y;
                first = false;
            } else {
                min_x = std::min(min_x, pt.x);
                max_x = std::max(max_x, pt.x);
                min_y = std::min(min_y, pt.y);
                max_y = std::max(max_y, pt.y);
            }
        }
    const double span = std::max({max_x - min_x, max_y - min_y, 1e-12});
    const double margin = 0.05 * viewport;
    const double scale = (viewport - 2.0 * margin) / span;
    // center the drawing in the viewport
    const double off_x = margin + 0.5 * ((viewport - 2.0 * margin) - scale * (max_x - min_x));
    const double off_y = margin + 0.5 * ((viewport - 2.0 * margin) - scale * (max_y - min_y));
    auto map_x = [&](double x) { return off_x + (x - min_x) * scale; };
    auto map_y = [&](double y) { return viewport - (off_y + (y - min_y) * scale); };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(viewport) +
           "\" height=\"" + std::to_string(viewport) + "\" viewBox=\"0 0 " + std::to_string(viewport) +
           " " + std::to_string(viewport) + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
    for (const auto& c : curves) {
        if (c.polyline.points.empty())
            continue;
        out += "<path d=\"";
        for (std::size_t i = 0; i < c.polyline.points.size(); ++i) {
            const auto& pt = c.polyline.points[i];
            out += (i == 0 ? "M " : "L ");
            out += detail::svg_num(map_x(pt.x)) + " " + detail::svg_num(map_y(pt.y)) + " ";
        }
        if (c.polyline.closed)
            out += "Z";
        out += "\" fill=\"none\" stroke=\"" + c.style.stroke + "\" stroke-width=\"" +
               detail::svg_num(c.style.stroke_width) + "\"";
        if (c.style.dashed)
            out += " stroke-dasharray=\"8,6\"";
        out += "/>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace ovalkit
